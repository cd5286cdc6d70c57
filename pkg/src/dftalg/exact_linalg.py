"""Gaussian elimination over Q(zeta_M)."""
from __future__ import annotations

from .cyclo import CycloScalar
from .matrix import ExactMatrix

__all__ = ["Echelon", "exact_rank", "nullspace", "rank"]


class Echelon:
    """Row echelon form grown one row at a time.

    Pivot rows are scaled to a leading 1.  Adding a row reduces it against
    the existing pivots in column order and keeps whatever is left as a
    new pivot, so the rank is known after every insertion.
    """

    def __init__(self, ncols: int, zero: CycloScalar):
        self.ncols = ncols
        self.zero = zero
        self.pivots: dict[int, list[CycloScalar]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: list[CycloScalar]) -> list[CycloScalar]:
        row = list(row)
        for col in sorted(self.pivots):
            c = row[col]
            if c.is_zero():
                continue
            prow = self.pivots[col]
            for j in range(col, self.ncols):
                if not prow[j].is_zero():
                    row[j] = row[j] - c * prow[j]
        return row

    def add(self, row) -> bool:
        """Insert a row; True if it raised the rank."""
        if len(row) != self.ncols:
            raise ValueError(f"row of length {len(row)}, expected {self.ncols}")
        row = self.reduce(row)
        for col, c in enumerate(row):
            if not c.is_zero():
                inv = c.inv()
                self.pivots[col] = [self.zero if x.is_zero() else x * inv for x in row]
                return True
        return False

    def nullspace(self) -> list[list[CycloScalar]]:
        """Basis of {v : row . v = 0 for every inserted row}, one vector per free column."""
        one = self.zero + 1
        # back-substitute to reduced form
        cols = sorted(self.pivots)
        reduced = {c: list(self.pivots[c]) for c in cols}
        for idx in range(len(cols) - 1, -1, -1):
            col = cols[idx]
            prow = reduced[col]
            for other in cols[:idx]:
                orow = reduced[other]
                c = orow[col]
                if not c.is_zero():
                    for j in range(col, self.ncols):
                        if not prow[j].is_zero():
                            orow[j] = orow[j] - c * prow[j]
        free = [j for j in range(self.ncols) if j not in reduced]
        basis = []
        for f in free:
            v = [self.zero] * self.ncols
            v[f] = one
            for col in cols:
                v[col] = -reduced[col][f]
            basis.append(v)
        return basis


def _rows(M) -> list[list[CycloScalar]]:
    if isinstance(M, ExactMatrix):
        return M.rows()
    return [list(r) for r in M]


def exact_rank(M) -> tuple[int, list[list[CycloScalar]]]:
    """Rank and an exact right null-space basis of an exact matrix (or list of rows)."""
    rows = _rows(M)
    if not rows:
        return 0, []
    ncols = len(rows[0])
    zero = rows[0][0] * 0
    ech = Echelon(ncols, zero)
    for r in rows:
        ech.add(r)
    return ech.rank, ech.nullspace()


def rank(M) -> int:
    return exact_rank(M)[0]


def nullspace(M) -> list[list[CycloScalar]]:
    return exact_rank(M)[1]
