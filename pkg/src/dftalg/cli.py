"""Command-line front end: ``dftalg verify | dump | spectra | audit``.

Reports are JSON lines, one record per (relation group, N, backend), sorted
by (N, relation_id, backend) whatever order the workers finish in.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import relations as rel
from . import spectral as sp
from .backend import get_backend
from .operators import OPERATOR_IDS, build_operator
from .relations import Verdict

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _intertwining_seeded(seed):
    def run(N, backend):
        bk = get_backend(N, backend)
        rng = random.Random(f"{seed}:{N}")

        def draw():
            re = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            im = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            return bk.scalar(re) + bk.i * im if bk.name == "exact" else complex(re) + 1j * float(im)

        reports = rel.check_intertwining(N, bk)
        alpha, beta = draw(), draw()
        for r in rel.check_intertwining(N, bk, alpha=alpha, beta=beta):
            r.relation_id += ".random"
            reports.append(r)
        return reports

    return run


def _circulant(N, backend):
    reports = sp.circulant_similarity(N, backend)
    if get_backend(N, backend).name == "float":
        reports.append(sp.circulant_spectrum_check(N))
    return reports


RELATION_IDS = tuple(rel.RELATION_GROUPS) + ("unitary_equiv", "circulant")


def _group_runner(name, seed):
    if name == "intertwining":
        return _intertwining_seeded(seed)
    if name == "unitary_equiv":
        return sp.check_unitary_equivalence
    if name == "circulant":
        return _circulant
    return rel.RELATION_GROUPS[name]


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------


def parse_n_values(text: str) -> list[int]:
    """``"3..9"``, ``"5"``, ``"3,5,7"`` or mixtures like ``"3..5,8"``."""
    values = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                lo, hi = part.split("..", 1)
                lo, hi = int(lo), int(hi)
                if hi < lo:
                    raise argparse.ArgumentTypeError(f"empty range {part!r}")
                values.extend(range(lo, hi + 1))
            else:
                values.append(int(part))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad dimension list {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("no dimensions given")
    if min(values) < 3:
        raise argparse.ArgumentTypeError("N must be ≥ 3")
    return sorted(set(values))


def _name_list(allowed):
    def parse(text: str) -> list[str]:
        names = [t.strip() for t in text.split(",") if t.strip()]
        if names == ["all"]:
            return list(allowed)
        bad = [t for t in names if t not in allowed]
        if bad or not names:
            raise argparse.ArgumentTypeError(
                f"unknown id(s) {', '.join(bad) or '(none)'}; choose from all, {', '.join(allowed)}"
            )
        return names

    return parse


def _single_n(text: str) -> int:
    values = parse_n_values(text)
    if len(values) != 1:
        raise argparse.ArgumentTypeError("dump takes a single dimension")
    return values[0]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dftalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_type=parse_n_values, backends=("exact", "float", "both"), default_backend="exact"):
        p.add_argument("--n", type=n_type, required=True, help='dimensions, e.g. "3..9" or "5,6,8"')
        p.add_argument("--backend", choices=backends, default=default_backend)
        p.add_argument("--out", help="output file (default: stdout)")
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("verify", help="check relations across dimensions")
    common(p)
    p.add_argument("--relations", type=_name_list(RELATION_IDS), default=list(RELATION_IDS))
    p.add_argument("--seed", type=int, default=0, help="seed for the random intertwiner parameters")
    p.add_argument("--no-timestamps", action="store_true", help="omit elapsed times (byte-stable output)")

    p = sub.add_parser("dump", help="write one operator matrix")
    common(p, n_type=_single_n, backends=("exact", "float"))
    p.add_argument("operator", choices=OPERATOR_IDS)

    p = sub.add_parser("spectra", help="eigenvalues, multiplicities and ranks")
    common(p, backends=("float",), default_backend="float")
    p.add_argument("--ops", type=_name_list(OPERATOR_IDS), default=["X", "Y", "Z"])

    p = sub.add_parser("audit", help="alternative-constant residuals and ladder observations")
    common(p, backends=("exact", "float"))
    return parser


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def _aggregate(group: str, N: int, backend: str, reports, timestamps: bool) -> dict:
    verdicts = [r.verdict for r in reports]
    if Verdict.FAILED in verdicts:
        verdict = Verdict.FAILED
    elif Verdict.DEGENERATE in verdicts:
        verdict = Verdict.DEGENERATE
    else:
        verdict = verdicts[0]
    norms = [r.residual_inf_norm for r in reports if r.residual_inf_norm is not None]
    rec = {
        "relation_id": group,
        "n": N,
        "backend": backend,
        "verdict": verdict.value,
        "residual_inf_norm": max(norms) if norms else None,
    }
    if timestamps:
        rec["elapsed_ms"] = round(sum(r.elapsed_ms for r in reports), 3)
    rec["checks"] = [r.to_dict(timestamps) for r in reports]
    return rec


def _max_threads() -> int:
    raw = os.environ.get("VERIFIER_MAX_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return min(8, os.cpu_count() or 1)


def run_verify(n_values, groups, backends, seed=0, timestamps=True) -> list[dict]:
    jobs = [(N, g, b) for N in n_values for g in groups for b in backends]

    def work(job):
        N, g, b = job
        return _aggregate(g, N, b, _group_runner(g, seed)(N, b), timestamps)

    with ThreadPoolExecutor(max_workers=_max_threads()) as pool:
        records = list(pool.map(work, jobs))
    records.sort(key=lambda r: (r["n"], r["relation_id"], r["backend"]))
    return records


def _fmt_text(rec: dict) -> str:
    kind = rec.get("kind")
    if kind == "spectrum":
        if rec["levels"] is None:
            return f"N={rec['n']:<3} {rec['operator_id']:<7} rank={rec['rank']} nullity={rec['nullity']} (not Hermitian)"
        lv = " ".join(f"{(0.0 if abs(v) < 5e-7 else v):+.6f}x{m}" for v, m in zip(rec["levels"], rec["multiplicities"]))
        return f"N={rec['n']:<3} {rec['operator_id']:<7} rank={rec['rank']} nullity={rec['nullity']} {lv}"
    if kind == "matrix":
        rows = []
        for row in rec["float"]:
            rows.append("  ".join(f"{c['re']:+.6f}{c['im']:+.6f}j" for c in row))
        return f"{rec['operator_id']} N={rec['n']} ({rec['backend']})\n" + "\n".join(rows)
    if "verdict" in rec:
        res = rec["residual_inf_norm"]
        res = "-" if res is None else f"{res:.3e}"
        return f"N={rec['n']:<3} {rec['relation_id']:<14} {rec['backend']:<6} {rec['verdict']:<12} residual={res}"
    return json.dumps(rec)


def _emit(records, path, fmt) -> int:
    if fmt == "json":
        text = "".join(json.dumps(r) + "\n" for r in records)
    else:
        text = "".join(_fmt_text(r) + "\n" for r in records)
    if path is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"dftalg: cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_verify(args) -> int:
    backends = ["exact", "float"] if args.backend == "both" else [args.backend]
    records = run_verify(args.n, args.relations, backends, args.seed, not args.no_timestamps)
    code = _emit(records, args.out, args.format)
    if code:
        return code
    return EXIT_FAILED if any(r["verdict"] == Verdict.FAILED.value for r in records) else EXIT_OK


def cmd_dump(args) -> int:
    M = build_operator(args.operator, args.n, args.backend)
    rec = {"kind": "matrix", "operator_id": args.operator, **M.to_json()}
    if args.format == "text":
        rec["float"] = M.to_float().to_json()["entries"]
    return _emit([rec], args.out, args.format)


def cmd_spectra(args) -> int:
    records = [sp.spectral_report(op, N).to_dict() for N in args.n for op in args.ops]
    return _emit(records, args.out, args.format)


def cmd_audit(args) -> int:
    records = []
    for N in args.n:
        for row in rel.heun_constant_audit(N, args.backend):
            records.append({"kind": "constant_audit", **row})
        table = sp.eigenbasis_epsilon(N).to_dict()
        table.pop("entries")
        records.append(table)
        records.append(sp.ladder_hierarchy(N).to_dict())
    return _emit(records, args.out, "json")


COMMANDS = {"verify": cmd_verify, "dump": cmd_dump, "spectra": cmd_spectra, "audit": cmd_audit}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # usage errors exit with status 2
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
