"""Compare the compiled and pure-Python exact matrix-product kernels.

    python benchmarks/bench_kernels.py --n 4,8,12,16 --repeat 5
"""
import argparse
import json
import time

import numpy as np

from dftalg import _kernels
from dftalg.operators import canonical_A, heun_W


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench(N, repeat):
    A, W = canonical_A(N), heun_W(N)
    red = A.field.reduction
    row = {"n": N, "order": A.field.order, "degree": A.field.degree}
    row["python_ms"] = 1e3 * _best(lambda: _kernels.cyclo_matmul(A.num, W.num, red, use_compiled=False), repeat)
    if _kernels.HAVE_COMPILED:
        fast = _kernels.cyclo_matmul(A.num, W.num, red, use_compiled=True)
        slow = _kernels.cyclo_matmul(A.num, W.num, red, use_compiled=False)
        if not (fast == slow).all():
            raise SystemExit(f"kernel mismatch at N={N}")
        row["cython_ms"] = 1e3 * _best(lambda: _kernels.cyclo_matmul(A.num, W.num, red, use_compiled=True), repeat)
        row["speedup"] = row["python_ms"] / row["cython_ms"]
    return row


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", default="4,8,12,16,24")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true", help="print JSON lines instead of a table")
    args = ap.parse_args(argv)
    rows = [bench(int(n), args.repeat) for n in args.n.split(",")]
    if args.json:
        for r in rows:
            print(json.dumps(r))
        return
    print(f"compiled kernel available: {_kernels.HAVE_COMPILED}")
    print(f"{'N':>4} {'M':>4} {'deg':>4} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for r in rows:
        c = r.get("cython_ms", np.nan)
        s = r.get("speedup", np.nan)
        print(f"{r['n']:>4} {r['order']:>4} {r['degree']:>4} {r['python_ms']:>10.3f} {c:>10.3f} {s:>8.1f}")


if __name__ == "__main__":
    main()
