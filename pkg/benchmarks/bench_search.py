"""Compare the numba and numpy box-search kernels (and the bigint path).

    python benchmarks/bench_search.py [--bound 40] [--repeat 3]

The forms below have no vector of the requested square, so every backend
scans the full box.  Results are checked to agree before timings print.
"""
import argparse
import time

from k3lattice import _kernels

CASES = [
    ("rank 2, q = -2 on [[4,9],[9,8]]", [[4, 9], [9, 8]], -2),
    ("rank 3, isotropic on diag(4,4,4)", [[4, 0, 0], [0, 4, 0], [0, 0, 4]], 0),
    ("rank 3, q = 3 on [[4,9,0],[9,8,0],[0,0,-2]]", [[4, 9, 0], [9, 8, 0], [0, 0, -2]], 3),
    ("rank 4, q = 1 on 2*I4", [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]], 1),
]


def best_time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bound", type=int, default=40)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--python", action="store_true", help="also time the pure-python path")
    args = ap.parse_args()

    backends = ["numpy"]
    if _kernels.HAVE_NUMBA:
        backends.insert(0, "numba")
        _kernels.first_match([[1]], 1, 5, backend="numba")  # compile outside the timing
    if args.python:
        backends.append("python")

    print(f"bound {args.bound}; best of {args.repeat}")
    print(f"{'case':<46}{'box':>12}" + "".join(f"{b:>12}" for b in backends))
    for name, G, target in CASES:
        bound = args.bound if len(G) < 4 else min(args.bound, 15)
        size = (2 * bound + 1) ** len(G) - 1
        row, results = [], []
        for b in backends:
            t, res = best_time(lambda: _kernels.first_match(G, bound, target, backend=b), args.repeat)
            row.append(f"{t * 1e3:>10.1f}ms")
            results.append(res)
        assert all(r == results[0] for r in results), results
        print(f"{name:<46}{size:>12}" + "".join(row))


if __name__ == "__main__":
    main()
