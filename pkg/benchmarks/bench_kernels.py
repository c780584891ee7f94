"""Time the compiled and numpy graph kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends must return identical results; the script aborts otherwise.
"""

import argparse
import time

import numpy as np

from drgscheme import _kernels_py, oracle

try:
    from drgscheme import _kernels
except ImportError:
    _kernels = None

GRAPHS = [
    ("J(10,5)", lambda: oracle.johnson(10, 5)),
    ("Hadamard order 64", lambda: oracle.build_graph("hadamard", k=6)),
    ("hypercube d=10", lambda: oracle.hypercube(10)),
    ("halved 11-cube", lambda: oracle.halved_cube(11)),
]


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def run(mod, g, repeat):
    ip, ix = g.csr()
    t_dist, dist = best_of(lambda: mod.all_distances(ip, ix, g.n), repeat)
    diam = int(dist.max())
    t_cnt, counts = best_of(lambda: mod.local_counts(dist, ip, ix, diam), repeat)
    return t_dist, t_cnt, dist, counts


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first")
        return 1
    print(f"{'graph':20s} {'n':>5s} {'backend':8s} {'distances':>11s} {'counts':>11s}")
    for name, make in GRAPHS:
        g = make()
        rows = {}
        for label, mod in (("cython", _kernels), ("numpy", _kernels_py)):
            rows[label] = run(mod, g, args.repeat)
            td, tc = rows[label][:2]
            print(f"{name:20s} {g.n:5d} {label:8s} {td * 1e3:9.2f}ms {tc * 1e3:9.2f}ms")
        (_, _, d1, c1), (_, _, d2, c2) = rows["cython"], rows["numpy"]
        same = np.array_equal(d1, d2) and c1[0] == c2[0] and all(np.array_equal(x, y) for x, y in zip(c1[1:4], c2[1:4]))
        if not same:
            raise SystemExit(f"backends disagree on {name}")
        speed = (rows["numpy"][0] + rows["numpy"][1]) / (rows["cython"][0] + rows["cython"][1])
        print(f"{'':20s} {'':5s} {'ratio':8s} numpy/cython = {speed:.2f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
