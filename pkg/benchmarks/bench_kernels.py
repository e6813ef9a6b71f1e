"""Compare the numba, numpy and exact-integer dimension kernels.

Scans every lowest-alcove weight for the tilting character of a cell, which is
the inner loop of ``verify`` at large p.

    python benchmarks/bench_kernels.py --type G2 --p 101 --repeat 5
"""

import argparse
import time

from tiltval import kernels
from tiltval.affine import AFFINE
from tiltval.antispherical import tilting_character
from tiltval.engine import Engine


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--type", default="G2")
    ap.add_argument("--p", type=int, default=101)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    eng = Engine(args.type)
    P = eng.parabolic(AFFINE)
    cell = P.two_sided_cells()[-1]
    y, w, _ = eng.find_minimal_y(AFFINE, cell)
    char = tilting_character(eng.pkl, eng.kl, y, w).standard_at_one
    weights = eng.lowest_alcove_weights(args.p)
    mats, trans, coeffs = eng._kernel_inputs(char)
    points = [[a + 1 for a in lam] for lam in weights]
    cor = eng.R.positive_coroots
    print(f"{args.type} p={args.p}: {len(weights)} weights x {len(coeffs)} terms x {len(cor)} roots")

    backends = ["exact", "numpy"] + (["numba"] if kernels.numba is not None else [])
    reference = None
    for backend in backends:
        if backend == "numba":
            kernels.weyl_numerators(points[:1], mats, trans, coeffs, cor, args.p, backend=backend)  # compile
        best = float("inf")
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            out = kernels.weyl_numerators(points, mats, trans, coeffs, cor, args.p, backend=backend)
            best = min(best, time.perf_counter() - t0)
        if reference is None:
            reference = out
        status = "ok" if out == reference else "MISMATCH"
        print(f"  {backend:6s} {best * 1e3:9.2f} ms  {status}")


if __name__ == "__main__":
    main()
