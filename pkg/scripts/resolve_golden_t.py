"""Recover the weight at which the printed no-entrywise-order means are attained.

The printed matrices carry four decimals. This scans t on a grid, refines
around the best grid point by golden-section search and reports the
Frobenius residual of each mean against its printed value.
"""

import argparse

import numpy as np

from spdmeans.means import sharp, wasserstein
from spdmeans.verify import fixtures as fx


def residual(fn, target, t: float) -> float:
    return float(np.linalg.norm(fn(fx.NO_ENTRYWISE_A, fx.NO_ENTRYWISE_B, t) - target))


def refine(f, lo: float, hi: float, iters: int = 80) -> float:
    g = (np.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    for _ in range(iters):
        c, d = b - g * (b - a), a + g * (b - a)
        if f(c) < f(d):
            b = d
        else:
            a = c
    return 0.5 * (a + b)


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--lo", type=float, default=0.0)
    p.add_argument("--hi", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=401)
    args = p.parse_args()
    grid = np.linspace(args.lo, args.hi, args.steps)
    h = grid[1] - grid[0]
    for name, fn, target in (
        ("sharp", sharp, fx.NO_ENTRYWISE_SHARP),
        ("wasserstein", wasserstein, fx.NO_ENTRYWISE_WASSERSTEIN),
    ):
        f = lambda t: residual(fn, target, t)  # noqa: E731
        t0 = grid[int(np.argmin([f(t) for t in grid]))]
        t = refine(f, t0 - h, t0 + h)
        print(f"{name}: best t = {t:.6f}, residual {f(t):.2e}; residual at t = 1/2: {f(0.5):.2f}")


if __name__ == "__main__":
    main()
