"""Randomized search for A, B, C with A <~ B, B <~ C but not A <~ C.

Prints the first triple whose three near-order margins all exceed the
requested threshold in absolute value. The printed arrays are pinned in
spdmeans.verify.fixtures.
"""

import argparse

import numpy as np

from spdmeans.gen import haar_orthogonal, rng_for
from spdmeans.orders import near_cmp


def search(seed: int, threshold: float, max_tries: int):
    rng = rng_for(seed)
    for attempt in range(max_tries):
        n = 2
        A = np.diag(np.round(rng.uniform(1, 10, n), 0))
        # B = S A S and C = T B T with S, T >= I; one factor eigenvalue near 1 and
        # one large, rotated against each other, lets A^{-1} # C dip below I
        factors = []
        for _ in range(2):
            U = haar_orthogonal(n, rng)
            factors.append(U @ np.diag([rng.uniform(1.0, 1.2), rng.uniform(2.0, 20.0)]) @ U.T)
        S, T = factors
        B = np.round(S @ A @ S, 4)
        C = np.round(T @ B @ T, 4)
        B, C = 0.5 * (B + B.T), 0.5 * (C + C.T)
        ab, bc, ac = near_cmp(A, B), near_cmp(B, C), near_cmp(A, C)
        if ab.holds and bc.holds and ac.fails and min(ab.margin, bc.margin, -ac.margin) > threshold:
            return attempt, A, B, C, (ab.margin, bc.margin, ac.margin)
    raise SystemExit("no triple found")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--threshold", type=float, default=1e-2)
    p.add_argument("--max-tries", type=int, default=100_000)
    args = p.parse_args()
    attempt, A, B, C, margins = search(args.seed, args.threshold, args.max_tries)
    np.set_printoptions(precision=17)
    print(f"attempt {attempt}, margins {margins}")
    for name, M in (("A", A), ("B", B), ("C", C)):
        print(name, "=", M.tolist())


if __name__ == "__main__":
    main()
