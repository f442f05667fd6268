"""Randomized search for pairs refuting spectral-mean analogues of Loewner criteria.

For the Wasserstein mean, each of

    1. A^-1 <>_t A <= A^-1 <>_t B      2. B^-1 <>_t B <= A^-1 <>_t B
    3. B^-1 <>_t A <= A^-1 <>_t A      4. B^-1 <>_t A <= B^-1 <>_t B

forces A <= B for t in (0, 1). With the spectral geometric mean in place of
<>_t the implications fail. For each k this prints a 2x2 pair with 4-decimal
entries and a t where hypothesis k holds and A <= B fails, both by more than
the threshold. The printed data are pinned in spdmeans.verify.fixtures.
"""

import argparse

import numpy as np

from spdmeans.gen import haar_orthogonal, rng_for
from spdmeans.linalg import inv
from spdmeans.means import natural
from spdmeans.orders import loewner_cmp


def hypotheses(A: np.ndarray, B: np.ndarray, t: float):
    Ai, Bi = inv(A), inv(B)
    return (
        (natural(Ai, A, t), natural(Ai, B, t)),
        (natural(Bi, B, t), natural(Ai, B, t)),
        (natural(Bi, A, t), natural(Ai, A, t)),
        (natural(Bi, A, t), natural(Bi, B, t)),
    )


def search(seed: int, threshold: float, max_tries: int) -> dict[int, tuple]:
    rng = rng_for(seed)
    found: dict[int, tuple] = {}
    for attempt in range(max_tries):
        U = haar_orthogonal(2, rng)
        A = np.round(U @ np.diag(rng.uniform(0.2, 5.0, 2)) @ U.T, 4)
        # B close to A in a random direction, so A <= B fails by a little
        V = haar_orthogonal(2, rng)
        B = np.round(A + V @ np.diag([rng.uniform(0.05, 1.0), -rng.uniform(0.01, 0.2)]) @ V.T, 4)
        if np.linalg.eigvalsh(B)[0] <= 0.05:
            continue
        t = float(rng.choice([0.1, 0.2, 0.25, 0.3, 0.7, 0.75, 0.8, 0.9]))
        concl = loewner_cmp(A, B)
        if not concl.margin < -threshold:
            continue
        for k, (lo, hi) in enumerate(hypotheses(A, B, t), start=1):
            if k in found:
                continue
            hyp = loewner_cmp(lo, hi)
            if hyp.margin > threshold:
                found[k] = (attempt, A, B, t, hyp.margin, concl.margin)
        if len(found) == 4:
            break
    return found


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--threshold", type=float, default=1e-3)
    p.add_argument("--max-tries", type=int, default=200_000)
    args = p.parse_args()
    found = search(args.seed, args.threshold, args.max_tries)
    for k in sorted(found):
        attempt, A, B, t, h, c = found[k]
        print(f"hypothesis {k}: attempt {attempt}, t={t}, hypothesis margin {h:.6g}, A<=B margin {c:.6g}")
        print("  A =", A.tolist())
        print("  B =", B.tolist())
    missing = sorted(set(range(1, 5)) - set(found))
    if missing:
        print("not found:", missing)


if __name__ == "__main__":
    main()
