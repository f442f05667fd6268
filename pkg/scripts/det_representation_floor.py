"""Rounding floor for determinant identities along extended mean curves.

For the worst strict determinant errors on the 500-pair corpus, the curve
point is recomputed in high precision, rounded entrywise to double, and the
determinant of the rounded matrix is compared with the exact one. Any
algorithm returning a double matrix inherits at least this error.
"""

import argparse

import mpmath as mp
import numpy as np

from spdmeans.verify.checks import check_det
from spdmeans.verify.fixtures import random_pair_corpus

EXTENDED_T = (-1.0, 1.5, 2.0)


def strict_errors(count: int):
    """Strict relative determinant errors at extended t, one per identity sub-check."""
    out = []
    for k, (A, B) in enumerate(random_pair_corpus(count)):
        for d in check_det(A, B, EXTENDED_T, strict=True).details:
            if ".det" in d.name and "<=" not in d.name and ">=" not in d.name:
                name = d.name.split(".")[0]
                t = float(d.name.split("t=")[1].rstrip("]"))
                out.append((-d.margin, k, d.name, name, t, A, B))
    return out


def _fn(X, fn):
    E, Q = mp.eigsy(X)
    return Q * mp.diag([fn(e) for e in E]) * Q.T


def exact_point(A, B, name: str, t: float):
    a, b = mp.matrix(A.tolist()), mp.matrix(B.tolist())
    n = A.shape[0]
    Ah = _fn(a, mp.sqrt)
    Aih = _fn(a, lambda x: 1 / mp.sqrt(x))
    X = Aih * _fn(Ah * b * Ah, mp.sqrt) * Aih
    G = _fn(X, lambda x: x**t) if name == "natural" else (1 - t) * mp.eye(n) + t * X
    M = G * a * G.T
    return (M + M.T) / 2


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--worst", type=int, default=6)
    p.add_argument("--dps", type=int, default=40)
    args = p.parse_args()
    mp.mp.dps = args.dps
    errs = sorted(strict_errors(args.count), key=lambda e: -e[0])
    for prefix in ("wasserstein.det[", "natural.det[", "natural.det-mu["):
        sel = [e for e in errs if e[2].startswith(prefix)]
        over = sum(e[0] > 1e-9 for e in sel)
        print(f"{prefix[:-1]}: {over} of {len(sel)} exceed 1e-9, worst {sel[0][0]:.2e}")
    for err, k, label, name, t, A, B in errs[: args.worst]:
        M = exact_point(A, B, name, t)
        ev = mp.eigsy(M)[0]
        rounded = mp.matrix(np.array(M.tolist(), dtype=float).tolist())
        floor = abs(mp.expm1(mp.log(mp.det(rounded)) - mp.log(mp.det(M))))
        print(
            f"pair {k} {label}: kappa {float(max(ev) / min(ev)):.2e}, "
            f"computed error {err:.2e}, rounding floor {float(floor):.2e}"
        )


if __name__ == "__main__":
    main()
