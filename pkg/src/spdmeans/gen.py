"""Seeded random positive definite instances with prescribed structure.

All randomness comes from numpy's counter-based Philox bit generator, keyed
by the 64-bit seed of a :class:`GenSpec`, so every factory is a pure
function of its arguments.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
from numpy.typing import ArrayLike

from .linalg import Array, InvalidInput, as_spd, as_sym, symmetrize

__all__ = [
    "GenSpec",
    "rng_for",
    "haar_orthogonal",
    "random_spd",
    "near_pair_from",
    "near_ordered_pair",
    "loewner_pair_from",
    "loewner_ordered_pair",
    "commuting_pair_from",
    "commuting_pair",
]

STRUCTURES = ("generic", "commuting", "diagonal")


@dataclass(frozen=True)
class GenSpec:
    n: int = 3
    kappa: float = 1e4
    seed: int = 0
    structure: str = "generic"

    def __post_init__(self) -> None:
        if not (2 <= self.n <= 16):
            raise InvalidInput(f"n must be in [2, 16], got {self.n}")
        if not (self.kappa >= 1 and np.isfinite(self.kappa)):
            raise InvalidInput(f"kappa must be >= 1, got {self.kappa}")
        if not (0 <= self.seed < 2**64):
            raise InvalidInput("seed must be a 64-bit unsigned integer")
        if self.structure not in STRUCTURES:
            raise InvalidInput(f"structure must be one of {STRUCTURES}, got {self.structure!r}")


def rng_for(*key: int) -> np.random.Generator:
    """Philox generator keyed by a tuple of nonnegative integers."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(list(key))))


def haar_orthogonal(n: int, rng: np.random.Generator) -> Array:
    """Haar-distributed orthogonal matrix: QR of a Gaussian matrix with R's diagonal made positive."""
    Q, R = np.linalg.qr(rng.standard_normal((n, n)))
    return Q * np.sign(np.diag(R))


def _log_uniform(rng: np.random.Generator, n: int, lo: float, hi: float) -> Array:
    if hi == lo:
        return np.full(n, lo)
    return np.exp(rng.uniform(np.log(lo), np.log(hi), size=n))


def _basis(spec: GenSpec, rng: np.random.Generator) -> Array:
    if spec.structure == "diagonal":
        return np.eye(spec.n)
    return haar_orthogonal(spec.n, rng)


def _from_spectrum(V: Array, w: Array) -> Array:
    if np.all(w == w[0]):
        return w[0] * np.eye(len(w))
    return symmetrize((V * w) @ V.T)


def _spd(spec: GenSpec, rng: np.random.Generator, V: Array | None = None) -> Array:
    r = np.sqrt(spec.kappa)
    w = _log_uniform(rng, spec.n, 1.0 / r, r)
    return _from_spectrum(_basis(spec, rng) if V is None else V, w)


def random_spd(spec: GenSpec) -> Array:
    """Eigenvalues log-uniform in ``[kappa^{-1/2}, kappa^{1/2}]``, Haar eigenvectors (identity for ``diagonal``)."""
    return _spd(spec, rng_for(spec.seed))


def near_pair_from(A: ArrayLike, S: ArrayLike) -> tuple[Array, Array]:
    """``(A, S A S)``; since ``A^{-1} # (S A S) = S``, the near margin is ``lambda_min(S) - 1``."""
    A = as_spd(A)
    S = as_spd(S)
    return A, symmetrize(S @ A @ S)


def near_ordered_pair(spec: GenSpec, gap: float = 0.0, *, spread: float = 4.0) -> tuple[Array, Array]:
    """Random ``A`` and ``B = S A S`` with ``eig(S)`` log-uniform in ``[1 + gap, (1 + gap) * spread]``.

    ``S`` shares ``A``'s eigenvectors for the ``commuting`` and ``diagonal``
    structures and has independent Haar eigenvectors otherwise.
    """
    if gap < 0 or spread < 1:
        raise InvalidInput("gap must be >= 0 and spread >= 1")
    rng = rng_for(spec.seed)
    V = _basis(spec, rng)
    A = _spd(spec, rng, V)
    W = haar_orthogonal(spec.n, rng) if spec.structure == "generic" else V
    s = _log_uniform(rng, spec.n, 1.0 + gap, (1.0 + gap) * spread)
    # pin the smallest factor so the margin is exactly the requested gap
    s[int(np.argmin(s))] = 1.0 + gap
    return near_pair_from(A, _from_spectrum(W, s))


def loewner_pair_from(A: ArrayLike, P: ArrayLike) -> tuple[Array, Array]:
    """``(A, A + P)`` for positive semidefinite ``P``."""
    A = as_spd(A)
    P = as_sym(P)
    return A, symmetrize(A + P)


def loewner_ordered_pair(spec: GenSpec, gap: float = 0.0, *, extra: float = 1.0) -> tuple[Array, Array]:
    """Random ``A`` and ``B = A + P`` with ``eig(P)`` uniform in ``[gap, gap + extra * mean(eig(A))]``."""
    if gap < 0 or extra < 0:
        raise InvalidInput("gap and extra must be >= 0")
    rng = rng_for(spec.seed)
    V = _basis(spec, rng)
    A = _spd(spec, rng, V)
    W = haar_orthogonal(spec.n, rng) if spec.structure == "generic" else V
    p = gap + rng.uniform(0.0, 1.0, size=spec.n) * extra * float(np.trace(A)) / spec.n
    p[int(np.argmin(p))] = gap
    return loewner_pair_from(A, _from_spectrum(W, p))


def commuting_pair_from(V: ArrayLike, d1: ArrayLike, d2: ArrayLike) -> tuple[Array, Array]:
    V = np.asarray(V, dtype=float)
    d1 = np.asarray(d1, dtype=float)
    d2 = np.asarray(d2, dtype=float)
    return as_spd(symmetrize((V * d1) @ V.T)), as_spd(symmetrize((V * d2) @ V.T))


def commuting_pair(spec: GenSpec) -> tuple[Array, Array]:
    """``A = V D1 V^T`` and ``B = V D2 V^T`` with a shared eigenbasis (``V = I`` for ``diagonal``)."""
    rng = rng_for(spec.seed)
    V = _basis(spec, rng)
    r = np.sqrt(spec.kappa)
    d1 = _log_uniform(rng, spec.n, 1.0 / r, r)
    d2 = _log_uniform(rng, spec.n, 1.0 / r, r)
    return commuting_pair_from(V, d1, d2)


def with_seed(spec: GenSpec, seed: int) -> GenSpec:
    return replace(spec, seed=seed)
