"""Two-variable operator means on positive definite matrices.

All means take ``(A, B, t)`` with the convention ``mean(A, B, 0) = A`` and
``mean(A, B, 1) = B``. The metric geometric (``sharp``), spectral geometric
(``natural``) and Wasserstein means accept any real ``t``; outside ``[0, 1]``
they trace the extensions of the corresponding curves.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from numpy.typing import ArrayLike

from .linalg import (
    Array,
    InvalidInput,
    NotPositiveDefinite,
    NumericalFailure,
    as_spd,
    eigh,
    eigvals,
    inv,
    invsqrtm,
    matrix_exp,
    matrix_log,
    matrix_power,
    polar_unitary,
    sqrtm,
    symmetrize,
)

__all__ = [
    "MeanKind",
    "CurveSample",
    "nabla",
    "harmonic",
    "sharp",
    "geo_ratio",
    "natural",
    "wasserstein",
    "wasserstein_closed_form",
    "wasserstein_polar",
    "log_euclidean",
    "fidelity",
    "mean",
    "sample_curve",
]


class MeanKind(str, enum.Enum):
    ARITHMETIC = "arithmetic"
    HARMONIC = "harmonic"
    METRIC_GEOMETRIC = "sharp"
    SPECTRAL_GEOMETRIC = "natural"
    WASSERSTEIN = "wasserstein"
    LOG_EUCLIDEAN = "log-euclidean"
    FIDELITY = "fidelity"

    @classmethod
    def parse(cls, name: str | MeanKind) -> MeanKind:
        """Accept either the short value (``"sharp"``) or the member name (``"metric-geometric"``)."""
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("_", "-")
        for kind in cls:
            if key in (kind.value, kind.name.lower().replace("_", "-")):
                return kind
        raise InvalidInput(f"unknown mean kind {name!r}")


@dataclass(frozen=True)
class CurveSample:
    t: float
    value: Array
    eigenvalues: Array
    determinant: float


def _pair(A: ArrayLike, B: ArrayLike) -> tuple[Array, Array]:
    A = as_spd(A)
    B = as_spd(B)
    if A.shape != B.shape:
        raise InvalidInput(f"dimension mismatch: {A.shape} vs {B.shape}")
    return A, B


def _congruence(P: Array, M: Array) -> Array:
    return symmetrize(P @ M @ P.T)


def nabla(A: ArrayLike, B: ArrayLike, t: float) -> Array:
    """Weighted arithmetic mean ``(1-t) A + t B``; symmetric for every real ``t``."""
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    if A.shape != B.shape:
        raise InvalidInput(f"dimension mismatch: {A.shape} vs {B.shape}")
    return symmetrize((1.0 - t) * A + t * B)


def harmonic(A: ArrayLike, B: ArrayLike, t: float) -> Array:
    A, B = _pair(A, B)
    return inv(nabla(inv(A), inv(B), t))


def sharp(A: ArrayLike, B: ArrayLike, t: float = 0.5, *, base: str = "auto") -> Array:
    """Metric geometric mean ``A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}``.

    Parameters
    ----------
    base : {"auto", "first", "second"}
        Operand whose square root brackets the power. ``"second"`` evaluates
        ``B #_{1-t} A``, which is the same mean. ``"auto"`` picks the form
        with the smaller exponent in absolute value, since the power
        amplifies relative eigenvalue errors of the inner matrix.
    """
    A, B = _pair(A, B)
    if base == "auto":
        base = "second" if abs(1.0 - t) < abs(t) else "first"
    if base == "second":
        A, B, t = B, A, 1.0 - t
    elif base != "first":
        raise InvalidInput(f"base must be 'auto', 'first' or 'second', got {base!r}")
    dec = eigh(A)
    V, w = dec.eigenvectors, dec.eigenvalues
    Ah = symmetrize((V * np.sqrt(w)) @ V.T)
    Aih = symmetrize((V / np.sqrt(w)) @ V.T)
    inner = _congruence(Aih, B)
    return _congruence(Ah, matrix_power(inner, t))


def geo_ratio(A: ArrayLike, B: ArrayLike) -> Array:
    """``A^{-1} # B = A^{-1/2} (A^{1/2} B A^{1/2})^{1/2} A^{-1/2}``.

    This is the unique positive definite ``X`` with ``X A X = B``; the
    spectral geometric and Wasserstein means are both congruences of ``A`` by
    functions of it.
    """
    A, B = _pair(A, B)
    dec = eigh(A)
    V, w = dec.eigenvectors, dec.eigenvalues
    Ah = symmetrize((V * np.sqrt(w)) @ V.T)
    Aih = symmetrize((V / np.sqrt(w)) @ V.T)
    return _congruence(Aih, sqrtm(_congruence(Ah, B)))


def natural(A: ArrayLike, B: ArrayLike, t: float = 0.5) -> Array:
    """Spectral geometric mean ``X^t A X^t`` with ``X = A^{-1} # B``, any real ``t``."""
    A, B = _pair(A, B)
    Xt = matrix_power(geo_ratio(A, B), t)
    return _congruence(Xt, A)


def wasserstein(A: ArrayLike, B: ArrayLike, t: float = 0.5) -> Array:
    """Bures-Wasserstein mean ``[(1-t) I + t X] A [(1-t) I + t X]`` with ``X = A^{-1} # B``.

    Defined for every real ``t``. Outside ``[0, 1]`` the congruence factor
    can be singular, so the value is only guaranteed positive semidefinite.
    """
    A, B = _pair(A, B)
    M = nabla(np.eye(A.shape[0]), geo_ratio(A, B), t)
    return _congruence(M, A)


def _sqrt_ab(A: Array, B: Array) -> Array:
    # (AB)^{1/2} = A^{1/2} (A^{1/2} B A^{1/2})^{1/2} A^{-1/2}
    Ah = sqrtm(A)
    return Ah @ sqrtm(_congruence(Ah, B)) @ invsqrtm(A)


def wasserstein_closed_form(A: ArrayLike, B: ArrayLike, t: float = 0.5) -> Array:
    """``(1-t)^2 A + t^2 B + t(1-t) [(AB)^{1/2} + (BA)^{1/2}]``."""
    A, B = _pair(A, B)
    R = _sqrt_ab(A, B)
    # (BA)^{1/2} is the transpose of (AB)^{1/2}
    return symmetrize((1 - t) ** 2 * A + t**2 * B + t * (1 - t) * (R + R.T))


def wasserstein_polar(A: ArrayLike, B: ArrayLike, t: float = 0.5) -> Array:
    """``|(1-t) A^{1/2} + t U^T B^{1/2}|^2`` where ``B^{1/2} A^{1/2} = U |B^{1/2} A^{1/2}|``."""
    A, B = _pair(A, B)
    Ah = sqrtm(A)
    Bh = sqrtm(B)
    U = polar_unitary(Bh @ Ah)
    Y = (1 - t) * Ah + t * (U.T @ Bh)
    return symmetrize(Y.T @ Y)


def log_euclidean(A: ArrayLike, B: ArrayLike, t: float = 0.5) -> Array:
    A, B = _pair(A, B)
    return matrix_exp(nabla(matrix_log(A), matrix_log(B), t))


def fidelity(A: ArrayLike, B: ArrayLike, t: float = 0.5) -> Array:
    """``B^{t/2} A^{1-t} B^{t/2}``."""
    A, B = _pair(A, B)
    return _congruence(matrix_power(B, t / 2), matrix_power(A, 1 - t))


def _arithmetic(A: ArrayLike, B: ArrayLike, t: float) -> Array:
    return nabla(*_pair(A, B), t)


_DISPATCH = {
    MeanKind.ARITHMETIC: _arithmetic,
    MeanKind.HARMONIC: harmonic,
    MeanKind.METRIC_GEOMETRIC: sharp,
    MeanKind.SPECTRAL_GEOMETRIC: natural,
    MeanKind.WASSERSTEIN: wasserstein,
    MeanKind.LOG_EUCLIDEAN: log_euclidean,
    MeanKind.FIDELITY: fidelity,
}


def mean(kind: MeanKind | str, A: ArrayLike, B: ArrayLike, t: float) -> Array:
    """Dispatch to the mean named by ``kind``."""
    return _DISPATCH[MeanKind.parse(kind)](A, B, t)


def sample_curve(kind: MeanKind | str, A: ArrayLike, B: ArrayLike, t_grid: Iterable[float]) -> list[CurveSample]:
    """Evaluate ``mean(kind, A, B, t)`` at each grid point, in grid order.

    Errors are re-raised with the offending ``t`` prepended to the message.
    """
    kind = MeanKind.parse(kind)
    out = []
    for t in t_grid:
        t = float(t)
        try:
            value = mean(kind, A, B, t)
        except (InvalidInput, NotPositiveDefinite, NumericalFailure) as exc:
            raise type(exc)(f"t={t!r}: {exc}") from exc
        w = eigvals(value)
        out.append(CurveSample(t, value, w, float(np.prod(w))))
    return out
