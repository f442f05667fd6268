"""Decision procedures for order relations between positive definite matrices.

Strength ranking, strongest first::

    Loewner  =>  Near  =>  EigEntrywise  =>  WeakLogMajorization

Every comparator returns an :class:`~spdmeans.verdict.OrderVerdict`. The
margin is signed (nonnegative when the relation holds) and is measured in
the units of the quantity the relation is decided on: eigenvalues of
``B - A`` for Loewner, eigenvalues of ``A^{-1} # B`` minus one for the near
order, eigenvalue gaps for the entrywise order, and prefix sums of log
eigenvalues for (weak) log-majorization.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike

from .linalg import InvalidInput, Tolerance, as_spd, as_sym, eigvals
from .means import geo_ratio
from .verdict import OrderVerdict, Verdict, decide

__all__ = [
    "OrderRelationKind",
    "Classification",
    "loewner_cmp",
    "near_cmp",
    "near_ratio_eigenvalues",
    "eig_entrywise_cmp",
    "weak_log_majorize_cmp",
    "log_majorize_cmp",
    "classify",
]

DEFAULT_TOL = Tolerance()


class OrderRelationKind(str, enum.Enum):
    LOEWNER = "Loewner"
    NEAR = "Near"
    EIG_ENTRYWISE = "EigEntrywise"
    WEAK_LOG_MAJORIZATION = "WeakLogMajorization"
    LOG_MAJORIZATION = "LogMajorization"
    NO_RELATION = "NoRelation"

    def __str__(self) -> str:
        return self.value


def _same_dim(A: np.ndarray, B: np.ndarray) -> None:
    if A.shape != B.shape:
        raise InvalidInput(f"dimension mismatch: {A.shape} vs {B.shape}")


def loewner_cmp(A: ArrayLike, B: ArrayLike, tol: Tolerance = DEFAULT_TOL) -> OrderVerdict:
    """``A <= B``, decided on the smallest eigenvalue of ``B - A``."""
    A = as_sym(A)
    B = as_sym(B)
    _same_dim(A, B)
    w = eigvals(B - A)
    scale = max(np.max(np.abs(eigvals(A))), np.max(np.abs(eigvals(B))))
    return decide(float(w[-1]), tol.band(scale), tol.floor(scale), witness=len(w))


def near_ratio_eigenvalues(A: ArrayLike, B: ArrayLike) -> np.ndarray:
    """Descending eigenvalues ``mu_1 >= ... >= mu_n`` of ``A^{-1} # B``."""
    return eigvals(geo_ratio(A, B))


def near_cmp(A: ArrayLike, B: ArrayLike, tol: Tolerance = DEFAULT_TOL) -> OrderVerdict:
    """Near order ``A <~ B``: ``A^{-1} # B >= I``; margin is ``mu_n - 1``."""
    mu = near_ratio_eigenvalues(A, B)
    scale = float(mu[0])
    return decide(float(mu[-1]) - 1.0, tol.band(scale), tol.floor(scale), witness=len(mu))


def eig_entrywise_cmp(A: ArrayLike, B: ArrayLike, tol: Tolerance = DEFAULT_TOL) -> OrderVerdict:
    """``lambda_i(A) <= lambda_i(B)`` for every i; witness is the 1-based argmin of the gaps."""
    A = as_sym(A)
    B = as_sym(B)
    _same_dim(A, B)
    la, lb = eigvals(A), eigvals(B)
    gaps = lb - la
    k = int(np.argmin(gaps))
    scale = max(np.max(np.abs(la)), np.max(np.abs(lb)))
    return decide(float(gaps[k]), tol.band(scale), tol.floor(scale), witness=k + 1)


def _log_prefix_gaps(A: ArrayLike, B: ArrayLike) -> tuple[np.ndarray, float]:
    A = as_spd(A)
    B = as_spd(B)
    _same_dim(A, B)
    la, lb = np.log(eigvals(A)), np.log(eigvals(B))
    gaps = np.cumsum(lb) - np.cumsum(la)
    scale = max(float(np.sum(np.abs(la))), float(np.sum(np.abs(lb))), 1.0)
    return gaps, scale


def weak_log_majorize_cmp(A: ArrayLike, B: ArrayLike, tol: Tolerance = DEFAULT_TOL) -> OrderVerdict:
    """``prod_{i<=k} lambda_i(A) <= prod_{i<=k} lambda_i(B)`` for k = 1..n, compared in the log domain."""
    gaps, scale = _log_prefix_gaps(A, B)
    k = int(np.argmin(gaps))
    return decide(float(gaps[k]), tol.band(scale), tol.floor(scale), witness=k + 1)


def log_majorize_cmp(A: ArrayLike, B: ArrayLike, tol: Tolerance = DEFAULT_TOL) -> OrderVerdict:
    """Weak log-majorization for k < n plus equal determinants.

    The determinant condition is an equality, so it holds when the log
    determinant gap is inside the band and fails outside it. The margin is
    the weakest prefix gap, or minus the determinant gap when that decides.
    """
    gaps, scale = _log_prefix_gaps(A, B)
    band, floor = tol.band(scale), tol.floor(scale)
    det_gap = abs(float(gaps[-1]))
    if det_gap > band:
        return OrderVerdict(Verdict.FAILS, -det_gap, band, witness=len(gaps))
    if len(gaps) == 1:
        return OrderVerdict(Verdict.HOLDS, 0.0, band, witness=1)
    k = int(np.argmin(gaps[:-1]))
    return decide(float(gaps[k]), band, floor, witness=k + 1)


_CHAIN = (
    (OrderRelationKind.LOEWNER, loewner_cmp),
    (OrderRelationKind.NEAR, near_cmp),
    (OrderRelationKind.EIG_ENTRYWISE, eig_entrywise_cmp),
    (OrderRelationKind.WEAK_LOG_MAJORIZATION, weak_log_majorize_cmp),
)


@dataclass(frozen=True)
class Classification:
    """Strongest relation found, plus every individual verdict.

    ``indeterminate`` is set when some relation stronger than ``relation``
    could not be decided within tolerance.
    """

    relation: OrderRelationKind
    indeterminate: bool
    verdicts: dict[OrderRelationKind, OrderVerdict] = field(default_factory=dict)


def classify(A: ArrayLike, B: ArrayLike, tol: Tolerance = DEFAULT_TOL) -> Classification:
    """Strongest relation ``A R B`` along Loewner => Near => EigEntrywise => WeakLog.

    A relation that holds certifies every weaker one, so the strongest
    holding level is reported even when a weaker comparator was pushed into
    its indeterminate band by roundoff. When only weak log-majorization holds
    and the determinants agree, the result is ``LogMajorization``.
    """
    A = as_spd(A)
    B = as_spd(B)
    _same_dim(A, B)
    verdicts = {kind: cmp(A, B, tol) for kind, cmp in _CHAIN}
    verdicts[OrderRelationKind.LOG_MAJORIZATION] = log_majorize_cmp(A, B, tol)

    relation = OrderRelationKind.NO_RELATION
    flagged = False
    for kind, _ in _CHAIN:
        v = verdicts[kind]
        if v.holds:
            relation = kind
            break
        if v.verdict is Verdict.INDETERMINATE:
            flagged = True
    if relation is OrderRelationKind.WEAK_LOG_MAJORIZATION and verdicts[OrderRelationKind.LOG_MAJORIZATION].holds:
        relation = OrderRelationKind.LOG_MAJORIZATION
    return Classification(relation, flagged, verdicts)
