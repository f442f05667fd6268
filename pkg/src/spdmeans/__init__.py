"""Weighted means of positive definite matrices and the order relations between them."""

from .gen import GenSpec, commuting_pair, loewner_ordered_pair, near_ordered_pair, random_spd
from .linalg import (
    InvalidInput,
    NotPositiveDefinite,
    NumericalFailure,
    SpectralDecomposition,
    Tolerance,
    eigh,
    is_pd,
)
from .means import (
    CurveSample,
    MeanKind,
    fidelity,
    geo_ratio,
    harmonic,
    log_euclidean,
    mean,
    nabla,
    natural,
    sample_curve,
    sharp,
    wasserstein,
    wasserstein_closed_form,
    wasserstein_polar,
)
from .orders import (
    Classification,
    OrderRelationKind,
    classify,
    eig_entrywise_cmp,
    log_majorize_cmp,
    loewner_cmp,
    near_cmp,
    weak_log_majorize_cmp,
)
from .verdict import OrderVerdict, Verdict

__version__ = "0.1.0"

__all__ = [
    "GenSpec",
    "commuting_pair",
    "loewner_ordered_pair",
    "near_ordered_pair",
    "random_spd",
    "InvalidInput",
    "NotPositiveDefinite",
    "NumericalFailure",
    "SpectralDecomposition",
    "Tolerance",
    "eigh",
    "is_pd",
    "CurveSample",
    "MeanKind",
    "fidelity",
    "geo_ratio",
    "harmonic",
    "log_euclidean",
    "mean",
    "nabla",
    "natural",
    "sample_curve",
    "sharp",
    "wasserstein",
    "wasserstein_closed_form",
    "wasserstein_polar",
    "Classification",
    "OrderRelationKind",
    "classify",
    "eig_entrywise_cmp",
    "log_majorize_cmp",
    "loewner_cmp",
    "near_cmp",
    "weak_log_majorize_cmp",
    "OrderVerdict",
    "Verdict",
]
