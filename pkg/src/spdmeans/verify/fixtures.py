"""Fixed instances with published values, and pinned regression data.

Printed values carry four decimals (one eigenvalue only two), so the
tolerances below are half a unit in the last printed place.
"""

import numpy as np

from ..gen import GenSpec, random_spd

# metric geometric vs Wasserstein mean: weakly log-majorized but no entrywise relation.
# The printed means are reproduced at t = 1/4 (t = 1/2 misses them by ~18 in Frobenius norm).
NO_ENTRYWISE_A = np.array([[39.1195, 42.1116], [42.1116, 61.1568]])
NO_ENTRYWISE_B = np.array([[26.3279, 13.3485], [13.3485, 12.2727]])
NO_ENTRYWISE_T = 0.25
NO_ENTRYWISE_SHARP = np.array([[32.2446, 29.2497], [29.2497, 39.8872]])
NO_ENTRYWISE_WASSERSTEIN = np.array([[35.6339, 33.9111], [33.9111, 45.3815]])
NO_ENTRYWISE_SHARP_EIG = np.array([65.5641, 6.5677])
NO_ENTRYWISE_WASSERSTEIN_EIG = np.array([74.7672, 6.2481])
PRINT_TOL = 5e-4

# spectral geometric vs Wasserstein mean at t = 1/2: near-ordered but not Loewner-ordered
NEAR_NOT_LOEWNER_A = np.diag([50.0, 10.0])
NEAR_NOT_LOEWNER_B = np.array([[57.8906, 19.8885], [19.8885, 62.1094]])
NEAR_NOT_LOEWNER_T = 0.5
# ascending eigenvalues of wasserstein - natural, with per-value tolerance
NEAR_NOT_LOEWNER_DIFF_EIG = np.array([-0.21, 6.3338])
NEAR_NOT_LOEWNER_DIFF_TOL = np.array([5e-3, 5e-4])

# commuting pair whose Wasserstein curve is diag((2 - t)^2, (1 + t)^2) for every real t
COMMUTING_A = np.diag([4.0, 1.0])
COMMUTING_B = np.diag([1.0, 4.0])
COMMUTING_T_GRID = (-2.0, -1.0, 0.0, 0.25, 0.5, 1.0, 1.5, 3.0)


def commuting_wasserstein(t: float) -> np.ndarray:
    return np.diag([(2.0 - t) ** 2, (1.0 + t) ** 2])


# A <~ B and B <~ C but not A <~ C; found by scripts/find_nontransitive_triple.py (seed 2024)
NONTRANSITIVE_A = np.array([[1.0, 0.0], [0.0, 7.0]])
NONTRANSITIVE_B = np.array([[276.1673, -193.6865], [-193.6865, 141.3599]])
NONTRANSITIVE_C = np.array([[96765.8692, -3984.6123], [-3984.6123, 169.8488]])
NONTRANSITIVE_MIN_MARGIN = 1e-6

# Loewner order between spectral geometric means does not lift the way it does for
# the Wasserstein mean. Found by scripts/find_natural_counterexamples.py (seed 7),
# rechecked in 60-digit arithmetic.
# With A = I: B^{1/4} <= C^{1/4} but B^{s} <= C^{s} fails for s = 3/8, 1/2.
NATURAL_LIFT_A = np.eye(2)
NATURAL_LIFT_B_ROOT = np.diag([1.0, 0.01])
NATURAL_LIFT_C_ROOT = np.array([[2.05, 1.0], [1.0, 1.05]])
NATURAL_LIFT_T = 0.25
NATURAL_LIFT_S = 0.5

# (k, A, B, t): the k-th hypothesis holds for the spectral mean, yet A <= B fails
NATURAL_CRITERIA_COUNTEREXAMPLES = (
    (1, np.array([[0.9223, 1.2736], [1.2736, 3.1323]]), np.array([[1.0487, 0.9277], [0.9277, 3.9834]]), 0.75),
    (2, np.array([[0.2179, -0.1397], [-0.1397, 4.6576]]), np.array([[0.5505, 0.2385], [0.2385, 5.0601]]), 0.2),
    (3, np.array([[0.2179, -0.1397], [-0.1397, 4.6576]]), np.array([[0.5505, 0.2385], [0.2385, 5.0601]]), 0.2),
    (4, np.array([[3.6551, 1.0379], [1.0379, 0.5696]]), np.array([[3.691, 1.2229], [1.2229, 1.2805]]), 0.8),
)
COUNTEREXAMPLE_MIN_MARGIN = 1e-3

# PAP <~ QAQ (QAQ = 4 PAP) although P^{-1} Q = -2 I is not >= I
CONGRUENCE_A = np.array([[2.0, 1.0], [1.0, 2.0]])
CONGRUENCE_P = np.eye(2)
CONGRUENCE_Q = -2.0 * np.eye(2)


def random_pair_corpus(count: int = 500, kappa: float = 1e4):
    """Seeded pairs ``(A, B)`` with ``n`` cycling through 2..8; pair ``k`` uses seeds ``2k`` and ``2k + 1``."""
    for k in range(count):
        n = 2 + k % 7
        yield random_spd(GenSpec(n, kappa, 2 * k)), random_spd(GenSpec(n, kappa, 2 * k + 1))
