"""Three-valued verdicts shared by the order tests."""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Verdict(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INDETERMINATE = "indeterminate"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class OrderVerdict:
    """Outcome of one comparison.

    ``margin`` is the signed distance to the decision boundary in units of
    the tested eigen-quantity, ``band`` the width of the indeterminate zone
    and ``witness`` the (1-based) eigenvalue index that decided it, if any.
    """

    verdict: Verdict
    margin: float
    band: float
    witness: int | None = None

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    @property
    def fails(self) -> bool:
        return self.verdict is Verdict.FAILS


def decide(margin: float, band: float, floor: float, witness: int | None = None) -> OrderVerdict:
    """Classify a margin of a non-strict relation (``margin >= 0`` means it holds).

    Margins above ``-floor`` are roundoff-level and count as holding (they
    are reported as 0 when negative); margins below ``-band`` fail; the rest
    are indeterminate.
    """
    if margin >= -floor:
        return OrderVerdict(Verdict.HOLDS, max(margin, 0.0), band, witness)
    if margin < -band:
        return OrderVerdict(Verdict.FAILS, margin, band, witness)
    return OrderVerdict(Verdict.INDETERMINATE, margin, band, witness)
