"""Per-check records and their line-delimited serialization."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from ..linalg import rel_diff
from ..verdict import OrderVerdict, Verdict

__all__ = [
    "Skipped",
    "SubCheck",
    "PropertyReport",
    "Recorder",
    "digest",
    "ID_RTOL",
]

# relative Frobenius tolerance for matrix identities
ID_RTOL = 1e-8


class Skipped(Exception):
    """The instance does not meet a theorem's hypothesis; nothing was checked."""


@dataclass(frozen=True)
class SubCheck:
    name: str
    verdict: Verdict
    margin: float
    note: str = ""


def digest(*arrays, seed: int | None = None) -> str:
    h = hashlib.sha256()
    for a in arrays:
        a = np.ascontiguousarray(np.asarray(a, dtype=np.float64))
        h.update(str(a.shape).encode())
        h.update(a.tobytes())
    if seed is not None:
        h.update(str(seed).encode())
    return h.hexdigest()[:16]


@dataclass
class PropertyReport:
    property_id: str
    instance_digest: str
    seed: int | None = None
    details: list[SubCheck] = field(default_factory=list)
    skipped: str | None = None

    @property
    def verdict(self) -> Verdict | str:
        if self.skipped is not None:
            return "skipped"
        vs = [d.verdict for d in self.details]
        if Verdict.FAILS in vs:
            return Verdict.FAILS
        if Verdict.INDETERMINATE in vs:
            return Verdict.INDETERMINATE
        return Verdict.HOLDS

    @property
    def worst_margin(self) -> float:
        return min((d.margin for d in self.details), default=0.0)

    @property
    def failures(self) -> list[SubCheck]:
        return [d for d in self.details if d.verdict is Verdict.FAILS]

    def to_line(self) -> str:
        rec = {
            "property": self.property_id,
            "seed": self.seed,
            "digest": self.instance_digest,
            "verdict": str(self.verdict),
            "worst_margin": self.worst_margin,
            "subchecks": len(self.details),
        }
        if self.skipped is not None:
            rec["reason"] = self.skipped
        bad = [d.name for d in self.details if d.verdict is not Verdict.HOLDS]
        if bad:
            rec["not_holding"] = bad
        return json.dumps(rec, sort_keys=True)


class Recorder:
    """Accumulates sub-checks for one report.

    Order relations expected to hold are recorded straight from their
    verdicts; identities record ``-error`` as the margin and hold when the
    relative error is within ``ID_RTOL``.
    """

    def __init__(self, property_id: str, *arrays, seed: int | None = None):
        self.report = PropertyReport(property_id, digest(*arrays, seed=seed), seed)

    def add(self, name: str, verdict: Verdict, margin: float, note: str = "") -> None:
        self.report.details.append(SubCheck(name, verdict, float(margin), note))

    def order(self, name: str, v: OrderVerdict) -> None:
        self.add(name, v.verdict, v.margin)

    def not_order(self, name: str, v: OrderVerdict) -> None:
        """Record a relation that must *not* hold."""
        flipped = {Verdict.FAILS: Verdict.HOLDS, Verdict.HOLDS: Verdict.FAILS}.get(v.verdict, v.verdict)
        self.add(name, flipped, -v.margin)

    def tight(self, name: str, v: OrderVerdict) -> None:
        """Record a bound known to be attained: the margin must sit inside the band around zero."""
        ok = abs(v.margin) <= v.band
        self.add(name, Verdict.HOLDS if ok else Verdict.FAILS, v.band - abs(v.margin), "attained bound")

    def identity(self, name: str, X, Y, rtol: float = ID_RTOL) -> None:
        err = rel_diff(X, Y)
        self.add(name, Verdict.HOLDS if err <= rtol else Verdict.FAILS, -err)

    def scalar(self, name: str, x: float, y: float, rtol: float) -> None:
        err = abs(x - y) / max(1.0, abs(y))
        self.add(name, Verdict.HOLDS if err <= rtol else Verdict.FAILS, -err)

    def distinct(self, name: str, X, Y, min_gap: float) -> None:
        """Record that two matrices differ by more than ``min_gap`` (relative Frobenius)."""
        gap = rel_diff(X, Y)
        self.add(name, Verdict.HOLDS if gap > min_gap else Verdict.FAILS, gap - min_gap)

    def truth(self, name: str, ok: bool, margin: float = 0.0, note: str = "") -> None:
        self.add(name, Verdict.HOLDS if ok else Verdict.FAILS, margin, note)

    def done(self) -> PropertyReport:
        return self.report


def skipped_report(property_id: str, reason: str, *arrays, seed: int | None = None) -> PropertyReport:
    r = PropertyReport(property_id, digest(*arrays, seed=seed), seed)
    r.skipped = reason
    return r


def tally(reports: Iterable[PropertyReport]) -> dict[str, int]:
    counts = {"holds": 0, "fails": 0, "indeterminate": 0, "skipped": 0, "subchecks": 0, "indeterminate_subchecks": 0}
    for r in reports:
        counts[str(r.verdict)] += 1
        counts["subchecks"] += len(r.details)
        counts["indeterminate_subchecks"] += sum(d.verdict is Verdict.INDETERMINATE for d in r.details)
    return counts
