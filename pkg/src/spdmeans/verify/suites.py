"""Named randomized suites built from the checks.

Every trial draws from its own Philox stream keyed by
``(seed, suite index, trial)``, so a run is reproducible and any single
trial can be replayed in isolation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from ..gen import GenSpec, haar_orthogonal, loewner_ordered_pair, near_ordered_pair, random_spd, rng_for
from ..linalg import InvalidInput, matrix_exp, symmetrize
from ..orders import near_ratio_eigenvalues
from . import checks
from .report import PropertyReport, Skipped, skipped_report, tally

__all__ = ["SuiteConfig", "SUITES", "run_suite", "iter_suite", "summarize"]

SEED_SPACE = 2**63
# curves at |t| up to 3 raise the conditioning to roughly kappa^(2|t|+1)
EXTENDED_KAPPA = 1e2


@dataclass(frozen=True)
class SuiteConfig:
    """Parameters shared by every suite run."""

    seed: int = 0
    trials: int = 100
    n: int | None = None
    kappa: float = 1e4

    def __post_init__(self) -> None:
        if self.trials < 0:
            raise InvalidInput("trials must be >= 0")
        if self.n is not None and not 2 <= self.n <= 16:
            raise InvalidInput("n must be in [2, 16]")
        if not self.kappa >= 1:
            raise InvalidInput("kappa must be >= 1")


@dataclass
class Trial:
    """Randomness and sizes available to one trial."""

    index: int
    seed: int
    rng: np.random.Generator
    n: int
    kappa: float

    def spec(self, kappa: float | None = None, structure: str = "generic") -> GenSpec:
        return GenSpec(self.n, self.kappa if kappa is None else kappa, int(self.rng.integers(SEED_SPACE)), structure)

    def ext_spec(self) -> GenSpec:
        """Spec for instances evaluated at parameters outside ``[0, 1]``."""
        return self.spec(min(self.kappa, EXTENDED_KAPPA))

    def spd(self, kappa: float | None = None) -> np.ndarray:
        return random_spd(self.spec(kappa))

    def pair(self, kappa: float | None = None) -> tuple[np.ndarray, np.ndarray]:
        return self.spd(kappa), self.spd(kappa)

    def unit(self, choices) -> float:
        return float(choices[int(self.rng.integers(len(choices)))])


Driver = Callable[[Trial], PropertyReport]

INTERIOR_T = (0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9)
WIDE_GRID = (-1.0, -0.5, 0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0)


def _mean_axioms(tr: Trial) -> PropertyReport:
    A, B = tr.pair()
    return checks.check_mean_axioms(A, B, seed=tr.seed)


def _chain(tr: Trial) -> PropertyReport:
    A, B = tr.pair()
    if tr.index % 10 == 9:
        B = A
    return checks.check_chain(A, B, tr.unit(INTERIOR_T), seed=tr.seed)


def _near_main(tr: Trial) -> PropertyReport:
    mode = tr.index % 4
    if mode == 0:
        A, B = tr.pair()
        t = tr.unit(INTERIOR_T)
    elif mode == 1:
        A, B = near_ordered_pair(tr.ext_spec(), gap=0.2)
        t = tr.unit((1.5, 2.0, 3.0))
    elif mode == 2:
        B, A = near_ordered_pair(tr.ext_spec(), gap=0.2)
        t = tr.unit((-0.5, -1.0, -2.0))
    else:
        A = tr.spd()
        B = A if tr.index % 8 == 3 else tr.spd()
        t = tr.unit(INTERIOR_T)
    return checks.check_near_main(A, B, t, seed=tr.seed)


def _curve_monotone(tr: Trial) -> PropertyReport:
    mode = tr.index % 5
    scale = None
    if mode == 0:
        A, B = near_ordered_pair(tr.ext_spec(), gap=0.1)
    elif mode == 1:
        B, A = near_ordered_pair(tr.ext_spec(), gap=0.1)
    elif mode == 2:
        A, B = (random_spd(tr.ext_spec()), random_spd(tr.ext_spec()))
    else:
        A, B = (random_spd(tr.ext_spec()), random_spd(tr.ext_spec()))
        mu = near_ratio_eigenvalues(A, B)
        # below mu_n the scaled pair is near-ordered upward, above mu_1 downward
        scale = 0.9 * float(mu[-1]) if mode == 3 else 1.1 * float(mu[0])
    return checks.check_curve_monotone(A, B, WIDE_GRID, scale, seed=tr.seed)


def _sandwich(tr: Trial) -> PropertyReport:
    mode = tr.index % 3
    if mode == 0:
        A, B = (random_spd(tr.ext_spec()), random_spd(tr.ext_spec()))
        t, s = sorted(tr.rng.choice([0.0, 0.2, 0.5, 0.8, 1.0], size=2, replace=False))
        return checks.check_sandwich(A, B, float(t), float(s), seed=tr.seed)
    A, B = near_ordered_pair(tr.ext_spec(), gap=0.1)
    if mode == 2:
        A, B = B, A
    mu = near_ratio_eigenvalues(A, B)
    if mode == 1:
        # A <~ B: range (1/(1 - mu_1), inf); start just inside the endpoint
        lo = 1.0 / (1.0 - float(mu[0]))
        pts = [lo + 0.05 * abs(lo), lo / 2, 0.0, 1.0, 2.5]
    else:
        # B <~ A: range (-inf, 1/(1 - mu_n))
        hi = 1.0 / (1.0 - float(mu[-1]))
        pts = [-1.5, 0.0, 1.0, (1.0 + hi) / 2, hi - 0.05 * abs(hi)]
    i, j = sorted(tr.rng.choice(len(pts), size=2, replace=False))
    return checks.check_sandwich(A, B, pts[i], pts[j], seed=tr.seed)


def _determinants(tr: Trial) -> PropertyReport:
    mode = tr.index % 3
    if mode == 0:
        A, B = (random_spd(tr.ext_spec()), random_spd(tr.ext_spec()))
    elif mode == 1:
        A, B = near_ordered_pair(tr.ext_spec(), gap=0.1)
    else:
        B, A = near_ordered_pair(tr.ext_spec(), gap=0.1)
    return checks.check_det(A, B, WIDE_GRID, seed=tr.seed)


def _geodesic_laws(tr: Trial) -> PropertyReport:
    mode = tr.index % 3
    s, u, t = (float(x) for x in tr.rng.uniform(-1.0, 2.0, size=3))
    if mode == 0:
        A, B = near_ordered_pair(tr.ext_spec(), gap=0.1)
        s, t = abs(s) + 0.5, abs(t)
    elif mode == 1:
        B, A = near_ordered_pair(tr.ext_spec(), gap=0.1)
        s, t = min(s, 1.0) - 0.5, min(t, 1.0)
    else:
        A, B = (random_spd(tr.ext_spec()), random_spd(tr.ext_spec()))
    return checks.check_geodesic_laws(A, B, s, u, t, seed=tr.seed)


def _inverse_relations(tr: Trial) -> PropertyReport:
    A, B = tr.pair()
    if tr.index % 10 == 9:
        B = A
    return checks.check_inverse_relations(A, B, tr.unit(INTERIOR_T), seed=tr.seed)


# powers up to 3 of the operands, then curves out to t = 1.5
POWER_KAPPA = 10.0


def _power_curves(tr: Trial) -> PropertyReport:
    mode = checks.POWER_MODES[tr.index % len(checks.POWER_MODES)]
    grid = (-0.5, 0.0, 0.25, 0.5, 0.75, 1.0, 1.5)
    spec = tr.spec(POWER_KAPPA)
    t0 = None
    if mode == "near":
        A, B = near_ordered_pair(spec, gap=0.05)
        p = tr.unit((1.0, 1.5, 2.0, 3.0))
    elif mode == "loewner":
        A, B = loewner_ordered_pair(spec, gap=0.05)
        p = tr.unit((0.25, 0.5, 1.0, 2.0))
    elif mode == "log":
        L = symmetrize(np.log(POWER_KAPPA) / 4 * (tr.rng.standard_normal((tr.n, tr.n))))
        V = haar_orthogonal(tr.n, tr.rng)
        P = symmetrize((V * tr.rng.uniform(0.05, 1.0, tr.n)) @ V.T)
        A, B = matrix_exp(L), matrix_exp(L + P)
        p = tr.unit((0.5, 1.0, 2.0))
    else:
        # A >= I and mean(A, B, t0) = c I <= I, with B recovered from the target mean
        V = haar_orthogonal(tr.n, tr.rng)
        a = tr.rng.uniform(1.0, 1.5, tr.n)
        A = symmetrize((V * a) @ V.T)
        if mode == "bound-wasserstein":
            # the preimage needs sqrt(c / a_i) > 1 - t0 for every eigenvalue a_i of A
            t0 = tr.unit((0.5, 0.75))
            lo = max(0.3, 1.1 * (1 - t0) ** 2 * float(a.max()))
        else:
            t0 = tr.unit((0.25, 0.5, 0.75))
            lo = 0.3
        target = float(tr.rng.uniform(lo, 0.95)) * np.eye(tr.n)
        pre = checks.wasserstein_preimage if mode == "bound-wasserstein" else checks.natural_preimage
        B = pre(A, target, t0)
        p = tr.unit((1.0, 1.5, 2.0))
    return checks.check_power_curves(A, B, p, grid, mode, t0=t0, seed=tr.seed)


def _congruence_near(tr: Trial) -> PropertyReport:
    A = tr.spd()
    V = haar_orthogonal(tr.n, tr.rng)
    mode = tr.index % 4
    if mode == 3:
        p = tr.rng.uniform(0.5, 2.0, tr.n)
    else:
        p = tr.rng.uniform(0.5, 2.0, tr.n) * tr.rng.choice([-1.0, 1.0], tr.n)
    ratio = tr.rng.uniform(1.1, 3.0, tr.n)
    if mode == 1:
        k = int(tr.rng.integers(tr.n))
        ratio[k] = tr.rng.uniform(0.2, 0.9)
    elif mode == 2:
        k = int(tr.rng.integers(tr.n))
        ratio[k] = -tr.rng.uniform(0.5, 2.0)
    elif mode == 3 and tr.index % 8 == 7:
        ratio[:] = 1.0
    P = symmetrize((V * p) @ V.T)
    Q = P if np.all(ratio == 1.0) else symmetrize((V * (p * ratio)) @ V.T)
    return checks.check_congruence_near(A, P, Q, seed=tr.seed)


def _section4(tr: Trial) -> PropertyReport:
    # Loewner-ordered pairs exercise the criteria that force A <= B
    A, B = loewner_ordered_pair(tr.spec(), gap=0.05) if tr.index % 3 == 2 else tr.pair()
    C = tr.spd() if tr.index % 2 else None
    return checks.check_section4(A, B, C, tr.unit((0.25, 0.5, 0.75, 1.0)), seed=tr.seed)


def _cross_form(tr: Trial) -> PropertyReport:
    A, B = tr.pair()
    return checks.check_cross_form(A, B, INTERIOR_T, seed=tr.seed)


def _golden(tr: Trial) -> PropertyReport:
    return checks.check_golden_examples()


def _nontransitive(tr: Trial) -> PropertyReport:
    return checks.check_nontransitive_triple()


def _natural_refutations(tr: Trial) -> PropertyReport:
    return checks.check_natural_refutations()


SUITES: dict[str, Driver] = {
    "mean-axioms": _mean_axioms,
    "chain": _chain,
    "near-main": _near_main,
    "curve-monotone": _curve_monotone,
    "sandwich": _sandwich,
    "determinants": _determinants,
    "geodesic-laws": _geodesic_laws,
    "inverse-relations": _inverse_relations,
    "power-curves": _power_curves,
    "congruence-near": _congruence_near,
    "section4": _section4,
    "cross-form": _cross_form,
    "golden": _golden,
    "non-transitivity": _nontransitive,
    "natural-refutations": _natural_refutations,
}
# fixed instances: one report regardless of the trial count
SINGLE_SHOT = frozenset({"golden", "non-transitivity", "natural-refutations"})


def iter_suite(name: str, config: SuiteConfig = SuiteConfig()) -> Iterator[PropertyReport]:
    """Yield one report per trial of the named suite (``"all"`` runs every suite)."""
    if name == "all":
        for each in SUITES:
            yield from iter_suite(each, config)
        return
    if name not in SUITES:
        raise InvalidInput(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    index = list(SUITES).index(name)
    driver = SUITES[name]
    trials = min(config.trials, 1) if name in SINGLE_SHOT else config.trials
    for k in range(trials):
        seed = (config.seed * 1_000_003 + index * 65_537 + k) % SEED_SPACE
        rng = rng_for(config.seed, index, k)
        n = config.n if config.n is not None else 2 + k % 5
        tr = Trial(k, seed, rng, n, config.kappa)
        try:
            yield driver(tr)
        except Skipped as exc:
            yield skipped_report(name, str(exc), seed=seed)


def run_suite(name: str, config: SuiteConfig = SuiteConfig()) -> list[PropertyReport]:
    return list(iter_suite(name, config))


def summarize(name: str, reports: list[PropertyReport]) -> dict:
    counts = tally(reports)
    return {"suite": name, "reports": len(reports), **counts}

