"""Checkable properties of the means and order relations.

Each ``check_*`` function evaluates one family of statements on a concrete
instance and returns a :class:`PropertyReport` whose sub-checks carry the
individual verdicts. Checks whose hypothesis fails on the instance raise
:class:`Skipped`.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike

from ..linalg import (
    InvalidInput,
    Tolerance,
    abs_of,
    as_spd,
    as_sym,
    eigvals,
    inv,
    matrix_log,
    matrix_power,
    sqrtm,
    symmetrize,
)
from ..means import (
    fidelity,
    geo_ratio,
    harmonic,
    log_euclidean,
    nabla,
    natural,
    sharp,
    wasserstein,
    wasserstein_closed_form,
    wasserstein_polar,
)
from ..orders import (
    OrderRelationKind,
    classify,
    eig_entrywise_cmp,
    log_majorize_cmp,
    loewner_cmp,
    near_cmp,
    near_ratio_eigenvalues,
    weak_log_majorize_cmp,
)
from ..verdict import Verdict, decide
from . import fixtures as fx
from .report import ID_RTOL, PropertyReport, Recorder, Skipped

__all__ = [
    "check_mean_axioms",
    "check_chain",
    "check_near_main",
    "check_curve_monotone",
    "check_sandwich",
    "check_det",
    "check_geodesic_laws",
    "check_inverse_relations",
    "check_power_curves",
    "check_congruence_near",
    "check_section4",
    "check_cross_form",
    "check_golden_examples",
    "check_natural_refutations",
    "check_nontransitive_triple",
    "wasserstein_preimage",
    "natural_preimage",
]

DEFAULT_TOL = Tolerance()
DET_RTOL = 1e-9
CROSS_RTOL = 1e-9
DISTINCT_GAP = 10 * ID_RTOL


def _same(A: np.ndarray, B: np.ndarray) -> bool:
    return A.shape == B.shape and np.array_equal(A, B)


def _logdet(M: np.ndarray) -> float:
    sign, ld = np.linalg.slogdet(M)
    if sign <= 0:
        return float("-inf")
    return float(ld)


def _det_identity(
    rec: Recorder, name: str, M: np.ndarray, log_ref: float, *, rtol: float = DET_RTOL, strict: bool = False
) -> None:
    """Record ``det M == exp(log_ref)`` to ``rtol`` relative.

    Rounding the entries of ``M`` alone perturbs its determinant by up to
    about ``n eps kappa(M)`` relative, so unless ``strict`` the tolerance is
    widened to that floor and the sub-check is annotated.
    """
    logdet = _logdet(M)
    err = abs(float(np.expm1(logdet - log_ref))) if np.isfinite(logdet) else float("inf")
    tol, note = rtol, ""
    if not strict:
        w = eigvals(M)
        floor = M.shape[0] * np.finfo(float).eps * float(w[0] / w[-1]) if w[-1] > 0 else float("inf")
        if floor > rtol:
            tol, note = floor, f"tolerance widened to {floor:.1e} by conditioning"
    rec.add(name, Verdict.HOLDS if err <= tol else Verdict.FAILS, -err, note)


def _log_le(rec: Recorder, name: str, lhs: float, rhs: float, tol: Tolerance) -> None:
    """Record ``lhs <= rhs`` for log-determinants."""
    scale = max(1.0, abs(lhs), abs(rhs))
    # log-determinants carry O(DET_RTOL) roundoff, so that is the floor
    floor = tol.floor(scale) + DET_RTOL * scale
    rec.order(name, decide(rhs - lhs, tol.band(scale) + 10 * floor, floor))


def _congruence_probe(n: int) -> np.ndarray:
    # fixed, well-conditioned, non-symmetric invertible matrix
    return np.eye(n) + 0.5 * np.triu(np.ones((n, n)), 1) - 0.25 * np.tril(np.ones((n, n)), -1)


def wasserstein_preimage(A: ArrayLike, W: ArrayLike, t: float) -> np.ndarray:
    """``C`` with ``wasserstein(A, C, t) == W`` for ``t != 0``.

    Inverts ``A^{-1} # (A <>_t C) = (1-t) I + t (A^{-1} # C)``; raises
    :class:`Skipped` when the recovered ``A^{-1} # C`` is not positive
    definite.
    """
    A = as_spd(A)
    Y = (geo_ratio(A, W) - (1.0 - t) * np.eye(A.shape[0])) / t
    if eigvals(Y)[-1] <= 0:
        raise Skipped("target is not a Wasserstein mean from this base")
    return symmetrize(Y @ A @ Y)


def natural_preimage(A: ArrayLike, N: ArrayLike, t: float) -> np.ndarray:
    """``C`` with ``natural(A, C, t) == N`` for ``t != 0``."""
    A = as_spd(A)
    Y = matrix_power(geo_ratio(A, N), 1.0 / t)
    return symmetrize(Y @ A @ Y)


def check_mean_axioms(
    A: ArrayLike,
    B: ArrayLike,
    t_grid: Sequence[float] = (0.0, 0.25, 0.5, 0.75, 1.0),
    *,
    tol: Tolerance = DEFAULT_TOL,
    seed: int | None = None,
) -> PropertyReport:
    """Identities and Loewner inequalities listed for the three geodesic means.

    Covers symmetry in ``t``, inversion, scaling, determinants, congruence
    invariance, the harmonic/geometric/arithmetic sandwich, joint
    monotonicity, the fixed-point identity and the geodesic composition
    rule (Wasserstein only for parameters in ``[0, 1]``).
    """
    A = as_spd(A)
    B = as_spd(B)
    rec = Recorder("mean-axioms", A, B, seed=seed)
    n = A.shape[0]
    Ai, Bi = inv(A), inv(B)
    a, b = 2.5, 0.4
    M = _congruence_probe(n)
    C = A + 0.5 * B
    D = B + A / 3.0
    ldA, ldB = _logdet(A), _logdet(B)
    s, u = 0.2, 0.9

    for t in t_grid:
        S, N, W = sharp(A, B, t), natural(A, B, t), wasserstein(A, B, t)
        rec.identity(f"sharp.swap[t={t}]", sharp(B, A, 1 - t, base="first"), sharp(A, B, t, base="first"))
        rec.identity(f"natural.swap[t={t}]", natural(B, A, 1 - t), N)
        rec.identity(f"wasserstein.swap[t={t}]", wasserstein(B, A, 1 - t), W)
        rec.identity(f"sharp.inverse[t={t}]", inv(S), sharp(Ai, Bi, t))
        rec.identity(f"natural.inverse[t={t}]", inv(N), natural(Ai, Bi, t))
        rec.identity(f"sharp.scale[t={t}]", sharp(a * A, b * B, t), a ** (1 - t) * b**t * S)
        rec.identity(f"natural.scale[t={t}]", natural(a * A, b * B, t), a ** (1 - t) * b**t * N)
        rec.identity(f"wasserstein.scale[t={t}]", wasserstein(a * A, a * B, t), a * W)
        _det_identity(rec, f"sharp.det[t={t}]", S, (1 - t) * ldA + t * ldB, strict=True)
        _det_identity(rec, f"natural.det[t={t}]", N, (1 - t) * ldA + t * ldB, strict=True)
        rec.identity(
            f"sharp.congruence[t={t}]",
            symmetrize(M @ S @ M.T),
            sharp(symmetrize(M @ A @ M.T), symmetrize(M @ B @ M.T), t),
        )
        if t in (0.0, 1.0):
            # the inequalities collapse to equalities at the endpoints
            end = A if t == 0.0 else B
            for name, E in (("harmonic", harmonic(A, B, t)), ("sharp", S), ("wasserstein", W), ("nabla", nabla(A, B, t))):
                rec.identity(f"{name}.endpoint[t={t}]", E, end)
        elif 0.0 < t < 1.0:
            rec.order(f"harmonic<=sharp[t={t}]", loewner_cmp(harmonic(A, B, t), S, tol))
            rec.order(f"sharp<=nabla[t={t}]", loewner_cmp(S, nabla(A, B, t), tol))
            rec.order(f"wasserstein<=nabla[t={t}]", loewner_cmp(W, nabla(A, B, t), tol))
            _log_le(rec, f"wasserstein.det>=[t={t}]", (1 - t) * ldA + t * ldB, _logdet(W), tol)
        if 0.0 <= t <= 1.0:
            rec.order(f"sharp.joint-monotone[t={t}]", loewner_cmp(S, sharp(C, D, t), tol))
            target = (1 - t) * s + t * u
            rec.identity(f"sharp.compose[t={t}]", sharp(sharp(A, B, s), sharp(A, B, u), t), sharp(A, B, target))
            rec.identity(
                f"natural.compose[t={t}]", natural(natural(A, B, s), natural(A, B, u), t), natural(A, B, target)
            )
            rec.identity(
                f"wasserstein.compose[t={t}]",
                wasserstein(wasserstein(A, B, s), wasserstein(A, B, u), t),
                wasserstein(A, B, target),
            )
    # on square roots: B A B would carry kappa(B)^2 kappa(A)
    Ah, Bh = sqrtm(A), sqrtm(B)
    rec.identity("sharp.fixed-point", sharp(inv(Ah), symmetrize(Bh @ Ah @ Bh), 0.5), Bh)
    return rec.done()


def check_chain(
    A: ArrayLike, B: ArrayLike, t: float, *, tol: Tolerance = DEFAULT_TOL, seed: int | None = None
) -> PropertyReport:
    """The chain harmonic <= sharp <log logE <log fidelity <log natural <~ wasserstein <= nabla.

    Also checks natural <~ nabla, harmonic <~ wasserstein and weak
    log-majorization of sharp by wasserstein. For ``A == B`` every mean must
    reproduce ``A``.
    """
    A = as_spd(A)
    B = as_spd(B)
    if not 0.0 < t < 1.0:
        raise Skipped(f"t={t} outside (0, 1)")
    rec = Recorder("chain", A, B, seed=seed)
    H, S, L, F = harmonic(A, B, t), sharp(A, B, t), log_euclidean(A, B, t), fidelity(A, B, t)
    N, W, Ar = natural(A, B, t), wasserstein(A, B, t), nabla(A, B, t)
    if _same(A, B):
        for name, M in (("harmonic", H), ("sharp", S), ("log-euclidean", L), ("fidelity", F),
                        ("natural", N), ("wasserstein", W), ("nabla", Ar)):
            rec.identity(f"{name}==A", M, A)
        return rec.done()
    rec.order("harmonic<=sharp", loewner_cmp(H, S, tol))
    rec.order("sharp<log log-euclidean", log_majorize_cmp(S, L, tol))
    rec.order("log-euclidean<log fidelity", log_majorize_cmp(L, F, tol))
    rec.order("fidelity<log natural", log_majorize_cmp(F, N, tol))
    rec.order("natural<~wasserstein", near_cmp(N, W, tol))
    rec.order("wasserstein<=nabla", loewner_cmp(W, Ar, tol))
    rec.order("natural<~nabla", near_cmp(N, Ar, tol))
    rec.order("harmonic<~wasserstein", near_cmp(H, W, tol))
    rec.order("sharp<wlog wasserstein", weak_log_majorize_cmp(S, W, tol))
    return rec.done()


def check_near_main(
    A: ArrayLike, B: ArrayLike, t: float, *, tol: Tolerance = DEFAULT_TOL, seed: int | None = None
) -> PropertyReport:
    """Near order between the spectral geometric and Wasserstein means.

    ``natural <~ wasserstein`` on ``(0, 1)`` (with the eigenvalue entrywise
    consequence), reversed for ``t > 1`` when ``A <~ B`` and for ``t < 0``
    when ``B <~ A``; the two means coincide exactly when ``A == B``.
    """
    A = as_spd(A)
    B = as_spd(B)
    rec = Recorder("near-main", A, B, seed=seed)
    if _same(A, B):
        rec.identity("natural==wasserstein", natural(A, B, t), wasserstein(A, B, t))
        return rec.done()
    if 0.0 < t < 1.0:
        N, W = natural(A, B, t), wasserstein(A, B, t)
        rec.order("natural<~wasserstein", near_cmp(N, W, tol))
        rec.order("natural<=_lambda wasserstein", eig_entrywise_cmp(N, W, tol))
    elif t > 1.0:
        if not near_cmp(A, B, tol).holds:
            raise Skipped("t > 1 needs A <~ B")
        N, W = natural(A, B, t), wasserstein(A, B, t)
        rec.order("wasserstein<~natural", near_cmp(W, N, tol))
    elif t < 0.0:
        if not near_cmp(B, A, tol).holds:
            raise Skipped("t < 0 needs B <~ A")
        N, W = natural(A, B, t), wasserstein(A, B, t)
        rec.order("wasserstein<~natural", near_cmp(W, N, tol))
    else:
        raise Skipped("t in {0, 1}: both means are endpoints")
    rec.distinct("natural!=wasserstein", N, W, DISTINCT_GAP)
    return rec.done()


def check_curve_monotone(
    A: ArrayLike,
    B: ArrayLike,
    t_grid: Sequence[float],
    scale: float | None = None,
    *,
    tol: Tolerance = DEFAULT_TOL,
    seed: int | None = None,
) -> PropertyReport:
    """Near-order monotonicity of the Wasserstein and spectral geometric curves.

    With ``scale`` given, the pair ``(scale**2 * A, B)`` is used instead.
    If ``A <~ B`` both curves increase (Wasserstein for ``t >= 0``); if
    ``B <~ A`` they decrease (Wasserstein for ``t <= 1``). If ``A <~ B``
    fails, no consecutive pair may increase (Wasserstein restricted to
    ``[0, 1]``), and symmetrically for ``B <~ A``.
    """
    A = as_spd(A)
    B = as_spd(B)
    grid = [float(t) for t in t_grid]
    if len(grid) < 2:
        raise Skipped("grid needs at least two points")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise InvalidInput("grid must be strictly increasing")
    if scale is not None:
        A = scale**2 * A
    rec = Recorder("curve-monotone", A, B, np.array(grid), seed=seed)
    pairs = list(zip(grid, grid[1:]))
    nat = {t: natural(A, B, t) for t in grid}
    if _same(A, B):
        for t0, t1 in pairs:
            rec.identity(f"natural.constant[{t0},{t1}]", nat[t1], nat[t0])
        return rec.done()

    up, down = near_cmp(A, B, tol), near_cmp(B, A, tol)
    was: dict[float, np.ndarray] = {}

    def W(t: float) -> np.ndarray:
        if t not in was:
            was[t] = wasserstein(A, B, t)
        return was[t]

    if up.holds:
        for t0, t1 in pairs:
            rec.order(f"natural.up[{t0},{t1}]", near_cmp(nat[t0], nat[t1], tol))
            if t0 >= 0:
                rec.order(f"wasserstein.up[{t0},{t1}]", near_cmp(W(t0), W(t1), tol))
    if down.holds:
        for t0, t1 in pairs:
            rec.order(f"natural.down[{t0},{t1}]", near_cmp(nat[t1], nat[t0], tol))
            if t1 <= 1:
                rec.order(f"wasserstein.down[{t0},{t1}]", near_cmp(W(t1), W(t0), tol))
    if up.fails:
        for t0, t1 in pairs:
            rec.not_order(f"natural.not-up[{t0},{t1}]", near_cmp(nat[t0], nat[t1], tol))
            if 0 <= t0 and t1 <= 1:
                rec.not_order(f"wasserstein.not-up[{t0},{t1}]", near_cmp(W(t0), W(t1), tol))
    if down.fails:
        for t0, t1 in pairs:
            rec.not_order(f"natural.not-down[{t0},{t1}]", near_cmp(nat[t1], nat[t0], tol))
            if 0 <= t0 and t1 <= 1:
                rec.not_order(f"wasserstein.not-down[{t0},{t1}]", near_cmp(W(t1), W(t0), tol))
    if not rec.report.details:
        raise Skipped("near order between A and B is indeterminate")
    return rec.done()


def _f_st(mu: np.ndarray, s: float, t: float) -> np.ndarray:
    return (1 - s + s * mu) / (1 - t + t * mu)


def check_sandwich(
    A: ArrayLike, B: ArrayLike, t: float, s: float, *, tol: Tolerance = DEFAULT_TOL, seed: int | None = None
) -> PropertyReport:
    """Scalar multiples of one curve point bracketing another, in the near order.

    With ``mu_1 >= ... >= mu_n`` the eigenvalues of ``A^{-1} # B`` and
    ``t < s``:

    1. ``mu_n^{2(s-t)} N_t <~ N_s <~ mu_1^{2(s-t)} N_t`` (always);
    2. ``f(mu_n)^2 W_t <~ W_s <~ f(mu_1)^2 W_t`` with
       ``f(mu) = (1-s+s mu)/(1-t+t mu)``, when ``t, s`` lie in ``[0, 1]`` or
       in the ranges beyond ``1/(1 - mu_1)`` or below ``1/(1 - mu_n)`` for a
       near-ordered pair;
    3. ``m^2 N_t <~ W_s <~ M^2 N_t`` with ``m, M`` the extremes of
       ``(1-s+s mu_i)/mu_i^t``, when ``1-s+s mu_i > 0`` for ``i = 1, n``.

    All six bounds are attained, so each comparison must land inside the
    band around zero.
    """
    A = as_spd(A)
    B = as_spd(B)
    if not t < s:
        raise Skipped("needs t < s")
    rec = Recorder("sandwich", A, B, np.array([t, s]), seed=seed)
    if _same(A, B):
        rec.identity("natural.constant", natural(A, B, s), natural(A, B, t))
        rec.identity("wasserstein.constant", wasserstein(A, B, s), wasserstein(A, B, t))
        return rec.done()
    mu = near_ratio_eigenvalues(A, B)
    mu1, mun = float(mu[0]), float(mu[-1])
    Nt, Ns = natural(A, B, t), natural(A, B, s)
    rec.tight("natural.lower", near_cmp(mun ** (2 * (s - t)) * Nt, Ns, tol))
    rec.tight("natural.upper", near_cmp(Ns, mu1 ** (2 * (s - t)) * Nt, tol))

    ordered = near_cmp(A, B, tol).holds or near_cmp(B, A, tol).holds
    cases = []
    if 0.0 <= t and s <= 1.0:
        cases.append("a")
    if ordered and mu1 != 1.0 and min(t, s) > 1.0 / (1.0 - mu1):
        cases.append("b")
    if ordered and mun != 1.0 and max(t, s) < 1.0 / (1.0 - mun):
        cases.append("c")
    if cases:
        Wt, Ws = wasserstein(A, B, t), wasserstein(A, B, s)
        f = _f_st(np.array([mu1, mun]), s, t)
        label = "+".join(cases)
        rec.tight(f"wasserstein.lower[{label}]", near_cmp(f[1] ** 2 * Wt, Ws, tol))
        rec.tight(f"wasserstein.upper[{label}]", near_cmp(Ws, f[0] ** 2 * Wt, tol))
    if 1 - s + s * mu1 > 0 and 1 - s + s * mun > 0:
        g = (1 - s + s * mu) / mu**t
        Ws = wasserstein(A, B, s)
        rec.tight("mixed.lower", near_cmp(float(np.min(g)) ** 2 * Nt, Ws, tol))
        rec.tight("mixed.upper", near_cmp(Ws, float(np.max(g)) ** 2 * Nt, tol))
    return rec.done()


def check_det(
    A: ArrayLike,
    B: ArrayLike,
    t_grid: Sequence[float],
    *,
    strict: bool = False,
    tol: Tolerance = DEFAULT_TOL,
    seed: int | None = None,
) -> PropertyReport:
    """Determinants along the three geodesics, in log form.

    ``det W_t = det A * prod (1-t+t mu_i)^2``,
    ``det N_t = det A^{1-t} det B^t = det A * prod mu_i^{2t}`` for every real
    ``t``, and ``det S_t = det A^{1-t} det B^t`` on ``[0, 1]``, each to
    ``DET_RTOL`` relative; ``det W_t >= det A^{1-t} det B^t`` on
    ``(0, 1)`` and the reverse for ``t > 1`` (``A <~ B``) or ``t < 0``
    (``B <~ A``).

    With ``strict=False`` each identity's tolerance is widened to the
    representation floor ``n eps kappa`` of the matrix whose determinant is
    taken, which matters only for nearly singular curve points.
    """
    A = as_spd(A)
    B = as_spd(B)
    rec = Recorder("determinants", A, B, np.asarray(t_grid, dtype=float), seed=seed)
    mu = near_ratio_eigenvalues(A, B)
    ldA, ldB = _logdet(A), _logdet(B)
    up = near_cmp(A, B, tol).holds
    down = near_cmp(B, A, tol).holds
    for t in t_grid:
        geo = (1 - t) * ldA + t * ldB
        factors = 1 - t + t * mu
        W = wasserstein(A, B, t)
        N = natural(A, B, t)
        if np.all(factors != 0):
            log_ref = ldA + 2 * float(np.sum(np.log(np.abs(factors))))
            _det_identity(rec, f"wasserstein.det[t={t}]", W, log_ref, strict=strict)
        _det_identity(rec, f"natural.det[t={t}]", N, geo, strict=strict)
        _det_identity(rec, f"natural.det-mu[t={t}]", N, ldA + 2 * t * float(np.sum(np.log(mu))), strict=strict)
        if 0.0 <= t <= 1.0:
            _det_identity(rec, f"sharp.det[t={t}]", sharp(A, B, t), geo, strict=strict)
        if 0.0 < t < 1.0:
            _log_le(rec, f"wasserstein.det>=geo[t={t}]", geo, _logdet(W), tol)
        elif (t > 1.0 and up) or (t < 0.0 and down):
            _log_le(rec, f"wasserstein.det<=geo[t={t}]", _logdet(W), geo, tol)
    return rec.done()


def check_geodesic_laws(
    A: ArrayLike,
    B: ArrayLike,
    s: float,
    u: float,
    t: float,
    *,
    tol: Tolerance = DEFAULT_TOL,
    seed: int | None = None,
) -> PropertyReport:
    """Re-parameterization identities.

    ``(N_s) #nat_t (N_u) = N_{(1-t)s+tu}`` for all reals. For the Wasserstein
    curve, ``A <>_t (A <>_s B) = A <>_{ts} B`` when ``A <~ B`` and
    ``t, s >= 0``, and ``(A <>_s B) <>_t B = A <>_{(1-t)s+t} B`` when
    ``B <~ A`` and ``t, s <= 1``. Always replays the commuting
    counterexample where the first law breaks for ``s > 2``.
    """
    A = as_spd(A)
    B = as_spd(B)
    rec = Recorder("geodesic-laws", A, B, np.array([s, u, t]), seed=seed)
    rec.identity(
        "natural.compose",
        natural(natural(A, B, s), natural(A, B, u), t),
        natural(A, B, (1 - t) * s + t * u),
    )
    if t >= 0 and s >= 0 and near_cmp(A, B, tol).holds:
        rec.identity("wasserstein.compose-left", wasserstein(A, wasserstein(A, B, s), t), wasserstein(A, B, t * s))
    if t <= 1 and s <= 1 and near_cmp(B, A, tol).holds:
        rec.identity(
            "wasserstein.compose-right",
            wasserstein(wasserstein(A, B, s), B, t),
            wasserstein(A, B, (1 - t) * s + t),
        )
    _replay_nonlaw(rec, 0.5, 3.0)
    return rec.done()


def _replay_nonlaw(rec: Recorder, t: float, s: float) -> None:
    A, B = fx.COMMUTING_A, fx.COMMUTING_B
    direct = wasserstein(A, B, t * s)
    nested = wasserstein(A, wasserstein(A, B, s), t)
    expected_nested = np.diag([(2 * (1 - t) + abs(2 - s) * t) ** 2, (1 - t + abs(1 + s) * t) ** 2])
    rec.identity("nonlaw.nested-closed-form", nested, expected_nested)
    rec.identity("nonlaw.direct-closed-form", direct, fx.commuting_wasserstein(t * s))
    gap = abs(direct[0, 0] - nested[0, 0])
    rec.truth("nonlaw.entry11-differs", gap > 0.1, gap - 0.1)


def check_inverse_relations(
    A: ArrayLike, B: ArrayLike, t: float, *, tol: Tolerance = DEFAULT_TOL, seed: int | None = None
) -> PropertyReport:
    """The sequence harmonic <= (A^-1 <> B^-1)^-1 <~ natural <~ wasserstein <= nabla.

    Includes ``(A^-1 nat B^-1)^-1 = A nat B``, the inverted sequence, the
    shortcut ``harmonic <~ wasserstein`` and the fact that inversion
    commutes with the Wasserstein mean only when ``A == B``.
    """
    A = as_spd(A)
    B = as_spd(B)
    if not 0.0 < t < 1.0:
        raise Skipped(f"t={t} outside (0, 1)")
    rec = Recorder("inverse-relations", A, B, seed=seed)
    Ai, Bi = inv(A), inv(B)
    H = harmonic(A, B, t)
    Wi = inv(wasserstein(Ai, Bi, t))
    N = natural(A, B, t)
    W = wasserstein(A, B, t)
    Ar = nabla(A, B, t)
    rec.identity("inverted-natural==natural", inv(natural(Ai, Bi, t)), N)
    if _same(A, B):
        for name, M in (("harmonic", H), ("inverted-wasserstein", Wi), ("natural", N), ("wasserstein", W)):
            rec.identity(f"{name}==A", M, A)
        rec.identity("wasserstein.inverse-commutes", inv(W), wasserstein(Ai, Bi, t))
        return rec.done()
    rec.order("harmonic<=inverted-wasserstein", loewner_cmp(H, Wi, tol))
    rec.order("inverted-wasserstein<~natural", near_cmp(Wi, N, tol))
    rec.order("natural<~wasserstein", near_cmp(N, W, tol))
    rec.order("wasserstein<=nabla", loewner_cmp(W, Ar, tol))
    rec.order("inverted-wasserstein<~wasserstein", near_cmp(Wi, W, tol))
    rec.order("harmonic<~wasserstein", near_cmp(H, W, tol))
    Wn = wasserstein(Ai, Bi, t)
    rec.order("inv-nabla<=inv-wasserstein", loewner_cmp(inv(Ar), inv(W), tol))
    rec.order("inv-wasserstein<~inv-natural", near_cmp(inv(W), inv(N), tol))
    rec.order("inv-natural<~wasserstein-of-inverses", near_cmp(inv(N), Wn, tol))
    rec.order("wasserstein-of-inverses<=nabla-of-inverses", loewner_cmp(Wn, nabla(Ai, Bi, t), tol))
    rec.distinct("wasserstein.inverse-differs", inv(W), Wn, DISTINCT_GAP)
    rec.distinct("inverted-wasserstein!=natural", Wi, N, DISTINCT_GAP)
    rec.distinct("inverted-wasserstein!=wasserstein", Wi, W, DISTINCT_GAP)
    return rec.done()


POWER_MODES = ("near", "loewner", "log", "bound-wasserstein", "bound-natural")


def check_power_curves(
    A: ArrayLike,
    B: ArrayLike,
    p: float,
    t_grid: Sequence[float],
    mode: str = "near",
    *,
    t0: float | None = None,
    tol: Tolerance = DEFAULT_TOL,
    seed: int | None = None,
) -> PropertyReport:
    """Near-order consequences for powers ``A^p``, ``B^p``.

    ``mode`` selects the hypothesis: ``"near"`` (``A <~ B``, ``p >= 1``),
    ``"loewner"`` (``A <= B``, ``p >= 0``) or ``"log"`` (``log A <= log B``,
    ``p >= 0``). Under it, ``A^p <~ B^p`` and ``B^-p <~ A^-p``, the curves
    ``A^p <>_t B^p``, ``B^-p <>_t A^-p`` (``t >= 0``) and ``A^p nat_t B^p``
    increase in the near order and in every eigenvalue, and on ``(0, 1)`` the
    curve points sit between the endpoints eigenvalue-wise.

    The bound modes need ``A >= I`` and ``A <>_{t0} B <= I``
    (``"bound-wasserstein"``) or ``A nat_{t0} B <= I``
    (``"bound-natural"``) with ``p >= 1``, and check the resulting scalar
    upper bounds on ``A^p <>_s B^p`` or ``A^p nat_s B^p`` for ``s`` in the
    grid within ``[0, 1]``.
    """
    A = as_spd(A)
    B = as_spd(B)
    if mode not in POWER_MODES:
        raise InvalidInput(f"mode must be one of {POWER_MODES}")
    n = A.shape[0]
    I = np.eye(n)
    rec = Recorder(f"power-curves.{mode}", A, B, np.array([p, *t_grid]), seed=seed)
    grid = sorted(float(t) for t in t_grid)
    Ap, Bp = matrix_power(A, p), matrix_power(B, p)

    if mode.startswith("bound"):
        if p < 1 or t0 is None or not 0.0 < t0 < 1.0:
            raise Skipped("bound modes need p >= 1 and t0 in (0, 1)")
        mean = wasserstein if mode == "bound-wasserstein" else natural
        if not (loewner_cmp(I, A, tol).holds and loewner_cmp(mean(A, B, t0), I, tol).holds):
            raise Skipped("bound hypothesis A >= I and mean(A, B, t0) <= I not met")
        lam_n = float(near_ratio_eigenvalues(A, B)[-1])
        if mode == "bound-wasserstein":
            c = (1.0 / (1 - t0 + t0 * lam_n)) ** (2 * p)
        else:
            c = (1.0 / lam_n) ** (2 * p * t0)
        for s in grid:
            if 0.0 <= s <= 1.0:
                rec.order(f"bound[s={s}]", loewner_cmp(mean(Ap, Bp, s), c * I, tol))
        return rec.done()

    if mode == "near":
        hyp = near_cmp(A, B, tol).holds and p >= 1
    elif mode == "loewner":
        hyp = loewner_cmp(A, B, tol).holds and p >= 0
    else:
        hyp = loewner_cmp(matrix_log(A), matrix_log(B), tol).holds and p >= 0
    if not hyp:
        raise Skipped(f"hypothesis of mode {mode!r} not met")

    Amp, Bmp = matrix_power(A, -p), matrix_power(B, -p)
    rec.order("A^p<~B^p", near_cmp(Ap, Bp, tol))
    rec.order("B^-p<~A^-p", near_cmp(Bmp, Amp, tol))
    curves = {
        "wasserstein": ([t for t in grid if t >= 0], lambda t: wasserstein(Ap, Bp, t)),
        "wasserstein-inv": ([t for t in grid if t >= 0], lambda t: wasserstein(Bmp, Amp, t)),
        "natural": (grid, lambda t: natural(Ap, Bp, t)),
    }
    for name, (ts, fn) in curves.items():
        pts = [fn(t) for t in ts]
        for (t_a, Ma), (t_b, Mb) in zip(zip(ts, pts), zip(ts[1:], pts[1:])):
            rec.order(f"{name}.near-up[{t_a},{t_b}]", near_cmp(Ma, Mb, tol))
            rec.order(f"{name}.eig-up[{t_a},{t_b}]", eig_entrywise_cmp(Ma, Mb, tol))
    for t in grid:
        if 0.0 < t < 1.0:
            for name, M in (("wasserstein", wasserstein(Ap, Bp, t)), ("natural", natural(Ap, Bp, t))):
                rec.order(f"{name}.A^p<=_lambda[t={t}]", eig_entrywise_cmp(Ap, M, tol))
                rec.order(f"{name}.<=_lambda B^p[t={t}]", eig_entrywise_cmp(M, Bp, tol))
    return rec.done()


def check_congruence_near(
    A: ArrayLike, P: ArrayLike, Q: ArrayLike, *, tol: Tolerance = DEFAULT_TOL, seed: int | None = None
) -> PropertyReport:
    """Near order of congruences ``PAP``, ``QAQ`` for commuting nonsingular symmetric ``P, Q``.

    ``I <= P^-1 Q`` implies ``PAP <~ QAQ``. When ``P^-1 Q`` is positive
    definite, ``(PAP)^-1 # (QAQ) = P^-1 Q``, so the two statements are
    equivalent and their margins coincide; for positive definite ``P, Q``
    this reads ``P <= Q`` iff ``PAP <~ QAQ``. Without positivity of
    ``P^-1 Q`` the converse can fail (``Q = -2P`` gives ``QAQ = 4 PAP``).
    """
    A = as_spd(A)
    P = as_sym(P)
    Q = as_sym(Q)
    if P.shape != A.shape or Q.shape != A.shape:
        raise InvalidInput("dimension mismatch")
    if np.linalg.norm(P @ Q - Q @ P) > 1e-10 * max(1.0, np.linalg.norm(P) * np.linalg.norm(Q)):
        raise InvalidInput("P and Q do not commute")
    if min(abs(eigvals(P))) == 0 or min(abs(eigvals(Q))) == 0:
        raise InvalidInput("P and Q must be nonsingular")
    rec = Recorder("congruence-near", A, P, Q, seed=seed)
    PAP, QAQ = symmetrize(P @ A @ P), symmetrize(Q @ A @ Q)
    if _same(P, Q):
        rec.identity("PAP==QAQ", PAP, QAQ)
        return rec.done()
    R = symmetrize(np.linalg.solve(P, Q))
    predicted = loewner_cmp(np.eye(A.shape[0]), R, tol)
    actual = near_cmp(PAP, QAQ, tol)
    r_min = float(eigvals(R)[-1])
    if predicted.holds:
        rec.order("I<=P^-1Q => PAP<~QAQ", actual)
    if r_min > 0:
        _agree(rec, "I<=P^-1Q iff PAP<~QAQ", predicted, actual)
        rec.scalar("near-margin==loewner-margin", actual.margin, r_min - 1.0, 1e-8)
    else:
        rec.truth("P^-1Q indefinite => not I<=P^-1Q", predicted.fails, -predicted.margin)
    if eigvals(P)[-1] > 0 and eigvals(Q)[-1] > 0:
        _agree(rec, "P<=Q iff PAP<~QAQ", loewner_cmp(P, Q, tol), actual)
    return rec.done()


def _agree(rec: Recorder, name: str, a, b) -> None:
    if Verdict.INDETERMINATE in (a.verdict, b.verdict):
        rec.add(name, Verdict.INDETERMINATE, -min(abs(a.margin), abs(b.margin)))
    elif a.verdict is b.verdict:
        rec.add(name, Verdict.HOLDS, min(abs(a.margin), abs(b.margin)), str(a.verdict))
    else:
        rec.add(name, Verdict.FAILS, -max(abs(a.margin), abs(b.margin)), f"{a.verdict} vs {b.verdict}")


def check_section4(
    A: ArrayLike,
    B: ArrayLike,
    C: ArrayLike | None = None,
    t: float = 0.5,
    s_grid: Sequence[float] = (0.0, 0.125, 0.25, 0.375, 0.5),
    *,
    tol: Tolerance = DEFAULT_TOL,
    seed: int | None = None,
) -> PropertyReport:
    """Loewner-order identities and inequalities tying both means to ``A^{-1} # B``.

    * ``A^-1 # W_t = B # (B^-1 <>_t A^-1) = (1-t) I + t X`` and
      ``A^-1 # N_t = B # (B^-1 nat_t A^-1) = X^t`` with ``X = A^-1 # B``;
    * ``[A # W_t^-1] nabla_t [B # W_t^-1] = I`` and
      ``[A # N_t^-1]^{1-t} [B # N_t^-1]^t = I``;
    * ``A^-1 # N_t <= A^-1 # W_t`` and the same with ``B``, also in the
      ``|N_t^{1/2} A^{1/2}| <= |W_t^{1/2} A^{1/2}|`` form;
    * if ``A <>_t B <= A <>_t C`` then ``A^-1 #_s B <= A^-1 #_s C`` for
      ``s`` in ``[0, 1/2]``. Tested on a ``C`` built so the hypothesis holds,
      and on the supplied ``C`` when its hypothesis holds;
    * equal Wasserstein or spectral geometric means force ``B == C``;
    * for ``t < 1`` each of ``A^-1 <>_t A <= A^-1 <>_t B``,
      ``B^-1 <>_t B <= A^-1 <>_t B``, ``B^-1 <>_t A <= A^-1 <>_t A`` and
      ``B^-1 <>_t A <= B^-1 <>_t B`` implies ``A <= B``;
    * ``I nabla_t X >= I <>_t X = (I nabla_t X^{1/2})^2 >= X^t = I nat_t X``;
    * ``|W_t^{1/2} A^{1/2}| = A nabla_t |B^{1/2} A^{1/2}| >= A <>_t |B^{1/2} A^{1/2}|``.
    """
    A = as_spd(A)
    B = as_spd(B)
    if not 0.0 < t <= 1.0:
        raise Skipped(f"t={t} outside (0, 1]")
    if any(not 0.0 <= s <= 0.5 for s in s_grid):
        raise InvalidInput("s values must lie in [0, 1/2]")
    arrays = (A, B) if C is None else (A, B, as_spd(C))
    rec = Recorder("section4", *arrays, seed=seed)
    n = A.shape[0]
    I = np.eye(n)
    Ai, Bi = inv(A), inv(B)
    X = geo_ratio(A, B)
    W, N = wasserstein(A, B, t), natural(A, B, t)
    Xt = matrix_power(X, t)
    IX = nabla(I, X, t)

    rec.identity("A^-1#W==I nabla X", geo_ratio(A, W), IX)
    rec.identity("B#(B^-1<>A^-1)==I nabla X", sharp(B, wasserstein(Bi, Ai, t)), IX)
    rec.identity("A^-1#N==X^t", geo_ratio(A, N), Xt)
    rec.identity("B#(B^-1 nat A^-1)==X^t", sharp(B, natural(Bi, Ai, t)), Xt)
    Wi, Ni = inv(W), inv(N)
    rec.identity("wasserstein.unit", nabla(sharp(A, Wi), sharp(B, Wi), t), I)
    rec.identity("natural.unit", matrix_power(sharp(A, Ni), 1 - t) @ matrix_power(sharp(B, Ni), t), I)

    rec.order("A^-1#N<=A^-1#W", loewner_cmp(geo_ratio(A, N), geo_ratio(A, W), tol))
    rec.order("B^-1#N<=B^-1#W", loewner_cmp(geo_ratio(B, N), geo_ratio(B, W), tol))
    Ah, Bh = sqrtm(A), sqrtm(B)
    Nh, Wh = sqrtm(N), sqrtm(W)
    rec.order("|N^1/2 A^1/2|<=|W^1/2 A^1/2|", loewner_cmp(abs_of(Nh @ Ah), abs_of(Wh @ Ah), tol))
    rec.order("|N^1/2 B^1/2|<=|W^1/2 B^1/2|", loewner_cmp(abs_of(Nh @ Bh), abs_of(Wh @ Bh), tol))

    # Loewner order between Wasserstein means lifts to A^-1 #_s B, s in [0, 1/2]
    M = W
    C2 = wasserstein_preimage(A, M + 0.1 * B, t)
    rec.identity("wasserstein.preimage", wasserstein(A, C2, t), M + 0.1 * B)
    for s in s_grid:
        rec.order(f"wasserstein.geo-monotone[s={s}]", loewner_cmp(sharp(Ai, B, s), sharp(Ai, C2, s), tol))
    if C is not None and loewner_cmp(M, wasserstein(A, arrays[2], t), tol).holds:
        for s in s_grid:
            rec.order(
                f"wasserstein.geo-monotone.given-C[s={s}]",
                loewner_cmp(sharp(Ai, B, s), sharp(Ai, arrays[2], s), tol),
            )
    # equal means force equal operands, for both means
    rec.identity("wasserstein.cancellation", wasserstein_preimage(A, W, t), B)
    rec.identity("natural.cancellation", natural_preimage(A, N, t), B)

    rec.identity("A^-1 nat A==A^(2t-1)", natural(Ai, A, t), matrix_power(A, 2 * t - 1))
    Aih = sqrtm(Ai)
    rec.identity("A^-1<>A==(A^-1/2 nabla A^1/2)^2", wasserstein(Ai, A, t), nabla(Aih, Ah, t) @ nabla(Aih, Ah, t))
    if t < 1.0:
        # first criterion made true by construction, then A <= B' must follow
        B2 = wasserstein_preimage(Ai, wasserstein(Ai, A, t) + 0.1 * Ai, t)
        rec.order("wasserstein.forced-criterion1=>A<=B", loewner_cmp(A, B2, tol))
        hyps = (
            (wasserstein(Ai, A, t), wasserstein(Ai, B, t)),
            (wasserstein(Bi, B, t), wasserstein(Ai, B, t)),
            (wasserstein(Bi, A, t), wasserstein(Ai, A, t)),
            (wasserstein(Bi, A, t), wasserstein(Bi, B, t)),
        )
        for k, (lo, hi) in enumerate(hyps, start=1):
            if loewner_cmp(lo, hi, tol).holds:
                rec.order(f"wasserstein.criterion{k}=>A<=B", loewner_cmp(A, B, tol))

    Xh = sqrtm(X)
    IXh = nabla(I, Xh, t)
    W_IX = wasserstein(I, X, t)
    rec.order("I nabla X>=I<>X", loewner_cmp(W_IX, IX, tol))
    rec.identity("I<>X==(I nabla X^1/2)^2", W_IX, IXh @ IXh)
    rec.order("I<>X>=X^t", loewner_cmp(Xt, W_IX, tol))
    rec.identity("X^t==I nat X", natural(I, X, t), Xt)

    Y = abs_of(Bh @ Ah)
    lhs = abs_of(Wh @ Ah)
    rec.identity("|W^1/2 A^1/2|==A nabla |B^1/2 A^1/2|", lhs, nabla(A, Y, t))
    rec.order("|W^1/2 A^1/2|>=A<>|B^1/2 A^1/2|", loewner_cmp(wasserstein(A, Y, t), lhs, tol))
    return rec.done()


def check_cross_form(
    A: ArrayLike, B: ArrayLike, t_grid: Sequence[float], *, rtol: float = CROSS_RTOL, seed: int | None = None
) -> PropertyReport:
    """The congruence, closed-form and polar evaluations of the Wasserstein mean agree pairwise."""
    A = as_spd(A)
    B = as_spd(B)
    rec = Recorder("cross-form", A, B, np.asarray(t_grid, dtype=float), seed=seed)
    for t in t_grid:
        W = wasserstein(A, B, t)
        Wc = wasserstein_closed_form(A, B, t)
        Wp = wasserstein_polar(A, B, t)
        rec.identity(f"congruence==closed[t={t}]", Wc, W, rtol)
        rec.identity(f"congruence==polar[t={t}]", Wp, W, rtol)
        rec.identity(f"closed==polar[t={t}]", Wp, Wc, rtol)
    return rec.done()


def check_golden_examples() -> PropertyReport:
    """Reproduce every printed value of the three worked examples."""
    rec = Recorder("golden", fx.NO_ENTRYWISE_A, fx.NO_ENTRYWISE_B, fx.NEAR_NOT_LOEWNER_A, fx.NEAR_NOT_LOEWNER_B)
    A, B, t = fx.NO_ENTRYWISE_A, fx.NO_ENTRYWISE_B, fx.NO_ENTRYWISE_T
    S, W = sharp(A, B, t), wasserstein(A, B, t)
    for name, got, want in (
        ("sharp.entries", S, fx.NO_ENTRYWISE_SHARP),
        ("wasserstein.entries", W, fx.NO_ENTRYWISE_WASSERSTEIN),
        ("sharp.eigenvalues", eigvals(S), fx.NO_ENTRYWISE_SHARP_EIG),
        ("wasserstein.eigenvalues", eigvals(W), fx.NO_ENTRYWISE_WASSERSTEIN_EIG),
    ):
        err = float(np.max(np.abs(got - want)))
        rec.truth(name, err <= fx.PRINT_TOL, fx.PRINT_TOL - err)
    cls = classify(S, W)
    rec.truth("sharp-vs-wasserstein.classified-weak-log", cls.relation is OrderRelationKind.WEAK_LOG_MAJORIZATION,
              note=str(cls.relation))
    rec.not_order("sharp-vs-wasserstein.no-entrywise", eig_entrywise_cmp(S, W))
    rec.not_order("wasserstein-vs-sharp.no-entrywise", eig_entrywise_cmp(W, S))

    A, B, t = fx.NEAR_NOT_LOEWNER_A, fx.NEAR_NOT_LOEWNER_B, fx.NEAR_NOT_LOEWNER_T
    N, W = natural(A, B, t), wasserstein(A, B, t)
    diff = eigvals(W - N)[::-1]
    errs = np.abs(diff - fx.NEAR_NOT_LOEWNER_DIFF_EIG)
    for k in range(2):
        rec.truth(f"difference.eigenvalue[{k}]", errs[k] <= fx.NEAR_NOT_LOEWNER_DIFF_TOL[k],
                  float(fx.NEAR_NOT_LOEWNER_DIFF_TOL[k] - errs[k]))
    rec.order("natural<~wasserstein", near_cmp(N, W))
    rec.not_order("natural<=wasserstein", loewner_cmp(N, W))

    for t in fx.COMMUTING_T_GRID:
        W = wasserstein(fx.COMMUTING_A, fx.COMMUTING_B, t)
        rec.identity(f"commuting.wasserstein[t={t}]", W, fx.commuting_wasserstein(t), 1e-12)
    _replay_nonlaw(rec, 0.5, 3.0)
    return rec.done()


def check_natural_refutations() -> PropertyReport:
    """Pinned instances refuting natural-looking extensions of true statements.

    For the Wasserstein mean, ``A <>_t B <= A <>_t C`` lifts to
    ``A^-1 #_s B <= A^-1 #_s C`` and four mean inequalities each force
    ``A <= B``. Each instance here meets the spectral geometric version of
    the hypothesis strictly while the conclusion fails strictly. The last
    instance shows ``PAP <~ QAQ`` without ``I <= P^-1 Q`` once ``P^-1 Q`` is
    not positive definite.
    """
    rec = Recorder("natural-refutations", fx.NATURAL_LIFT_B_ROOT, fx.NATURAL_LIFT_C_ROOT)
    floor = fx.COUNTEREXAMPLE_MIN_MARGIN
    A = fx.NATURAL_LIFT_A
    B = matrix_power(fx.NATURAL_LIFT_B_ROOT, 4)
    C = matrix_power(fx.NATURAL_LIFT_C_ROOT, 4)
    t, s = fx.NATURAL_LIFT_T, fx.NATURAL_LIFT_S
    hyp = loewner_cmp(natural(A, B, t), natural(A, C, t))
    concl = loewner_cmp(sharp(inv(A), B, s), sharp(inv(A), C, s))
    rec.truth("lift.hypothesis-holds", hyp.holds and hyp.margin > floor, hyp.margin - floor)
    rec.truth("lift.conclusion-fails", concl.fails and -concl.margin > floor, -concl.margin - floor)
    for k, A, B, t in fx.NATURAL_CRITERIA_COUNTEREXAMPLES:
        Ai, Bi = inv(A), inv(B)
        lo, hi = (
            (natural(Ai, A, t), natural(Ai, B, t)),
            (natural(Bi, B, t), natural(Ai, B, t)),
            (natural(Bi, A, t), natural(Ai, A, t)),
            (natural(Bi, A, t), natural(Bi, B, t)),
        )[k - 1]
        hyp = loewner_cmp(lo, hi)
        concl = loewner_cmp(A, B)
        rec.truth(f"criterion{k}.hypothesis-holds", hyp.holds and hyp.margin > floor, hyp.margin - floor)
        rec.truth(f"criterion{k}.A<=B-fails", concl.fails and -concl.margin > floor, -concl.margin - floor)
        # the Wasserstein version of the same hypothesis must not hold here
        wlo, whi = (
            (wasserstein(Ai, A, t), wasserstein(Ai, B, t)),
            (wasserstein(Bi, B, t), wasserstein(Ai, B, t)),
            (wasserstein(Bi, A, t), wasserstein(Ai, A, t)),
            (wasserstein(Bi, A, t), wasserstein(Bi, B, t)),
        )[k - 1]
        rec.not_order(f"criterion{k}.wasserstein-hypothesis-fails", loewner_cmp(wlo, whi))
    A, P, Q = fx.CONGRUENCE_A, fx.CONGRUENCE_P, fx.CONGRUENCE_Q
    rec.not_order("congruence.I<=P^-1Q", loewner_cmp(np.eye(2), np.linalg.solve(P, Q)))
    near = near_cmp(symmetrize(P @ A @ P), symmetrize(Q @ A @ Q))
    rec.truth("congruence.PAP<~QAQ", near.holds and near.margin > floor, near.margin - floor)
    return rec.done()


def check_nontransitive_triple() -> PropertyReport:
    """The pinned triple shows the near order is not transitive."""
    A, B, C = fx.NONTRANSITIVE_A, fx.NONTRANSITIVE_B, fx.NONTRANSITIVE_C
    rec = Recorder("non-transitivity", A, B, C)
    floor = fx.NONTRANSITIVE_MIN_MARGIN
    ab, bc, ac = near_cmp(A, B), near_cmp(B, C), near_cmp(A, C)
    rec.truth("A<~B", ab.holds and ab.margin > floor, ab.margin - floor)
    rec.truth("B<~C", bc.holds and bc.margin > floor, bc.margin - floor)
    rec.truth("not A<~C", ac.fails and -ac.margin > floor, -ac.margin - floor)
    return rec.done()

