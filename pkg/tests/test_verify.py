import numpy as np
import pytest
from hypothesis import given, settings

from spdmeans.gen import GenSpec, loewner_ordered_pair, near_ordered_pair, random_spd
from spdmeans.linalg import InvalidInput, inv, matrix_power
from spdmeans.means import natural, sharp, wasserstein
from spdmeans.orders import loewner_cmp, near_cmp
from spdmeans.verdict import OrderVerdict, Verdict
from spdmeans.verify import (
    SUITES,
    Skipped,
    SuiteConfig,
    check_chain,
    check_congruence_near,
    check_cross_form,
    check_curve_monotone,
    check_det,
    check_geodesic_laws,
    check_golden_examples,
    check_inverse_relations,
    check_mean_axioms,
    check_natural_refutations,
    check_near_main,
    check_nontransitive_triple,
    check_power_curves,
    check_sandwich,
    check_section4,
    iter_suite,
    run_suite,
    summarize,
    tally,
    wasserstein_preimage,
)
from spdmeans.verify import fixtures as fx
from spdmeans.verify.report import Recorder

from conftest import interior_t, spd_pair

HOLDS = Verdict.HOLDS
A0 = random_spd(GenSpec(3, 1e2, 11))
B0 = random_spd(GenSpec(3, 1e2, 12))
D41, D14 = np.diag([4.0, 1.0]), np.diag([1.0, 4.0])


def assert_holds(report):
    bad = [(d.name, str(d.verdict), d.margin) for d in report.details if d.verdict is not HOLDS]
    assert report.verdict is HOLDS, bad


class TestRecorder:
    def test_not_order_flips(self):
        rec = Recorder("x")
        rec.not_order("a", OrderVerdict(Verdict.FAILS, -1.0, 1e-9))
        rec.not_order("b", OrderVerdict(Verdict.HOLDS, 1.0, 1e-9))
        r = rec.done()
        assert [d.verdict for d in r.details] == [Verdict.HOLDS, Verdict.FAILS]
        assert r.verdict is Verdict.FAILS and r.worst_margin == -1.0

    def test_tight(self):
        rec = Recorder("x")
        rec.tight("zero", OrderVerdict(Verdict.INDETERMINATE, -5e-10, 1e-9))
        rec.tight("slack", OrderVerdict(Verdict.HOLDS, 1e-3, 1e-9))
        assert [d.verdict for d in rec.done().details] == [Verdict.HOLDS, Verdict.FAILS]

    def test_identity_and_distinct(self):
        rec = Recorder("x")
        rec.identity("same", np.eye(2), np.eye(2) * (1 + 1e-12))
        rec.identity("differ", np.eye(2), 2 * np.eye(2))
        rec.distinct("apart", np.eye(2), 2 * np.eye(2), 1e-7)
        assert [d.verdict for d in rec.done().details] == [HOLDS, Verdict.FAILS, HOLDS]

    def test_digest_stable(self):
        a = Recorder("x", np.eye(2), seed=3).done().instance_digest
        b = Recorder("x", np.eye(2), seed=3).done().instance_digest
        c = Recorder("x", np.eye(2), seed=4).done().instance_digest
        assert a == b != c

    def test_line_is_json(self):
        import json

        r = check_golden_examples()
        rec = json.loads(r.to_line())
        assert rec["property"] == "golden" and rec["verdict"] == "holds"

    def test_tally(self):
        counts = tally([check_golden_examples(), check_nontransitive_triple()])
        assert counts["holds"] == 2 and counts["fails"] == 0


class TestReflexive:
    """Every check must hold with all equalities on ``A == B``."""

    def test_mean_axioms(self):
        assert_holds(check_mean_axioms(A0, A0))

    def test_chain(self):
        assert_holds(check_chain(A0, A0, 0.5))

    def test_near_main(self):
        assert_holds(check_near_main(A0, A0, 0.5))

    def test_curve(self):
        assert_holds(check_curve_monotone(A0, A0, (0.0, 0.5, 1.0)))

    def test_sandwich(self):
        assert_holds(check_sandwich(A0, A0, 0.3, 0.7))

    def test_det(self):
        assert_holds(check_det(A0, A0, (-1.0, 0.5, 2.0)))

    def test_inverse(self):
        assert_holds(check_inverse_relations(A0, A0, 0.5))

    def test_section4(self):
        assert_holds(check_section4(A0, A0, A0, 0.5))


class TestExamples:
    def test_golden(self):
        assert_holds(check_golden_examples())

    def test_nontransitive(self):
        assert_holds(check_nontransitive_triple())

    def test_refutations(self):
        assert_holds(check_natural_refutations())

    def test_random_pair(self):
        for check in (check_mean_axioms, check_det):
            args = ((0.0, 0.25, 0.5, 0.75, 1.0),) if check is check_det else ()
            assert_holds(check(A0, B0, *args))
        for check in (check_chain, check_near_main, check_inverse_relations, check_section4):
            assert_holds(check(A0, B0, t=0.5))

    def test_joint_monotonicity_on_loewner_pairs(self):
        A, C = loewner_ordered_pair(GenSpec(3, 1e2, 5))
        assert_holds(check_mean_axioms(A, C))

    def test_near_main_example(self):
        r = check_near_main(fx.NEAR_NOT_LOEWNER_A, fx.NEAR_NOT_LOEWNER_B, 0.5)
        assert_holds(r)

    def test_reversed_near_order_beyond_one(self):
        A, B = near_ordered_pair(GenSpec(3, 1e2, 8), gap=0.2)
        assert_holds(check_near_main(A, B, 2.0))

    def test_curve_diagonal(self):
        A, B = np.diag([4.0, 1.0]), np.diag([16.0, 4.0])
        assert_holds(check_curve_monotone(A, B, (0.0, 0.5, 1.0, 2.0)))

    def test_curve_incomparable(self):
        assert near_cmp(D41, D14).fails and near_cmp(D14, D41).fails
        assert_holds(check_curve_monotone(D41, D14, (0.0, 0.25, 0.5, 0.75, 1.0)))

    def test_sandwich_commuting(self):
        assert_holds(check_sandwich(D41, D14, 0.2, 0.7))

    def test_det_commuting(self):
        for t in (-1.0, 0.5, 2.0):
            assert np.linalg.det(natural(D41, D14, t)) == pytest.approx(4.0, rel=1e-13)
        A, B = near_ordered_pair(GenSpec(3, 1e2, 4), gap=0.1)
        assert_holds(check_det(A, B, (1.5,)))

    def test_geodesic_laws(self):
        assert_holds(check_geodesic_laws(D41, D14, 0.3, 0.3, 0.5))
        A, B = near_ordered_pair(GenSpec(3, 1e2, 9), gap=0.1)
        r = check_geodesic_laws(A, B, 2.5, 0.2, 0.4)
        assert_holds(r)
        names = [d.name for d in r.details]
        assert "wasserstein.compose-left" in names and "nonlaw.entry11-differs" in names

    def test_nonlaw_gap(self):
        direct = wasserstein(D41, D14, 1.5)
        nested = wasserstein(D41, wasserstein(D41, D14, 3.0), 0.5)
        assert abs(direct[0, 0] - nested[0, 0]) > 0.1

    def test_power_curves_scalar(self):
        assert_holds(check_power_curves(4 * np.eye(2), 9 * np.eye(2), 2.0, (0.0, 0.5, 1.0)))

    def test_power_curves_loewner(self):
        A, B = loewner_ordered_pair(GenSpec(3, 10.0, 2))
        assert_holds(check_power_curves(A, B, 3.0, (0.0, 0.25, 0.5, 0.75, 1.0), mode="loewner"))

    def test_power_curves_mode(self):
        with pytest.raises(InvalidInput):
            check_power_curves(A0, B0, 2.0, (0.5,), mode="sideways")

    def test_cross_form(self):
        assert_holds(check_cross_form(A0, B0, (0.1, 0.5, 0.9)))


class TestCongruence:
    def test_equal(self):
        assert_holds(check_congruence_near(A0, np.eye(3), np.eye(3)))

    def test_scaled(self):
        A = fx.CONGRUENCE_A
        assert_holds(check_congruence_near(A, np.eye(2), 2 * np.eye(2)))
        assert near_cmp(A, 4 * A).holds

    def test_indefinite_ratio(self):
        A, P, Q = fx.CONGRUENCE_A, fx.CONGRUENCE_P, fx.CONGRUENCE_Q
        assert near_cmp(P @ A @ P, Q @ A @ Q).holds
        assert loewner_cmp(np.eye(2), inv(P) @ Q).fails
        assert_holds(check_congruence_near(A, P, Q))

    def test_commuting_mixed_sign(self):
        V = np.linalg.qr(np.array([[1.0, 2.0, 0.0], [0.5, -1.0, 1.0], [0.0, 1.0, 3.0]]))[0]
        P = V @ np.diag([1.0, -2.0, 0.5]) @ V.T
        Q = V @ np.diag([3.0, -2.5, 0.4]) @ V.T
        assert_holds(check_congruence_near(A0, P, Q))

    def test_non_commuting(self):
        with pytest.raises(InvalidInput):
            check_congruence_near(A0, A0, B0)


class TestRefutedClaims:
    """The pinned data refute the spectral-mean analogues by a clear margin."""

    def test_lift(self):
        A, t, s = fx.NATURAL_LIFT_A, fx.NATURAL_LIFT_T, fx.NATURAL_LIFT_S
        B = matrix_power(fx.NATURAL_LIFT_B_ROOT, 4)
        C = matrix_power(fx.NATURAL_LIFT_C_ROOT, 4)
        assert loewner_cmp(natural(A, B, t), natural(A, C, t)).margin > fx.COUNTEREXAMPLE_MIN_MARGIN
        assert loewner_cmp(sharp(inv(A), B, s), sharp(inv(A), C, s)).margin < -fx.COUNTEREXAMPLE_MIN_MARGIN
        # the same hypothesis for the Wasserstein mean would lift
        assert not loewner_cmp(wasserstein(A, B, t), wasserstein(A, C, t)).holds

    @pytest.mark.parametrize("k,A,B,t", fx.NATURAL_CRITERIA_COUNTEREXAMPLES)
    def test_criteria(self, k, A, B, t):
        Ai, Bi = inv(A), inv(B)
        lo, hi = {
            1: (natural(Ai, A, t), natural(Ai, B, t)),
            2: (natural(Bi, B, t), natural(Ai, B, t)),
            3: (natural(Bi, A, t), natural(Ai, A, t)),
            4: (natural(Bi, A, t), natural(Bi, B, t)),
        }[k]
        assert loewner_cmp(lo, hi).margin > fx.COUNTEREXAMPLE_MIN_MARGIN
        assert loewner_cmp(A, B).margin < -fx.COUNTEREXAMPLE_MIN_MARGIN


class TestDeterminants:
    def test_strict_flags_nearly_singular_points(self):
        # pair 244 of the 500-pair corpus: the t = 1.5 Wasserstein point has kappa ~ 2e9
        A, B = random_spd(GenSpec(2 + 244 % 7, 1e4, 488)), random_spd(GenSpec(2 + 244 % 7, 1e4, 489))
        strict = check_det(A, B, (1.5,), strict=True)
        relaxed = check_det(A, B, (1.5,))
        assert strict.verdict is Verdict.FAILS
        assert_holds(relaxed)
        assert any("widened" in d.note for d in relaxed.details)

    def test_well_conditioned_needs_no_widening(self):
        r = check_det(A0, B0, (0.25, 0.5, 0.75))
        assert_holds(r)
        assert not any(d.note for d in r.details)


def test_preimage_skips():
    with pytest.raises(Skipped):
        wasserstein_preimage(np.eye(2), 0.01 * np.eye(2), 0.5)


def test_chain_skips_endpoints():
    with pytest.raises(Skipped):
        check_chain(A0, B0, 0.0)


@settings(max_examples=25)
@given(spd_pair(kappa=1e2), interior_t)
def test_near_main_property(pair, t):
    A, B = pair
    assert_holds(check_near_main(A, B, t))


@settings(max_examples=25)
@given(spd_pair(kappa=1e2), interior_t)
def test_section4_property(pair, t):
    A, B = pair
    assert_holds(check_section4(A, B, t=t))


class TestSuites:
    def test_registry(self):
        assert list(SUITES)[:3] == ["mean-axioms", "chain", "near-main"]

    def test_config_validation(self):
        with pytest.raises(InvalidInput):
            SuiteConfig(trials=-1)
        with pytest.raises(InvalidInput):
            SuiteConfig(n=1)

    def test_unknown(self):
        with pytest.raises(InvalidInput):
            run_suite("no-such-suite")

    @pytest.mark.parametrize("name", list(SUITES))
    def test_each_suite_small(self, name):
        reports = run_suite(name, SuiteConfig(seed=5, trials=6))
        s = summarize(name, reports)
        assert s["fails"] == 0 and s["skipped"] == 0, [r.to_line() for r in reports if r.verdict is not HOLDS]

    def test_deterministic(self):
        cfg = SuiteConfig(seed=3, trials=4)
        a = [r.to_line() for r in iter_suite("all", cfg)]
        b = [r.to_line() for r in iter_suite("all", cfg)]
        assert a == b

    def test_single_shot(self):
        assert len(run_suite("golden", SuiteConfig(trials=50))) == 1

    def test_fixed_dimension(self):
        reports = run_suite("chain", SuiteConfig(trials=3, n=4))
        assert all(r.verdict is HOLDS for r in reports)
