import numpy as np
import pytest
from hypothesis import given

from spdmeans.linalg import InvalidInput, Tolerance
from spdmeans.means import log_euclidean, natural, sharp, wasserstein
from spdmeans.orders import (
    OrderRelationKind,
    classify,
    eig_entrywise_cmp,
    log_majorize_cmp,
    loewner_cmp,
    near_cmp,
    weak_log_majorize_cmp,
)
from spdmeans.verdict import Verdict
from spdmeans.verify import fixtures as fx

from conftest import interior_t, spd, spd_pair

NEAR_A, NEAR_B, NEAR_T = fx.NEAR_NOT_LOEWNER_A, fx.NEAR_NOT_LOEWNER_B, fx.NEAR_NOT_LOEWNER_T


def golden_pair():
    A, B, t = fx.NO_ENTRYWISE_A, fx.NO_ENTRYWISE_B, fx.NO_ENTRYWISE_T
    return sharp(A, B, t), wasserstein(A, B, t)


class TestLoewner:
    def test_reflexive(self):
        v = loewner_cmp(fx.NO_ENTRYWISE_A, fx.NO_ENTRYWISE_A)
        assert v.holds and v.margin == 0.0

    def test_margin(self):
        v = loewner_cmp(np.eye(2), np.diag([2.0, 3.0]))
        assert v.holds and v.margin == pytest.approx(1.0)

    def test_natural_vs_wasserstein_fails(self):
        v = loewner_cmp(natural(NEAR_A, NEAR_B, NEAR_T), wasserstein(NEAR_A, NEAR_B, NEAR_T))
        assert v.fails and v.margin == pytest.approx(-0.21004249396788484, rel=1e-10)

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidInput):
            loewner_cmp(np.eye(2), np.eye(3))

    def test_band(self):
        eps = 1e-10
        v = loewner_cmp(np.eye(2), np.diag([1.0 - eps, 1.0]))
        assert v.verdict is Verdict.INDETERMINATE
        assert loewner_cmp(np.eye(2), np.diag([1.0 - 1e-6, 1.0])).fails


class TestNear:
    def test_reflexive(self):
        v = near_cmp(NEAR_A, NEAR_A)
        assert v.holds and v.margin == pytest.approx(0.0, abs=1e-14)

    def test_scalar(self):
        v = near_cmp(np.eye(2), 4 * np.eye(2))
        assert v.holds and v.margin == pytest.approx(1.0, rel=1e-14)

    def test_natural_below_wasserstein(self):
        v = near_cmp(natural(NEAR_A, NEAR_B, NEAR_T), wasserstein(NEAR_A, NEAR_B, NEAR_T))
        # 50-digit reference for lambda_min(N^-1 # W) - 1
        assert v.holds and v.margin == pytest.approx(6.61044954008e-05, rel=1e-6)

    def test_nontransitive_triple(self):
        A, B, C = fx.NONTRANSITIVE_A, fx.NONTRANSITIVE_B, fx.NONTRANSITIVE_C
        assert near_cmp(A, B).holds and near_cmp(B, C).holds and near_cmp(A, C).fails

    @given(spd_pair())
    def test_loewner_implies_near(self, pair):
        A, B = pair
        if loewner_cmp(A, B).holds:
            assert not near_cmp(A, B).fails


class TestEigEntrywise:
    def test_reflexive(self):
        assert eig_entrywise_cmp(NEAR_B, NEAR_B).holds

    def test_golden_fails_at_second(self):
        v = eig_entrywise_cmp(*golden_pair())
        assert v.fails and v.witness == 2
        assert v.margin == pytest.approx(6.2481407217689675 - 6.5676795297697575, rel=1e-10)

    def test_diag_witness(self):
        # descending spectra (5, 1) vs (4, 2): the first entry breaks the order
        v = eig_entrywise_cmp(np.diag([1.0, 5.0]), np.diag([2.0, 4.0]))
        assert v.fails and v.witness == 1 and v.margin == pytest.approx(-1.0)


class TestLogMajorization:
    def test_reflexive(self):
        assert weak_log_majorize_cmp(NEAR_B, NEAR_B).holds
        assert log_majorize_cmp(NEAR_B, NEAR_B).holds

    def test_golden_weak(self):
        S, W = golden_pair()
        assert weak_log_majorize_cmp(S, W).holds
        assert np.prod(np.linalg.eigvalsh(S)) < np.prod(np.linalg.eigvalsh(W))
        assert log_majorize_cmp(S, W).fails

    @given(spd_pair(kappa=1e2), interior_t)
    def test_sharp_below_log_euclidean(self, pair, t):
        A, B = pair
        assert log_majorize_cmp(sharp(A, B, t), log_euclidean(A, B, t)).holds

    def test_one_by_one(self):
        assert log_majorize_cmp(np.array([[2.0]]), np.array([[2.0]])).holds


class TestClassify:
    def test_loewner(self):
        A = fx.NO_ENTRYWISE_A
        c = classify(A, A + np.eye(2))
        assert c.relation is OrderRelationKind.LOEWNER and not c.indeterminate

    def test_reflexive(self):
        c = classify(NEAR_B, NEAR_B)
        assert c.relation is OrderRelationKind.LOEWNER
        assert c.verdicts[OrderRelationKind.LOEWNER].margin == 0.0

    def test_near_not_loewner(self):
        c = classify(natural(NEAR_A, NEAR_B, NEAR_T), wasserstein(NEAR_A, NEAR_B, NEAR_T))
        assert c.relation is OrderRelationKind.NEAR

    def test_golden_weak_log(self):
        assert classify(*golden_pair()).relation is OrderRelationKind.WEAK_LOG_MAJORIZATION

    def test_below_eig_entrywise(self):
        c = classify(np.diag([1.0, 5.0]), np.diag([2.0, 4.0]))
        assert c.relation in (OrderRelationKind.WEAK_LOG_MAJORIZATION, OrderRelationKind.NO_RELATION)

    def test_no_relation(self):
        assert classify(2 * np.eye(2), np.eye(2)).relation is OrderRelationKind.NO_RELATION

    def test_log_majorization(self):
        # equal determinants, weak log-majorized but not entrywise
        c = classify(np.diag([2.0, 2.0]), np.diag([4.0, 1.0]))
        assert c.relation is OrderRelationKind.LOG_MAJORIZATION

    def test_indeterminate_flag(self):
        c = classify(np.eye(2), np.diag([1.0 - 1e-10, 1.0]))
        assert c.indeterminate

    def test_tolerance_widens_band(self):
        A, B = np.eye(2), np.diag([1.0 - 1e-6, 1.0])
        assert loewner_cmp(A, B).fails
        assert loewner_cmp(A, B, Tolerance(abs=1e-5)).verdict is Verdict.INDETERMINATE

    @given(spd_pair())
    def test_strongest_holding(self, pair):
        A, B = pair
        c = classify(A, B)
        order = [
            OrderRelationKind.LOEWNER,
            OrderRelationKind.NEAR,
            OrderRelationKind.EIG_ENTRYWISE,
            OrderRelationKind.WEAK_LOG_MAJORIZATION,
        ]
        if c.relation in order:
            assert c.verdicts[c.relation].holds
            assert not any(c.verdicts[k].holds for k in order[: order.index(c.relation)])

    @given(spd())
    def test_self_is_loewner(self, A):
        assert classify(A, A).relation is OrderRelationKind.LOEWNER
