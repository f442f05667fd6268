import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spdmeans.gen import (
    GenSpec,
    commuting_pair,
    commuting_pair_from,
    haar_orthogonal,
    loewner_ordered_pair,
    loewner_pair_from,
    near_ordered_pair,
    near_pair_from,
    random_spd,
    rng_for,
)
from spdmeans.linalg import InvalidInput, eigvals
from spdmeans.orders import loewner_cmp, near_cmp

from conftest import dims, seeds


def test_kappa_one_is_identity():
    np.testing.assert_array_equal(random_spd(GenSpec(2, 1.0, 99)), np.eye(2))


def test_deterministic():
    spec = GenSpec(3, 100.0, 7)
    np.testing.assert_array_equal(random_spd(spec), random_spd(spec))


def test_seed_changes_output():
    assert not np.array_equal(random_spd(GenSpec(3, 100.0, 7)), random_spd(GenSpec(3, 100.0, 8)))


def test_pinned_stream():
    # Philox streams are stable across numpy versions, so exact values can be pinned
    assert rng_for(0).integers(0, 1000, 4).tolist() == [135, 14, 937, 257]
    assert random_spd(GenSpec(2, 100.0, 7)).tolist() == [
        [0.8617691036154622, 0.025884479607416855],
        [0.025884479607416855, 0.7161557192640636],
    ]
    assert rng_for(1, 2).integers(2**62) != rng_for(2, 1).integers(2**62)


@pytest.mark.parametrize("kwargs", [{"n": 1}, {"n": 17}, {"kappa": 0.5}, {"seed": -1}, {"structure": "banded"}])
def test_spec_validation(kwargs):
    with pytest.raises(InvalidInput):
        GenSpec(**kwargs)


@given(seeds, dims, st.floats(1.0, 1e6))
def test_condition_bound(seed, n, kappa):
    w = eigvals(random_spd(GenSpec(n, kappa, seed)))
    assert w[-1] > 0
    assert w[0] / w[-1] <= kappa * (1 + 1e-9)


@given(seeds, dims)
def test_haar_orthogonal(seed, n):
    Q = haar_orthogonal(n, rng_for(seed))
    np.testing.assert_allclose(Q.T @ Q, np.eye(n), atol=1e-13)


class TestNearPair:
    def test_identity_factor(self):
        A = np.diag([4.0, 1.0])
        _, B = near_pair_from(A, np.eye(2))
        np.testing.assert_array_equal(B, A)
        assert near_cmp(A, B).margin == pytest.approx(0.0, abs=1e-14)

    def test_scalar_factor(self):
        A, B = near_pair_from(np.diag([4.0, 1.0]), 2 * np.eye(2))
        np.testing.assert_array_equal(B, np.diag([16.0, 4.0]))
        assert near_cmp(A, B).margin == pytest.approx(1.0, rel=1e-14)

    @given(seeds, dims, st.sampled_from(["generic", "commuting", "diagonal"]))
    def test_gap(self, seed, n, structure):
        A, B = near_ordered_pair(GenSpec(n, 1e3, seed, structure), gap=0.1)
        assert near_cmp(A, B).margin >= 0.1 - 1e-9

    def test_rejects_negative_gap(self):
        with pytest.raises(InvalidInput):
            near_ordered_pair(GenSpec(), gap=-0.1)


class TestLoewnerPair:
    def test_zero(self):
        A = np.diag([4.0, 1.0])
        _, B = loewner_pair_from(A, np.zeros((2, 2)))
        np.testing.assert_array_equal(B, A)

    def test_identity_shift(self):
        A, B = loewner_pair_from(np.diag([4.0, 1.0]), np.eye(2))
        assert loewner_cmp(A, B).margin == pytest.approx(1.0)

    @given(seeds, dims)
    def test_gap(self, seed, n):
        A, B = loewner_ordered_pair(GenSpec(n, 1e3, seed), gap=0.5)
        assert loewner_cmp(A, B).margin >= 0.5 - 1e-9


class TestCommutingPair:
    def test_diag_instance(self):
        A, B = commuting_pair_from(np.eye(2), [4.0, 1.0], [1.0, 4.0])
        np.testing.assert_array_equal(A, np.diag([4.0, 1.0]))
        np.testing.assert_array_equal(B, np.diag([1.0, 4.0]))

    def test_diagonal_structure(self):
        A, B = commuting_pair(GenSpec(4, 1e2, 3, "diagonal"))
        np.testing.assert_array_equal(A @ B, B @ A)
        np.testing.assert_array_equal(A, np.diag(np.diag(A)))

    @given(seeds, dims)
    def test_commutator(self, seed, n):
        A, B = commuting_pair(GenSpec(n, 1e2, seed, "commuting"))
        assert np.linalg.norm(A @ B - B @ A) <= 1e-10 * np.linalg.norm(A) * np.linalg.norm(B)
