import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spdmeans.linalg import (
    InvalidInput,
    NotPositiveDefinite,
    NumericalFailure,
    Tolerance,
    abs_of,
    as_spd,
    eigh,
    eigvals,
    inv,
    invsqrtm,
    is_pd,
    jacobi_eigh,
    matrix_exp,
    matrix_log,
    matrix_power,
    polar_unitary,
    rel_diff,
    sqrtm,
)
from spdmeans.verdict import Verdict

from conftest import spd

GOLDEN_A = np.array([[39.1195, 42.1116], [42.1116, 61.1568]])
# 50-digit reference
GOLDEN_A_EIG = np.array([93.667421787872813, 6.608878212127187])


class TestEigh:
    def test_identity(self):
        d = eigh(np.eye(2))
        np.testing.assert_array_equal(d.eigenvalues, [1.0, 1.0])
        np.testing.assert_array_equal(d.eigenvectors, np.eye(2))

    def test_diagonal_descending(self):
        np.testing.assert_allclose(eigh(np.diag([1.0, 4.0])).eigenvalues, [4.0, 1.0])

    @pytest.mark.parametrize("method", ["lapack", "jacobi"])
    def test_golden_matrix(self, method):
        np.testing.assert_allclose(eigh(GOLDEN_A, method=method).eigenvalues, GOLDEN_A_EIG, rtol=1e-14)

    def test_rejects_nonsymmetric(self):
        with pytest.raises(InvalidInput):
            eigh(np.array([[1.0, 2.0], [0.0, 1.0]]))

    def test_unknown_method(self):
        with pytest.raises(InvalidInput):
            eigh(np.eye(2), method="qr")

    def test_sign_convention(self):
        V = eigh(GOLDEN_A).eigenvectors
        assert np.all(V[0] > 0)

    @given(spd(kappa=1e4))
    def test_jacobi_matches_lapack(self, M):
        lap, jac = eigh(M), jacobi_eigh(M)
        scale = lap.eigenvalues[0]
        np.testing.assert_allclose(jac.eigenvalues, lap.eigenvalues, atol=1e-12 * scale)
        np.testing.assert_allclose(jac.reconstruct(), M, atol=1e-12 * scale)
        np.testing.assert_allclose(jac.eigenvectors.T @ jac.eigenvectors, np.eye(len(M)), atol=1e-12)

    @given(st.floats(-10, 10), st.floats(-10, 10), st.floats(-10, 10))
    def test_two_by_two_closed_form(self, a, b, c):
        M = np.array([[a, b], [b, c]])
        mid, rad = (a + c) / 2, np.hypot((a - c) / 2, b)
        np.testing.assert_allclose(eigvals(M), [mid + rad, mid - rad], atol=1e-12 * (1 + abs(mid) + rad))


class TestSpectralFunctions:
    def test_sqrt_diag(self):
        np.testing.assert_allclose(matrix_power(np.diag([4.0, 1.0]), 0.5), np.diag([2.0, 1.0]))

    def test_power_zero(self):
        np.testing.assert_array_equal(matrix_power(GOLDEN_A, 0), np.eye(2))

    def test_inverse_closed_form(self):
        M = np.array([[2.0, 1.0], [1.0, 2.0]])
        np.testing.assert_allclose(matrix_power(M, -1), [[2 / 3, -1 / 3], [-1 / 3, 2 / 3]], rtol=1e-14)

    def test_power_rejects_indefinite(self):
        with pytest.raises(NotPositiveDefinite):
            matrix_power(np.diag([1.0, -1.0]), 0.5)

    def test_log_exp_trivial(self):
        np.testing.assert_array_equal(matrix_log(np.eye(3)), np.zeros((3, 3)))
        np.testing.assert_array_equal(matrix_exp(np.zeros((3, 3))), np.eye(3))

    def test_log_diag(self):
        np.testing.assert_allclose(matrix_log(np.diag([np.e, np.e**2])), np.diag([1.0, 2.0]), rtol=1e-15)

    @given(spd(kappa=1e3))
    def test_exp_log_roundtrip(self, M):
        assert rel_diff(matrix_exp(matrix_log(M)), M) < 1e-12

    @given(spd(kappa=1e3))
    def test_sqrt_and_inverse(self, M):
        R = sqrtm(M)
        assert rel_diff(R @ R, M) < 1e-12
        assert rel_diff(invsqrtm(M) @ R, np.eye(len(M))) < 1e-11
        assert rel_diff(inv(M) @ M, np.eye(len(M))) < 1e-10

    @given(spd(kappa=1e2), st.floats(-2, 2), st.floats(-2, 2))
    def test_power_additive(self, M, p, q):
        assert rel_diff(matrix_power(M, p) @ matrix_power(M, q), matrix_power(M, p + q)) < 1e-10


class TestPolar:
    def test_abs_examples(self):
        np.testing.assert_allclose(abs_of(np.diag([-3.0, 2.0])), np.diag([3.0, 2.0]))
        np.testing.assert_allclose(abs_of(np.eye(2)), np.eye(2))
        np.testing.assert_allclose(abs_of(np.array([[0.0, 1.0], [0.0, 0.0]])), np.diag([0.0, 1.0]), atol=1e-15)

    def test_unitary_examples(self):
        np.testing.assert_allclose(polar_unitary(np.eye(2)), np.eye(2))
        np.testing.assert_allclose(polar_unitary(GOLDEN_A), np.eye(2), atol=1e-14)
        J = np.array([[0.0, -1.0], [1.0, 0.0]])
        np.testing.assert_allclose(polar_unitary(J), J, atol=1e-15)

    def test_unitary_singular(self):
        with pytest.raises(NumericalFailure):
            polar_unitary(np.array([[1.0, 1.0], [1.0, 1.0]]))

    @given(st.integers(0, 2**32 - 1), st.integers(2, 6))
    def test_decomposition(self, seed, n):
        X = np.random.default_rng(seed).standard_normal((n, n)) + 0.1 * np.eye(n)
        U, P = polar_unitary(X), abs_of(X)
        assert rel_diff(U @ P, X) < 1e-10
        assert rel_diff(U.T @ U, np.eye(n)) < 1e-12
        assert eigvals(P)[-1] >= -1e-12


class TestIsPd:
    def test_examples(self):
        assert is_pd(np.eye(2)).verdict is Verdict.HOLDS
        assert is_pd(np.diag([1.0, -1.0])).verdict is Verdict.FAILS
        assert is_pd(np.diag([1.0, 1e-13])).verdict is Verdict.INDETERMINATE

    def test_as_spd_floor(self):
        with pytest.raises(NotPositiveDefinite):
            as_spd(np.diag([1.0, 1e-14]))

    def test_tolerance_validation(self):
        with pytest.raises(InvalidInput):
            Tolerance(abs=-1.0)
