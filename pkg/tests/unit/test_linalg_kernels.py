"""Testes dos kernels densos: polar, raízes PSD/PD, raiz unitária, Schur antissimétrica."""

import numpy as np
import pytest

from src.core.exceptions import (
    DimensionError,
    InvalidInputError,
    NotAntisymmetricError,
    NotPositiveDefiniteError,
    NotPositiveSemidefiniteError,
    SymmetryError,
    UnitarityError,
)
from src.ensembles.random_ensembles import random_unitary
from src.linalg.kernels import (
    pd_inv_sqrt,
    pd_sqrt_pair,
    polar,
    psd_sqrt,
    quasi_diagonal,
    schur_antisymmetric,
    unitary_sqrt,
)


def _antisymmetric(rng, n):
    g = rng.standard_normal((n, n))
    return g - g.T


class TestPolar:

    def test_real_reconstruction_and_factors(self, rng):
        a = rng.standard_normal((5, 5))
        result = polar(a)

        np.testing.assert_allclose(result.reconstruct(), a, atol=1e-12)
        np.testing.assert_allclose(result.p, result.p.T, atol=1e-14)
        np.testing.assert_allclose(result.w @ result.w.T, np.eye(5), atol=1e-12)
        assert np.linalg.eigvalsh(result.p).min() > -1e-12
        assert not np.iscomplexobj(result.p)

    def test_complex_input_stays_complex(self, rng):
        a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        result = polar(a)

        assert np.iscomplexobj(result.w)
        np.testing.assert_allclose(result.reconstruct(), a, atol=1e-12)
        np.testing.assert_allclose(result.w @ result.w.conj().T, np.eye(4), atol=1e-12)

    def test_singular_input_keeps_product(self):
        a = np.array([[1.0, 0.0], [0.0, 0.0]])
        result = polar(a)

        np.testing.assert_allclose(result.reconstruct(), a, atol=1e-14)
        np.testing.assert_allclose(result.w @ result.w.T, np.eye(2), atol=1e-14)

    def test_factors_commute_for_normal_matrix(self):
        u = random_unitary(4, seed=3)
        a = (u * np.array([2.0, 1.0 + 1j, -0.5j, 3.0])) @ u.conj().T
        result = polar(a)

        commutator = result.p @ result.w - result.w @ result.p
        assert np.linalg.norm(commutator) < 1e-12

    def test_results_are_read_only(self, rng):
        result = polar(rng.standard_normal((3, 3)))
        with pytest.raises(ValueError):
            result.p[0, 0] = 1.0

    def test_rejects_non_square_and_nan(self):
        with pytest.raises(DimensionError):
            polar(np.ones((2, 3)))
        with pytest.raises(InvalidInputError):
            polar(np.array([[1.0, np.nan], [0.0, 1.0]]))


class TestSquareRoots:

    def test_psd_sqrt_squares_back(self, rng):
        b = rng.standard_normal((4, 4))
        a = b @ b.T
        root = psd_sqrt(a)

        np.testing.assert_allclose(root @ root, a, atol=1e-10)
        np.testing.assert_allclose(root, root.T, atol=1e-14)

    def test_psd_sqrt_rank_deficient(self, rng):
        b = rng.standard_normal((4, 2))
        a = b @ b.T
        root = psd_sqrt(a)
        np.testing.assert_allclose(root @ root, a, atol=1e-10)

    def test_psd_sqrt_composes(self, rng):
        b = rng.standard_normal((5, 5))
        a = b @ b.T
        fourth_root = psd_sqrt(psd_sqrt(a))
        power = np.linalg.matrix_power(fourth_root, 4)
        assert np.linalg.norm(power - a) <= 1e-8 * np.linalg.norm(a)

    def test_psd_sqrt_diagonal(self):
        np.testing.assert_allclose(psd_sqrt(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]), atol=1e-14)

    def test_psd_sqrt_rejects_negative_eigenvalue(self):
        with pytest.raises(NotPositiveSemidefiniteError) as ctx:
            psd_sqrt(np.diag([1.0, -1.0]))
        assert ctx.value.min_eigenvalue == pytest.approx(-1.0)

    def test_psd_sqrt_rejects_asymmetric(self):
        with pytest.raises(SymmetryError):
            psd_sqrt(np.array([[1.0, 2.0], [0.0, 1.0]]))

    def test_pd_inv_sqrt(self, rng):
        b = rng.standard_normal((4, 4))
        a = b @ b.T + 4 * np.eye(4)
        inv_root = pd_inv_sqrt(a)
        np.testing.assert_allclose(inv_root @ a @ inv_root, np.eye(4), atol=1e-12)

    def test_pd_inv_sqrt_rejects_singular(self):
        with pytest.raises(NotPositiveDefiniteError):
            pd_inv_sqrt(np.diag([1.0, 0.0]))

    def test_pd_sqrt_pair_is_consistent(self, rng):
        b = rng.standard_normal((3, 3))
        a = b @ b.T + np.eye(3)
        root, inv_root = pd_sqrt_pair(a)

        np.testing.assert_allclose(root @ inv_root, np.eye(3), atol=1e-12)
        np.testing.assert_allclose(root @ root, a, atol=1e-12)


class TestUnitarySqrt:

    def test_squares_back_and_is_unitary(self):
        u = random_unitary(5, seed=11)
        v = unitary_sqrt(u)

        np.testing.assert_allclose(v @ v, u, atol=1e-12)
        np.testing.assert_allclose(v @ v.conj().T, np.eye(5), atol=1e-12)

    def test_minus_one_maps_to_plus_i(self):
        np.testing.assert_allclose(unitary_sqrt(np.array([[-1.0]])), np.array([[1j]]), atol=1e-15)

    def test_principal_branch_on_diagonal(self):
        u = np.diag(np.exp(1j * np.array([0.4, -2.0, 3.0])))
        expected = np.diag(np.exp(0.5j * np.array([0.4, -2.0, 3.0])))
        np.testing.assert_allclose(unitary_sqrt(u), expected, atol=1e-12)

    def test_commutes_with_block_degenerate_commutant(self, rng):
        w = random_unitary(3, seed=5)
        u = (w * np.exp(1j * np.array([0.7, 0.7, -1.1]))) @ w.conj().T
        block = np.zeros((3, 3), dtype=complex)
        block[:2, :2] = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        block[2, 2] = 0.3
        x = w @ block @ w.conj().T
        assert np.linalg.norm(u @ x - x @ u) < 1e-12

        v = unitary_sqrt(u)
        assert np.linalg.norm(v @ x - x @ v) < 1e-11

    def test_cluster_near_minus_one_takes_one_branch(self, rng):
        o, _ = np.linalg.qr(rng.standard_normal((4, 4)))
        eps = 1e-13
        block = np.array([[np.cos(np.pi - eps), -np.sin(np.pi - eps)],
                          [np.sin(np.pi - eps), np.cos(np.pi - eps)]])
        u = o @ np.kron(np.eye(2), block) @ o.T
        v = unitary_sqrt(u)

        np.testing.assert_allclose(v, 1j * np.eye(4), atol=1e-10)

    def test_rejects_non_unitary(self):
        with pytest.raises(UnitarityError):
            unitary_sqrt(np.diag([1.0, 2.0]))


class TestSchurAntisymmetric:

    def test_quasi_diagonalizes_with_positive_upper_entries(self, rng):
        a = _antisymmetric(rng, 6)
        result = schur_antisymmetric(a)
        o = result.o

        np.testing.assert_allclose(o @ o.T, np.eye(6), atol=1e-12)
        np.testing.assert_allclose(result.reconstruct(), a, atol=1e-12)
        rotated = o.T @ a @ o
        for k, phi in enumerate(result.phis):
            assert rotated[2 * k, 2 * k + 1] == pytest.approx(phi, abs=1e-12)
            assert phi >= 0
        assert np.all(np.diff(result.phis) <= 1e-12)

    def test_quasi_diagonal_layout(self):
        q = quasi_diagonal([2.0, 1.0])
        expected = np.array([
            [0.0, 2.0, 0.0, 0.0],
            [-2.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, -1.0, 0.0],
        ])
        np.testing.assert_array_equal(q, expected)

    def test_negative_block_is_flipped(self):
        a = np.array([[0.0, -3.0], [3.0, 0.0]])
        result = schur_antisymmetric(a)

        assert result.phis[0] == pytest.approx(3.0)
        np.testing.assert_allclose(result.reconstruct(), a, atol=1e-14)

    def test_null_directions_pair_up(self):
        a = np.zeros((4, 4))
        a[0, 1], a[1, 0] = 2.0, -2.0
        result = schur_antisymmetric(a)

        np.testing.assert_allclose(result.phis, [2.0, 0.0], atol=1e-14)
        np.testing.assert_allclose(result.reconstruct(), a, atol=1e-14)

    def test_zero_matrix(self):
        result = schur_antisymmetric(np.zeros((4, 4)))
        np.testing.assert_array_equal(result.phis, [0.0, 0.0])
        np.testing.assert_allclose(result.o @ result.o.T, np.eye(4), atol=1e-14)

    def test_rejects_odd_size(self):
        with pytest.raises(DimensionError):
            schur_antisymmetric(np.zeros((3, 3)))

    def test_rejects_non_antisymmetric(self):
        with pytest.raises(NotAntisymmetricError):
            schur_antisymmetric(np.eye(2))
