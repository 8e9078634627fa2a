"""Testes da forma normal de Williamson e dos autovalores simpléticos."""

import numpy as np
import pytest

from src.core.exceptions import (
    DimensionError,
    InvalidInputError,
    NotPositiveDefiniteError,
    SymmetryError,
)
from src.decompositions import symplectic_eigenvalues, williamson
from src.ensembles.random_ensembles import random_pd_sample, random_symplectic
from src.symplectic.core import is_symplectic


def assert_williamson_contract(sigma, result):
    s = result.s.m
    assert is_symplectic(s)[0]
    assert np.all(result.deltas > 0)
    assert np.all(np.diff(result.deltas) <= 1e-12)
    bound = 1e-9 * np.linalg.norm(sigma) * max(1.0, np.linalg.norm(s, 2))
    assert np.linalg.norm(result.reconstruct() - sigma) <= bound


class TestWilliamson:

    def test_multiple_of_identity(self):
        sigma = 2.0 * np.eye(2)
        result = williamson(sigma)

        np.testing.assert_allclose(result.deltas, [2.0], atol=1e-12)
        assert_williamson_contract(sigma, result)

    def test_diagonal_covariance(self):
        sigma = np.diag([4.0, 1.0])
        result = williamson(sigma)

        np.testing.assert_allclose(result.deltas, [2.0], atol=1e-12)
        assert_williamson_contract(sigma, result)

    def test_squeezed_vacuum(self):
        sigma = np.diag([3.0, 1 / 3])
        result = williamson(sigma)

        np.testing.assert_allclose(result.deltas, [1.0], atol=1e-12)
        assert_williamson_contract(sigma, result)

    @pytest.mark.parametrize("deltas", [
        (3.0, 2.0, 1.0),
        (2.0, 2.0, 1.0),
        (1.5, 1.5, 1.5),
        (5.0, 1.0, 1.0, 0.5),
    ])
    def test_recovers_prescribed_spectrum(self, deltas):
        sample = random_pd_sample(len(deltas), deltas, max_squeeze=1.0, seed=len(deltas))
        result = williamson(sample.sigma)

        np.testing.assert_allclose(result.deltas, sample.deltas, rtol=1e-8)
        assert_williamson_contract(sample.sigma, result)

    def test_t_matrix_and_factors(self):
        result = williamson(np.diag([4.0, 1.0]))
        np.testing.assert_allclose(result.t_matrix, 2.0 * np.eye(2), atol=1e-12)
        assert set(result.factors()) == {"S", "T"}

    def test_rejects_odd_size(self):
        with pytest.raises(DimensionError):
            williamson(np.eye(3))

    def test_rejects_asymmetric(self):
        with pytest.raises(SymmetryError):
            williamson(np.array([[2.0, 1.0], [0.0, 2.0]]))

    def test_rejects_indefinite(self):
        with pytest.raises(NotPositiveDefiniteError):
            williamson(np.diag([1.0, -1.0]))

    def test_rejects_singular(self):
        with pytest.raises(NotPositiveDefiniteError):
            williamson(np.diag([1.0, 0.0]))

    def test_rejects_complex(self):
        with pytest.raises(InvalidInputError):
            williamson(np.eye(2) * (1 + 1j))


class TestSymplecticEigenvalues:

    def test_multiple_of_identity(self):
        np.testing.assert_allclose(symplectic_eigenvalues(2.0 * np.eye(4)), [2.0, 2.0], atol=1e-12)

    def test_diagonal_covariance(self):
        np.testing.assert_allclose(symplectic_eigenvalues(np.diag([4.0, 1.0])), [2.0], atol=1e-12)

    def test_agrees_with_williamson(self):
        sample = random_pd_sample(3, (4.0, 2.5, 1.0), max_squeeze=1.0, seed=13)

        np.testing.assert_allclose(symplectic_eigenvalues(sample.sigma), sample.deltas, rtol=1e-9)
        np.testing.assert_allclose(williamson(sample.sigma).deltas, symplectic_eigenvalues(sample.sigma),
                                   rtol=1e-8)

    def test_invariant_under_symplectic_congruence(self):
        sigma = random_pd_sample(2, (3.0, 1.2), max_squeeze=0.5, seed=1).sigma
        s = random_symplectic(2, max_squeeze=0.5, seed=99).m
        moved = s @ sigma @ s.T

        np.testing.assert_allclose(symplectic_eigenvalues(moved), symplectic_eigenvalues(sigma), rtol=1e-9)

    def test_rejects_not_positive_definite(self):
        with pytest.raises(NotPositiveDefiniteError):
            symplectic_eigenvalues(-np.eye(2))
