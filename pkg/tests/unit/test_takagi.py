"""Testes da decomposição de Takagi/Autonne."""

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.exceptions import DimensionError, InvalidInputError, SymmetryError
from src.decompositions import takagi, takagi_real
from src.ensembles.random_ensembles import random_symmetric_complex


def assert_takagi_contract(m, result, rtol=1e-10):
    n = m.shape[0]
    scale = max(np.linalg.norm(m), 1.0)
    assert np.linalg.norm(result.reconstruct() - m) <= rtol * scale
    assert np.linalg.norm(result.w @ result.w.conj().T - np.eye(n)) <= 1e-10
    assert np.all(result.lambdas >= 0)
    assert np.all(np.diff(result.lambdas) <= 1e-12)


class TestTakagi:

    def test_swap_matrix(self):
        m = np.array([[0.0, 1.0], [1.0, 0.0]])
        result = takagi(m)

        np.testing.assert_allclose(result.lambdas, [1.0, 1.0], atol=1e-12)
        assert_takagi_contract(m, result)

    def test_zero_matrix(self):
        m = np.zeros((3, 3))
        result = takagi(m)

        np.testing.assert_array_equal(result.lambdas, [0.0, 0.0, 0.0])
        assert_takagi_contract(m, result)

    def test_singular_values_match_svd(self):
        m = random_symmetric_complex(6, seed=31)
        result = takagi(m)

        np.testing.assert_allclose(result.lambdas, np.linalg.svd(m, compute_uv=False),
                                   atol=1e-10 * np.linalg.norm(m))
        assert_takagi_contract(m, result)

    @pytest.mark.parametrize("x", [0.0, 0.7, 3.0])
    @pytest.mark.parametrize("modes", [2, 5])
    def test_multiple_of_identity(self, x, modes):
        m = x * np.eye(modes, dtype=complex)
        result = takagi(m)

        np.testing.assert_allclose(result.lambdas, np.full(modes, x), atol=1e-12)
        assert_takagi_contract(m, result)

    @pytest.mark.parametrize("profile", [(1.0, 1.0, 1.0), (2.0, 1.0, 0.0), (3.0, 3.0, 0.0, 0.0)])
    def test_prescribed_degeneracies(self, profile):
        m = random_symmetric_complex(len(profile), degeneracy_profile=profile, seed=7)
        result = takagi(m)

        np.testing.assert_allclose(result.lambdas, sorted(profile, reverse=True), atol=1e-10)
        assert_takagi_contract(m, result)

    def test_factors_mapping(self):
        result = takagi(np.diag([2.0, 1.0]))
        factors = result.factors()

        assert set(factors) == {"W", "Lambda"}
        np.testing.assert_allclose(factors["Lambda"], np.diag([2.0, 1.0]), atol=1e-14)

    def test_rejects_non_symmetric(self):
        with pytest.raises(SymmetryError) as ctx:
            takagi(np.array([[1.0, 2.0], [3.0, 4.0]]))
        assert ctx.value.invariant == "symmetry"

    def test_hermitian_is_not_enough(self):
        with pytest.raises(SymmetryError):
            takagi(np.array([[1.0, 1j], [-1j, 1.0]]))

    def test_rejects_non_square(self):
        with pytest.raises(DimensionError):
            takagi(np.ones((2, 3)))

    def test_no_validate_symmetrizes(self):
        m = np.array([[1.0, 2.0], [2.0 + 1e-3, 1.0]])
        result = takagi(m, validate=False)
        sym = 0.5 * (m + m.T)
        assert np.linalg.norm(result.reconstruct() - sym) < 1e-10

    @settings(max_examples=30, deadline=None, derandomize=True)
    @given(seed=st.integers(min_value=0, max_value=2**32), modes=st.integers(min_value=1, max_value=12))
    def test_random_reconstruction(self, seed, modes):
        m = random_symmetric_complex(modes, seed=seed)
        assert_takagi_contract(m, takagi(m))


class TestTakagiReal:

    def test_psd_input_gives_real_unitary(self):
        m = np.array([[2.0, 1.0], [1.0, 2.0]])
        result = takagi_real(m)

        assert not np.iscomplexobj(result.w)
        np.testing.assert_allclose(result.lambdas, [3.0, 1.0], atol=1e-12)
        assert_takagi_contract(m, result)

    def test_negative_eigenvalues_get_imaginary_phase(self):
        m = np.diag([-2.0, 1.0])
        result = takagi_real(m)

        assert np.iscomplexobj(result.w)
        np.testing.assert_allclose(result.lambdas, [2.0, 1.0], atol=1e-12)
        assert_takagi_contract(m, result)

    def test_rejects_complex(self):
        with pytest.raises(InvalidInputError) as ctx:
            takagi_real(np.eye(2) * 1j)
        assert ctx.value.invariant == "real"


def _real_orthogonal(seed, n):
    q, _ = scipy.linalg.qr(np.random.default_rng(seed).standard_normal((n, n)))
    return q


class TestTakagiRealValuedInput:

    @pytest.mark.parametrize("seed", range(40))
    def test_negative_definite(self, seed):
        o = _real_orthogonal(seed, 3)
        m = -(o * np.array([3.0, 2.0, 1.0])) @ o.T
        result = takagi(m)

        np.testing.assert_allclose(result.lambdas, [3.0, 2.0, 1.0], atol=1e-12)
        assert_takagi_contract(m, result)

    @pytest.mark.parametrize("seed", range(40))
    def test_indefinite(self, seed):
        g = np.random.default_rng(seed).standard_normal((5, 5))
        m = g + g.T
        result = takagi(m)

        np.testing.assert_allclose(result.lambdas, np.linalg.svd(m, compute_uv=False), atol=1e-10)
        assert_takagi_contract(m, result)

    def test_complex_dtype_with_zero_imaginary_part(self):
        o = _real_orthogonal(3, 4)
        m = (-(o * np.array([2.0, 2.0, 1.0, 0.5])) @ o.T).astype(complex)
        assert_takagi_contract(m, takagi(m))
