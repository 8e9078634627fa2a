"""
Varreduras de aceitação sobre as entradas aleatórias com semente.

Rodar só estas: pytest -m acceptance
"""

import numpy as np
import pytest

from src.decompositions import (
    bloch_messiah,
    iwasawa,
    pre_iwasawa,
    symplectic_eigenvalues,
    takagi,
    williamson,
)
from src.ensembles.random_ensembles import (
    random_pd_sample,
    random_symmetric_complex,
    random_symplectic,
    random_unitary,
)
from src.linalg.kernels import polar, psd_sqrt, schur_antisymmetric, unitary_sqrt
from src.symplectic.core import (
    is_nilpotent_form,
    orthogonality_residual,
    partition,
    symplectic_residual,
)

pytestmark = pytest.mark.acceptance


def _takagi_ok(m):
    result = takagi(m)
    n = m.shape[0]
    scale = max(np.linalg.norm(m), 1.0)
    assert np.linalg.norm(result.reconstruct() - m) <= 1e-10 * scale
    assert np.linalg.norm(result.w @ result.w.conj().T - np.eye(n)) <= 1e-10
    np.testing.assert_allclose(result.lambdas, np.linalg.svd(m, compute_uv=False), rtol=0,
                               atol=1e-10 * scale)


def _symplectic_sweep(count):
    for seed in range(count):
        modes = seed % 10 + 1
        max_squeeze = float(seed % 3)
        yield seed, random_symplectic(modes, max_squeeze=max_squeeze, seed=seed).m


def test_takagi_sweep():
    for seed in range(500):
        _takagi_ok(random_symmetric_complex(seed % 20 + 1, seed=seed))

    rng = np.random.default_rng(0)
    for seed in range(50):
        modes = seed % 8 + 2
        distinct = rng.uniform(0.5, 3.0, size=2)
        profile = np.where(np.arange(modes) < modes // 2, distinct[0], distinct[1])
        _takagi_ok(random_symmetric_complex(modes, degeneracy_profile=profile, seed=1000 + seed))

    for seed in range(20):
        modes = seed % 6 + 2
        profile = np.concatenate([rng.uniform(0.5, 2.0, size=modes - 1 - seed % (modes - 1)),
                                  np.zeros(1 + seed % (modes - 1))])
        _takagi_ok(random_symmetric_complex(modes, degeneracy_profile=profile, seed=2000 + seed))


@pytest.mark.parametrize("x", [0.0, 0.7, 3.0])
@pytest.mark.parametrize("modes", [2, 5])
def test_takagi_multiple_of_identity(x, modes):
    _takagi_ok(x * np.eye(modes, dtype=complex))


def test_bloch_messiah_sweep():
    for _, s in _symplectic_sweep(300):
        result = bloch_messiah(s)
        gamma_max = result.gammas[0]

        for factor in (result.o.m, result.q.m):
            assert orthogonality_residual(factor) <= 1e-9
            assert symplectic_residual(factor) <= 1e-9
        assert result.gammas.min() >= 1 - 1e-10
        assert np.linalg.norm(result.reconstruct() - s) <= 1e-9 * np.linalg.norm(s) * max(1.0, gamma_max)

        spectrum = np.sort(np.concatenate([result.gammas, 1 / result.gammas]))[::-1]
        np.testing.assert_allclose(spectrum, np.linalg.svd(s, compute_uv=False), rtol=0, atol=1e-8)


def test_iwasawa_sweep():
    for _, s in _symplectic_sweep(300):
        ell = s.shape[0] // 2
        scale = np.linalg.norm(s)

        pre = pre_iwasawa(s)
        blocks = partition(s)
        a0, a0_inv = pre.a0, pre.a0_inv
        x, y = partition(pre.f.m).a, partition(pre.f.m).b
        bottom_left = pre.shear @ a0 @ x - a0_inv @ y
        bottom_right = pre.shear @ a0 @ y + a0_inv @ x
        assert np.linalg.norm(bottom_left - blocks.c) <= 1e-9 * scale * max(1.0, np.linalg.norm(a0, 2))
        assert np.linalg.norm(bottom_right - blocks.d) <= 1e-9 * scale * max(1.0, np.linalg.norm(a0, 2))

        result = iwasawa(s)
        upper = result.n[:ell, :ell].T
        assert np.max(np.abs(np.diag(upper) - 1.0)) <= 1e-12
        assert np.max(np.abs(np.tril(upper, -1)), initial=0.0) <= 1e-12
        assert is_nilpotent_form(result.n)[0]
        for factor in result.factors().values():
            assert symplectic_residual(factor) <= 1e-9 * max(1.0, np.linalg.norm(factor) ** 2)

        kappa = result.d.max() / result.d.min()
        assert np.linalg.norm(result.reconstruct() - s) <= 1e-9 * scale * max(1.0, kappa)

        again = iwasawa(s)
        assert np.array_equal(again.n, result.n)
        assert np.array_equal(again.d, result.d)
        assert np.array_equal(again.k.m, result.k.m)


def test_williamson_sweep():
    rng = np.random.default_rng(5)
    for seed in range(300):
        modes = seed % 8 + 1
        if seed < 50:
            deltas = np.full(modes, rng.uniform(1.0, 5.0))
        else:
            deltas = rng.uniform(1.0, 5.0, size=modes)
        sample = random_pd_sample(modes, deltas, max_squeeze=float(seed % 2), seed=seed)
        sigma = sample.sigma
        result = williamson(sigma)

        assert symplectic_residual(result.s.m) <= 1e-9 * max(1.0, np.linalg.norm(result.s.m) ** 2)
        assert np.linalg.norm(result.reconstruct() - sigma) <= 1e-9 * np.linalg.norm(sigma)
        np.testing.assert_allclose(result.deltas, sample.deltas, rtol=0, atol=1e-8)
        np.testing.assert_allclose(result.deltas, symplectic_eigenvalues(sigma), rtol=0, atol=1e-9)


def test_symplectic_eigenvalue_invariance():
    rng = np.random.default_rng(6)
    for seed in range(100):
        modes = seed % 5 + 1
        sigma = random_pd_sample(modes, rng.uniform(1.0, 5.0, size=modes), max_squeeze=0.5,
                                 seed=seed).sigma
        s = random_symplectic(modes, max_squeeze=0.5, seed=10_000 + seed).m
        np.testing.assert_allclose(symplectic_eigenvalues(s @ sigma @ s.T), symplectic_eigenvalues(sigma),
                                   rtol=0, atol=1e-8)


def test_kernel_sweep():
    rng = np.random.default_rng(7)
    for seed in range(200):
        n = seed % 8 + 1
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        result = polar(a)
        assert np.linalg.norm(result.reconstruct() - a) <= 1e-10 * max(1.0, np.linalg.norm(a))

        u = random_unitary(n, seed=seed)
        normal = (u * (rng.standard_normal(n) + 1j * rng.standard_normal(n))) @ u.conj().T
        normal_polar = polar(normal)
        assert np.linalg.norm(normal_polar.p @ normal_polar.w - normal_polar.w @ normal_polar.p) <= 1e-9

        b = rng.standard_normal((n, n))
        psd = b @ b.T
        root = psd_sqrt(psd)
        assert np.linalg.norm(root @ root - psd) <= 1e-9 * max(1.0, np.linalg.norm(psd))

        v = unitary_sqrt(u)
        assert np.linalg.norm(v @ v - u) <= 1e-10

        g = rng.standard_normal((2 * n, 2 * n))
        schur = schur_antisymmetric(g - g.T)
        rotated = schur.o.T @ (g - g.T) @ schur.o
        for k, phi in enumerate(schur.phis):
            assert phi >= 0
            assert abs(rotated[2 * k, 2 * k + 1] - phi) <= 1e-10 * max(1.0, np.linalg.norm(g))


def test_takagi_real_valued_sweep():
    for seed in range(200):
        rng = np.random.default_rng(seed)
        modes = seed % 6 + 2
        o, _ = np.linalg.qr(rng.standard_normal((modes, modes)))
        _takagi_ok(-(o * rng.uniform(0.5, 3.0, size=modes)) @ o.T)

        g = rng.standard_normal((modes, modes))
        _takagi_ok(g + g.T)


def test_bloch_messiah_real_orthogonal_sweep():
    for seed in range(200):
        rng = np.random.default_rng(seed)
        modes = seed % 5 + 1
        o, _ = np.linalg.qr(rng.standard_normal((modes, modes)))
        rot = np.block([[o, np.zeros((modes, modes))], [np.zeros((modes, modes)), o]])
        z = rng.uniform(0.0, 2.0, size=modes)
        s = (rot * np.exp(np.concatenate([-z, z]))) @ rot.T
        result = bloch_messiah(s)

        np.testing.assert_allclose(result.gammas, np.sort(np.exp(z))[::-1], rtol=1e-9)
        assert np.linalg.norm(result.reconstruct() - s) <= 1e-9 * np.linalg.norm(s) * result.gammas[0]
