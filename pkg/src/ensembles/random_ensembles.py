# src/ensembles/random_ensembles.py
"""
Geradores aleatórios com semente explícita para entradas de teste.

Cada chamada cria seu próprio ``numpy.random.Generator`` a partir da semente,
então a mesma (semente, parâmetros) reproduz bit a bit a mesma saída na
mesma plataforma e não há estado global compartilhado.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import scipy.linalg

from src.core.exceptions import DimensionError, InvalidInputError
from src.linalg.checks import ensure_modes
from src.symplectic.core import SymplecticMatrix, from_unitary

logger = logging.getLogger(__name__)

DEFAULT_MAX_SQUEEZE = 2.0
_SEED_LIMIT = 2 ** 64


def _rng(seed: int) -> np.random.Generator:
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise InvalidInputError(f"Semente deve ser inteira, recebido {seed!r}", invariant="seed")
    if not 0 <= int(seed) < _SEED_LIMIT:
        raise InvalidInputError(f"Semente fora de [0, 2⁶⁴): {seed}", invariant="seed")
    return np.random.default_rng(int(seed))


def _check_squeeze(max_squeeze: float) -> float:
    r = float(max_squeeze)
    if not np.isfinite(r) or r < 0:
        raise InvalidInputError(f"max_squeeze deve ser finito e ≥ 0, recebido {max_squeeze}",
                                invariant="max_squeeze")
    return r


def _haar_unitary(ell: int, rng: np.random.Generator) -> np.ndarray:
    # Ginibre + QR com fase fixada na diagonal de R
    z = (rng.standard_normal((ell, ell)) + 1j * rng.standard_normal((ell, ell))) / np.sqrt(2.0)
    q, r = scipy.linalg.qr(z)
    d = np.diag(r)
    phases = np.where(np.abs(d) > 0, d / np.where(np.abs(d) > 0, np.abs(d), 1.0), 1.0)
    return q * phases


@dataclass(frozen=True)
class SymplecticSample:
    """Matriz simplética aleatória e os parâmetros zᵢ usados na construção."""

    matrix: SymplecticMatrix
    squeezing: np.ndarray


@dataclass(frozen=True)
class CovarianceSample:
    """Σ = S·(Δ ⊕ Δ)·Sᵀ junto com o δ de referência e o S usado."""

    sigma: np.ndarray
    deltas: np.ndarray
    symplectic: SymplecticMatrix


def random_unitary(modes: int, seed: int) -> np.ndarray:
    """Unitária ℓ×ℓ distribuída segundo Haar (QR de matriz gaussiana complexa)."""
    ell = ensure_modes(modes)
    return _haar_unitary(ell, _rng(seed))


def random_symplectic_sample(modes: int, max_squeeze: float = DEFAULT_MAX_SQUEEZE,
                             seed: int = 0) -> SymplecticSample:
    """
    S = O(u₁)·(diag(e^{z}) ⊕ diag(e^{-z}))·O(u₂), u₁, u₂ Haar e zᵢ ~ U[0, r].

    Returns:
        SymplecticSample com a matriz e os zᵢ sorteados (na ordem de sorteio).
    """
    ell = ensure_modes(modes)
    r = _check_squeeze(max_squeeze)
    rng = _rng(seed)

    u1 = _haar_unitary(ell, rng)
    z = rng.uniform(0.0, r, size=ell) if r > 0 else np.zeros(ell)
    u2 = _haar_unitary(ell, rng)

    o1 = from_unitary(u1).m
    o2 = from_unitary(u2).m
    s = (o1 * np.concatenate([np.exp(z), np.exp(-z)])) @ o2
    logger.debug(f"random_symplectic: ℓ={ell}, r={r}, z_max={z.max():.4f}")
    return SymplecticSample(matrix=SymplecticMatrix.unchecked(s), squeezing=z)


def random_symplectic(modes: int, max_squeeze: float = DEFAULT_MAX_SQUEEZE,
                      seed: int = 0) -> SymplecticMatrix:
    """Matriz simplética aleatória; ver random_symplectic_sample."""
    return random_symplectic_sample(modes, max_squeeze, seed).matrix


def random_symmetric_complex(modes: int, degeneracy_profile: Optional[Sequence[float]] = None,
                             seed: int = 0) -> np.ndarray:
    """
    Matriz complexa simétrica (M = Mᵀ) aleatória.

    Sem perfil: (G + Gᵀ)/2 com G gaussiana complexa. Com perfil: W·diag(perfil)·Wᵀ
    com W Haar, o que fixa os valores singulares (repetidos ou nulos).

    Raises:
        DimensionError: perfil com tamanho diferente de ℓ
        InvalidInputError: perfil com valores negativos ou não finitos
    """
    ell = ensure_modes(modes)
    rng = _rng(seed)
    if degeneracy_profile is None:
        g = rng.standard_normal((ell, ell)) + 1j * rng.standard_normal((ell, ell))
        return 0.5 * (g + g.T)

    profile = np.asarray(degeneracy_profile, dtype=np.float64).ravel()
    if profile.size != ell:
        raise DimensionError(f"Perfil de degenerescência com {profile.size} valores para ℓ={ell}")
    if not np.all(np.isfinite(profile)) or np.any(profile < 0):
        raise InvalidInputError("Perfil de degenerescência deve ter valores finitos ≥ 0",
                                invariant="profile")
    w = _haar_unitary(ell, rng)
    m = (w * profile) @ w.T
    return 0.5 * (m + m.T)


def random_pd_sample(modes: int, deltas: Sequence[float], max_squeeze: float = DEFAULT_MAX_SQUEEZE,
                     seed: int = 0) -> CovarianceSample:
    """
    Σ = S·(Δ ⊕ Δ)·Sᵀ com S = random_symplectic(ℓ, max_squeeze, seed).

    Raises:
        DimensionError: len(deltas) ≠ ℓ
        InvalidInputError: algum δᵢ ≤ 0
    """
    ell = ensure_modes(modes)
    deltas = np.asarray(deltas, dtype=np.float64).ravel()
    if deltas.size != ell:
        raise DimensionError(f"{deltas.size} autovalores simpléticos para ℓ={ell}")
    if not np.all(np.isfinite(deltas)) or np.any(deltas <= 0):
        raise InvalidInputError(f"Autovalores simpléticos devem ser > 0, recebido {deltas}",
                                invariant="positivity")

    s = random_symplectic(ell, max_squeeze, seed)
    sigma = (s.m * np.concatenate([deltas, deltas])) @ s.m.T
    sigma = 0.5 * (sigma + sigma.T)
    return CovarianceSample(sigma=sigma, deltas=np.sort(deltas)[::-1].copy(), symplectic=s)


def random_pd_with_symplectic_spectrum(modes: int, deltas: Sequence[float],
                                       max_squeeze: float = DEFAULT_MAX_SQUEEZE,
                                       seed: int = 0) -> np.ndarray:
    """Matriz simétrica PD com espectro simplético δ prescrito."""
    return random_pd_sample(modes, deltas, max_squeeze, seed).sigma


__all__ = [
    "DEFAULT_MAX_SQUEEZE",
    "CovarianceSample",
    "SymplecticSample",
    "random_unitary",
    "random_symplectic",
    "random_symplectic_sample",
    "random_symmetric_complex",
    "random_pd_sample",
    "random_pd_with_symplectic_spectrum",
]
