# src/decompositions/williamson.py
"""
Forma normal de Williamson de matrizes reais simétricas PD: Σ = S·(Δ ⊕ Δ)·Sᵀ.

Segue a rota de Schur sobre Ψ = [√Σ]⁻¹·Ω·[√Σ]⁻¹. A autodecomposição de Ψ⁻²
não é usada: com δ degenerados aos pares ela não fornece a ortogonal correta.
"""

import logging
from typing import Optional

import numpy as np
import scipy.linalg

from src.core.exceptions import InvalidInputError
from src.core.tolerance import Tolerance, effective_tolerance, resolve, resolve_validate
from src.decompositions.results import WilliamsonResult
from src.decompositions.validation import require, require_member, require_reconstruction
from src.linalg.checks import ensure_even, frobenius
from src.linalg.kernels import pd_sqrt_pair, schur_antisymmetric
from src.symplectic.core import (
    SymplecticMatrix,
    is_symplectic,
    symplectic_form,
    xxpp_to_xpxp_permutation,
)

logger = logging.getLogger(__name__)


def _covariance(sigma) -> np.ndarray:
    sigma = ensure_even(sigma, "sigma")
    if np.iscomplexobj(sigma):
        raise InvalidInputError("Σ deve ser real", invariant="real")
    return sigma.astype(np.float64)


def williamson(sigma, tol: Optional[Tolerance] = None, validate: Optional[bool] = None) -> WilliamsonResult:
    """
    Williamson: Σ = S·(Δ ⊕ Δ)·Sᵀ com S simplética e δ não crescente.

    Passos: Ψ = [√Σ]⁻¹·Ω·[√Σ]⁻¹; Ψ = o·(⊕[[0, φ], [-φ, 0]])·oᵀ (Schur real,
    Π₁ já absorvido); O = o·Π₂; S = √Σ·O·√(Φ ⊕ Φ); Δ = Φ⁻¹.

    Args:
        sigma: Matriz real simétrica PD de tamanho 2ℓ.
        tol: Tolerâncias (None → settings).
        validate: Valida a saída (None → settings.VALIDATE_OUTPUTS).

    Raises:
        DimensionError: tamanho ímpar ou não quadrada
        SymmetryError: Σ não simétrica
        NotPositiveDefiniteError: autovalor mínimo ≤ rtol·‖Σ‖
    """
    tol = resolve(tol)
    strict = resolve_validate(validate)
    sigma = _covariance(sigma)
    ell = sigma.shape[0] // 2

    sqrt_sigma, inv_sqrt = pd_sqrt_pair(sigma, tol)
    psi = inv_sqrt @ symplectic_form(ell) @ inv_sqrt
    psi = 0.5 * (psi - psi.T)

    schur = schur_antisymmetric(psi, tol)
    o = schur.o @ xxpp_to_xpxp_permutation(ell)
    phis = schur.phis

    # φ não crescente ⇒ δ não decrescente; inverte pares (i, ℓ+i)
    deltas = 1.0 / phis
    order = np.argsort(-deltas, kind="stable")
    columns = np.concatenate([order, ell + order])
    roots = np.sqrt(np.concatenate([phis, phis]))
    s = ((sqrt_sigma @ o) * roots)[:, columns]
    deltas = deltas[order]

    result = WilliamsonResult(s=SymplecticMatrix.unchecked(s), deltas=deltas)
    logger.debug(f"williamson: ℓ={ell}, δ ∈ [{deltas[-1]:.6g}, {deltas[0]:.6g}]")

    if strict:
        ok, residual = is_symplectic(s, tol)
        require_member("Williamson S simplética", ok, residual, invariant="symplectic")
        require("Williamson δ > 0", float(-deltas.min()), 0.0, invariant="positivity")
        bound = effective_tolerance(tol, frobenius(sigma), float(np.linalg.norm(s, 2)))
        require_reconstruction("Williamson", sigma, result.reconstruct(), bound)
    return result


def symplectic_eigenvalues(sigma, tol: Optional[Tolerance] = None) -> np.ndarray:
    """
    Autovalores simpléticos δ de Σ: módulos dos autovalores de iΩΣ, um por par ±δ.

    Usa a matriz hermitiana √Σ·(iΩ)·√Σ, semelhante a iΩΣ, cujo espectro real
    é {±δᵢ}.

    Returns:
        ℓ valores positivos em ordem não crescente.
    """
    tol = resolve(tol)
    sigma = _covariance(sigma)
    ell = sigma.shape[0] // 2
    sqrt_sigma, _ = pd_sqrt_pair(sigma, tol)
    h = sqrt_sigma @ (1j * symplectic_form(ell)) @ sqrt_sigma
    h = 0.5 * (h + h.conj().T)
    evals = scipy.linalg.eigh(h, eigvals_only=True)
    return evals[::-1][:ell].copy()


__all__ = ["williamson", "symplectic_eigenvalues"]
