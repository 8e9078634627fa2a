# src/decompositions/takagi.py
"""
Decomposição de Takagi/Autonne de matrizes simétricas (M = Mᵀ, não hermitianas).

Caminho geral pela SVD: M = U·Λ·V†, W = U·√((UᵀV)*). A raiz principal comuta
com Λ mesmo com valores singulares repetidos ou nulos, então não há
agrupamento de degenerescências. Entradas reais vão pela autodecomposição
M = O·diag(r)·Oᵀ com W = O·diag(√sign rᵢ).
"""

import logging
from typing import Optional

import numpy as np
import scipy.linalg

from src.core.exceptions import InvalidInputError
from src.core.tolerance import Tolerance, resolve, resolve_validate
from src.decompositions.results import TakagiResult
from src.decompositions.validation import require, require_reconstruction
from src.linalg.checks import ensure_square, ensure_symmetric, frobenius, identity_residual
from src.linalg.kernels import unitary_sqrt

logger = logging.getLogger(__name__)


def _validate_output(m: np.ndarray, result: TakagiResult, tol: Tolerance) -> None:
    n = m.shape[0]
    require("Takagi unitariedade", identity_residual(result.w), tol.bound(np.sqrt(n)),
            invariant="unitarity")
    require_reconstruction("Takagi", m, result.reconstruct(), tol.bound(max(frobenius(m), 1.0)))


def _takagi_eigh(m: np.ndarray) -> TakagiResult:
    r, o = scipy.linalg.eigh(m)
    phases = np.where(r >= 0, 1.0 + 0j, 1j)
    order = np.argsort(-np.abs(r), kind="stable")

    w = (o * phases)[:, order]
    if np.all(r >= 0):
        w = w.real
    return TakagiResult(w=w, lambdas=np.abs(r)[order])


def takagi(m, tol: Optional[Tolerance] = None, validate: Optional[bool] = None) -> TakagiResult:
    """
    Takagi/Autonne: M = W·diag(λ)·Wᵀ.

    Args:
        m: Matriz quadrada complexa (ou real) simétrica.
        tol: Tolerâncias (None → settings).
        validate: Valida entrada/saída (None → settings.VALIDATE_OUTPUTS).

    Returns:
        TakagiResult com λ não crescente (ordem da SVD).

    Raises:
        DimensionError: não quadrada
        SymmetryError: ‖M - Mᵀ‖ acima da tolerância (transposta, não adjunta)
    """
    tol = resolve(tol)
    strict = resolve_validate(validate)
    m = ensure_square(m, "M").astype(np.complex128)
    if strict:
        m = ensure_symmetric(m, tol, "M", hermitian=False)
    else:
        m = 0.5 * (m + m.T)

    # Im M desprezável: UᵀV real ≈ -1 nas direções negativas cai sobre o corte de ramo
    if frobenius(m.imag) <= 0.5 * tol.bound(max(frobenius(m), 1.0)):
        logger.debug("takagi: entrada real, usando a autodecomposição")
        result = _takagi_eigh(m.real)
    else:
        u, lambdas, vh = scipy.linalg.svd(m, lapack_driver="gesvd")
        v = vh.conj().T
        phase = (u.T @ v).conj()
        result = TakagiResult(w=u @ unitary_sqrt(phase, tol), lambdas=lambdas)

    lambdas = result.lambdas
    logger.debug(f"takagi: ℓ={m.shape[0]}, λ_max={lambdas[0]:.6g}, λ_min={lambdas[-1]:.6g}")
    if strict:
        _validate_output(m, result, tol)
    return result


def takagi_real(m, tol: Optional[Tolerance] = None, validate: Optional[bool] = None) -> TakagiResult:
    """
    Takagi/Autonne de matriz real simétrica pela autodecomposição M = O·diag(r)·Oᵀ.

    W = O·diag(√sign rᵢ) (sign 0 = +1), λ = |r| em ordem não crescente. Para
    entrada PSD, W é real e coincide com a autodecomposição.

    Raises:
        InvalidInputError: M complexa
        SymmetryError: M não simétrica
    """
    tol = resolve(tol)
    strict = resolve_validate(validate)
    m = ensure_square(m, "M")
    if np.iscomplexobj(m):
        raise InvalidInputError("takagi_real exige matriz real; use takagi para matrizes complexas",
                                invariant="real")
    m = ensure_symmetric(m, tol, "M") if strict else 0.5 * (m + m.T)

    result = _takagi_eigh(m)
    if strict:
        _validate_output(m, result, tol)
    return result


__all__ = ["takagi", "takagi_real"]
