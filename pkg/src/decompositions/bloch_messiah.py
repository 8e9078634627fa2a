# src/decompositions/bloch_messiah.py
"""
Decomposição de Bloch-Messiah/Euler: S = O·(Γ ⊕ Γ⁻¹)·Q, com O, Q ∈ C(ℓ).

O fator O vem da Takagi/Autonne de M = ½(A - C + i[B + Bᵀ]) extraída do
fator polar P, nunca da autodecomposição de P: quando Λ ∝ 1 ela perde a
informação de fase.
"""

import logging
from typing import Optional

import numpy as np

from src.core.tolerance import Tolerance, effective_tolerance, resolve, resolve_validate
from src.decompositions.results import BlochMessiahResult
from src.decompositions.takagi import takagi
from src.decompositions.validation import require, require_member, require_reconstruction
from src.linalg.checks import frobenius
from src.symplectic.core import (
    OrthoSymplectic,
    as_symplectic,
    from_unitary,
    is_orthosymplectic,
    symplectic_polar,
)

logger = logging.getLogger(__name__)


def bloch_messiah(s, tol: Optional[Tolerance] = None, validate: Optional[bool] = None) -> BlochMessiahResult:
    """
    Bloch-Messiah/Euler de uma matriz simplética real.

    Passos: polar S = P·Y; particiona P = [[A, B], [Bᵀ, C]]; Takagi de
    M = ½(A - C + i[B + Bᵀ]) = W·Λ·Wᵀ; O = from_unitary(W);
    Γ = Λ + √(1 + Λ²); Q = Oᵀ·Y.

    Args:
        s: Matriz simplética (ndarray ou SymplecticMatrix).
        tol: Tolerâncias (None → settings).
        validate: Valida entrada/saída (None → settings.VALIDATE_OUTPUTS).

    Returns:
        BlochMessiahResult com γ não crescente.

    Raises:
        SymplecticError: entrada não simplética
        ValidationFailure: resíduos de saída acima da tolerância efetiva (modo estrito)
    """
    tol = resolve(tol)
    strict = resolve_validate(validate)
    s = as_symplectic(s, tol, validate=strict)
    ell = s.modes

    p, y = symplectic_polar(s, tol, validate=False)
    a = p.m[:ell, :ell]
    b = p.m[:ell, ell:]
    c = p.m[ell:, ell:]
    m = 0.5 * (a - c + 1j * (b + b.T))

    tk = takagi(m, tol, validate=False)
    o = from_unitary(tk.w, tol)
    gammas = tk.lambdas + np.sqrt(1.0 + tk.lambdas ** 2)
    q = OrthoSymplectic.unchecked(o.m.T @ y.m)

    result = BlochMessiahResult(o=o, gammas=gammas, q=q)
    logger.debug(f"bloch_messiah: ℓ={ell}, γ_max={gammas[0]:.6g}")

    if strict:
        for name, factor in (("O", o.m), ("Q", q.m)):
            ok, residual = is_orthosymplectic(factor, tol)
            require_member(f"Bloch-Messiah {name} ∈ C(ℓ)", ok, residual, invariant="orthosymplectic")
        require("Bloch-Messiah γ ≥ 1", float(max(0.0, 1.0 - gammas.min())), tol.rtol,
                invariant="gamma")
        bound = effective_tolerance(tol, frobenius(s.m), gammas[0])
        require_reconstruction("Bloch-Messiah", s.m, result.reconstruct(), bound)
    return result


__all__ = ["bloch_messiah"]
