# src/decompositions/iwasawa.py
"""
Decomposições pré-Iwasawa (S = E·D·F) e Iwasawa (S = Ẽ·D̃·F̃).

A de Iwasawa refina a pré-Iwasawa pela QR de A₀ com diagonal de R positiva,
de modo que cada fator pertence a um subgrupo: nilpotente N(ℓ), diagonal
e compacto C(ℓ).
"""

import logging
from typing import Optional

import numpy as np
import scipy.linalg

from src.core.exceptions import DegeneracyError
from src.core.tolerance import Tolerance, effective_tolerance, resolve, resolve_validate
from src.decompositions.results import IwasawaResult, PreIwasawaResult
from src.decompositions.validation import require, require_member, require_reconstruction
from src.linalg.checks import frobenius
from src.linalg.kernels import pd_sqrt_pair
from src.symplectic.core import (
    OrthoSymplectic,
    as_symplectic,
    is_nilpotent_form,
    is_orthosymplectic,
    is_symplectic,
    partition,
)

logger = logging.getLogger(__name__)


def pre_iwasawa(s, tol: Optional[Tolerance] = None, validate: Optional[bool] = None) -> PreIwasawaResult:
    """
    Pré-Iwasawa (única): S = E·(A₀ ⊕ A₀⁻¹)·F.

    Com S = [[A, B], [C, D]]: A₀ = √(AAᵀ + BBᵀ), X = A₀⁻¹A, Y = A₀⁻¹B,
    C₀ = (CAᵀ + DBᵀ)A₀⁻¹, E = [[1, 0], [C₀A₀⁻¹, 1]], F = [[X, Y], [-Y, X]].

    Raises:
        SymplecticError: entrada não simplética
        ValidationFailure: resíduos de saída acima da tolerância (modo estrito)
    """
    tol = resolve(tol)
    strict = resolve_validate(validate)
    s = as_symplectic(s, tol, validate=strict)
    blocks = partition(s.m)
    a, b, c, d = blocks.a, blocks.b, blocks.c, blocks.d
    ell = s.modes

    a0, a0_inv = pd_sqrt_pair(a @ a.T + b @ b.T, tol)
    x = a0_inv @ a
    y = a0_inv @ b
    c0 = (c @ a.T + d @ b.T) @ a0_inv
    shear = c0 @ a0_inv
    shear_asym = frobenius(shear - shear.T)
    shear = 0.5 * (shear + shear.T)

    eye = np.eye(ell)
    zero = np.zeros((ell, ell))
    e = np.block([[eye, zero], [shear, eye]])
    f = OrthoSymplectic.unchecked(np.block([[x, y], [-y, x]]))

    result = PreIwasawaResult(e=e, a0=a0, f=f, a0_inv=a0_inv)
    logger.debug(f"pre_iwasawa: ℓ={ell}, assimetria de C₀A₀⁻¹ = {shear_asym:.3e}")

    if strict:
        scale = frobenius(s.m) ** 2
        require("pré-Iwasawa C₀A₀⁻¹ simétrica", shear_asym, tol.bound(scale), invariant="shear_symmetry")
        ok, residual = is_orthosymplectic(f.m, tol)
        require_member("pré-Iwasawa F ∈ C(ℓ)", ok, residual, invariant="orthosymplectic")
        bound = effective_tolerance(tol, frobenius(s.m), float(np.linalg.norm(a0, 2)))
        require_reconstruction("pré-Iwasawa", s.m, result.reconstruct(), bound)
    return result


def iwasawa(s, tol: Optional[Tolerance] = None, validate: Optional[bool] = None) -> IwasawaResult:
    """
    Iwasawa: S = Ẽ·(D_a ⊕ D_a⁻¹)·F̃ a partir da pré-Iwasawa e da QR A₀ = Q·R.

    D_a = ⊕|Rᵢᵢ|, D_s = ⊕sign(Rᵢᵢ), R̃ = (D_a·D_s)⁻¹·R (triangular superior
    unitária), Ẽ = E·(R̃ᵀ ⊕ R̃⁻¹), F̃ = (D_s·Qᵀ ⊕ D_s·Qᵀ)·F.

    Raises:
        SymplecticError: entrada não simplética
        DegeneracyError: |Rᵢᵢ| ≤ atol (A₀ é PD para entrada válida)
    """
    tol = resolve(tol)
    strict = resolve_validate(validate)
    s = as_symplectic(s, tol, validate=strict)
    pre = pre_iwasawa(s, tol, validate=False)
    ell = s.modes

    q, r = scipy.linalg.qr(pre.a0)
    r_diag = np.diag(r).copy()
    if np.min(np.abs(r_diag)) <= tol.atol:
        raise DegeneracyError(
            f"Pivô degenerado na QR de A₀: min|Rᵢᵢ| = {np.min(np.abs(r_diag)):.3e}",
            residual=float(np.min(np.abs(r_diag))),
        )
    d_a = np.abs(r_diag)
    d_s = np.sign(r_diag)

    r_unit = r / r_diag[:, None]
    r_unit[np.diag_indices(ell)] = 1.0
    r_unit = np.triu(r_unit)
    r_unit_inv = scipy.linalg.solve_triangular(r_unit, np.eye(ell), unit_diagonal=True)

    shear = pre.shear
    lower = r_unit.T
    n = np.block([
        [lower, np.zeros((ell, ell))],
        [shear @ lower, r_unit_inv],
    ])

    rot = d_s[:, None] * q.T
    k = OrthoSymplectic.unchecked(np.block([
        [rot @ pre.f.m[:ell, :ell], rot @ pre.f.m[:ell, ell:]],
        [rot @ pre.f.m[ell:, :ell], rot @ pre.f.m[ell:, ell:]],
    ]))

    result = IwasawaResult(n=n, d=d_a, k=k)
    logger.debug(f"iwasawa: ℓ={ell}, d ∈ [{d_a.min():.6g}, {d_a.max():.6g}]")

    if strict:
        ok, residual = is_nilpotent_form(n, tol)
        require_member("Iwasawa Ẽ ∈ N(ℓ)", ok, residual, invariant="nilpotent")
        ok, residual = is_symplectic(n, tol)
        require_member("Iwasawa Ẽ simplética", ok, residual, invariant="symplectic")
        ok, residual = is_orthosymplectic(k.m, tol)
        require_member("Iwasawa F̃ ∈ C(ℓ)", ok, residual, invariant="orthosymplectic")
        require("Iwasawa d > 0", float(-d_a.min()), 0.0, invariant="positivity")
        bound = effective_tolerance(tol, frobenius(s.m), float(d_a.max() / d_a.min()))
        require_reconstruction("Iwasawa", s.m, result.reconstruct(), bound)
    return result


__all__ = ["pre_iwasawa", "iwasawa"]
