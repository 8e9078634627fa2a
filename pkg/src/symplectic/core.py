# src/symplectic/core.py
"""
Modelo de dados do grupo simplético real Sp(2ℓ, ℝ), convenção xxpp.

Contém a forma simplética Ω, predicados de validação, particionamento em
blocos, a mudança de base complexa R, a permutação xxpp↔xpxp (Π₂) e as
conversões entre matrizes ortogonais-simpléticas C(ℓ) e unitárias ℓ×ℓ.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg

from src.core.exceptions import (
    DimensionError,
    StructureError,
    SymplecticError,
    UnitarityError,
)
from src.core.tolerance import Tolerance, resolve
from src.linalg.checks import (
    ensure_even,
    ensure_modes,
    ensure_square,
    frobenius,
    identity_residual,
)
from src.linalg.kernels import polar

logger = logging.getLogger(__name__)


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.flags.writeable = False
    return a


# ---------------------------------------------------------------------------
# Forma simplética e construções básicas
# ---------------------------------------------------------------------------

def symplectic_form(modes: int) -> np.ndarray:
    """Ω = [[0, 1ₗ], [-1ₗ, 0]] de tamanho 2ℓ×2ℓ."""
    ell = ensure_modes(modes)
    eye = np.eye(ell)
    zero = np.zeros((ell, ell))
    return np.block([[zero, eye], [-eye, zero]])


def direct_sum(*blocks) -> np.ndarray:
    """Soma direta ⊕ (bloco-diagonal)."""
    return scipy.linalg.block_diag(*[np.atleast_2d(b) for b in blocks])


def _modes_of(m: np.ndarray) -> int:
    return m.shape[0] // 2


def symplectic_residual(m: np.ndarray) -> float:
    """‖m·Ω·mᵀ - Ω‖_F."""
    omega = symplectic_form(_modes_of(m))
    return frobenius(m @ omega @ m.T - omega)


def is_symplectic(m, tol: Optional[Tolerance] = None) -> tuple[bool, float]:
    """
    Predicado simplético relativo: ‖mΩmᵀ - Ω‖_F ≤ atol + rtol·max(1, ‖m‖_F²).

    Returns:
        (passou, resíduo). Tamanho ímpar → (False, inf).
    """
    tol = resolve(tol)
    m = ensure_square(m, "m")
    if m.shape[0] % 2 or np.iscomplexobj(m):
        return False, float("inf")
    residual = symplectic_residual(m)
    return residual <= tol.bound(max(1.0, frobenius(m) ** 2)), residual


def orthogonality_residual(m: np.ndarray) -> float:
    return identity_residual(m)


def is_orthosymplectic(m, tol: Optional[Tolerance] = None) -> tuple[bool, float]:
    """Pertinência a C(ℓ): ortogonal e simplética; resíduo = máximo dos dois."""
    tol = resolve(tol)
    ok_symp, symp_res = is_symplectic(m, tol)
    if not np.isfinite(symp_res):
        return False, symp_res
    orth_res = orthogonality_residual(np.asarray(m, dtype=np.float64))
    residual = max(symp_res, orth_res)
    return ok_symp and orth_res <= tol.bound(np.sqrt(np.asarray(m).shape[0])), residual


# ---------------------------------------------------------------------------
# Blocos
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockPartition:
    """Quadrantes ℓ×ℓ [[a, b], [c, d]] de uma matriz 2ℓ×2ℓ."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray

    def assemble(self) -> np.ndarray:
        return np.block([[self.a, self.b], [self.c, self.d]])


def partition(m) -> BlockPartition:
    m = ensure_even(m, "m")
    ell = _modes_of(m)
    return BlockPartition(
        a=m[:ell, :ell].copy(),
        b=m[:ell, ell:].copy(),
        c=m[ell:, :ell].copy(),
        d=m[ell:, ell:].copy(),
    )


BLOCK_IDENTITIES = (
    "AtC_symmetric",
    "BtD_symmetric",
    "AtD_minus_CtB_identity",
    "ABt_symmetric",
    "CDt_symmetric",
    "ADt_minus_BCt_identity",
)


@dataclass(frozen=True)
class BlockConditionReport:
    """Resíduos (Frobenius) das seis identidades de bloco de Sp(2ℓ, ℝ)."""

    residuals: dict

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())

    def passed(self, bound: float) -> bool:
        return self.max_residual <= bound


def check_block_conditions(s, tol: Optional[Tolerance] = None) -> BlockConditionReport:
    """
    Avalia AᵀC e BᵀD simétricas, AᵀD - CᵀB = 1, ABᵀ e CDᵀ simétricas, ADᵀ - BCᵀ = 1.

    Raises:
        DimensionError: tamanho ímpar
    """
    blocks = partition(s)
    a, b, c, d = blocks.a, blocks.b, blocks.c, blocks.d
    eye = np.eye(a.shape[0])

    def asym(x):
        return frobenius(x - x.T)

    residuals = {
        "AtC_symmetric": asym(a.T @ c),
        "BtD_symmetric": asym(b.T @ d),
        "AtD_minus_CtB_identity": frobenius(a.T @ d - c.T @ b - eye),
        "ABt_symmetric": asym(a @ b.T),
        "CDt_symmetric": asym(c @ d.T),
        "ADt_minus_BCt_identity": frobenius(a @ d.T - b @ c.T - eye),
    }
    return BlockConditionReport(residuals=residuals)


# ---------------------------------------------------------------------------
# Tipos validados
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SymplecticMatrix:
    """
    Matriz real 2ℓ×2ℓ com m·Ω·mᵀ = Ω (e det = +1) dentro da tolerância.

    Use SymplecticMatrix.from_array para construção validada e
    SymplecticMatrix.unchecked nos caminhos internos.
    """

    m: np.ndarray
    modes: int

    def __post_init__(self):
        object.__setattr__(self, "m", _readonly(np.asarray(self.m, dtype=np.float64)))

    @classmethod
    def from_array(cls, m, tol: Optional[Tolerance] = None) -> "SymplecticMatrix":
        tol = resolve(tol)
        m = ensure_even(m, "s")
        if np.iscomplexobj(m):
            raise SymplecticError("Matriz simplética deve ser real")
        ok, residual = is_symplectic(m, tol)
        if not ok:
            raise SymplecticError(
                f"Matriz não é simplética: ‖SΩSᵀ - Ω‖_F = {residual:.3e}",
                residual=residual,
            )
        det = float(np.linalg.det(m))
        det_bound = tol.rtol * max(1.0, float(np.linalg.cond(m)))
        if abs(det - 1.0) > det_bound:
            raise StructureError(
                f"det(S) = {det:.6g} ≠ +1",
                invariant="determinant",
                residual=abs(det - 1.0),
            )
        return cls(m=m, modes=_modes_of(m))

    @classmethod
    def unchecked(cls, m) -> "SymplecticMatrix":
        m = np.asarray(m, dtype=np.float64)
        return cls(m=m, modes=_modes_of(m))

    def transpose(self) -> "SymplecticMatrix":
        return SymplecticMatrix.unchecked(self.m.T)

    def __matmul__(self, other):
        if isinstance(other, SymplecticMatrix):
            return SymplecticMatrix.unchecked(self.m @ other.m)
        return self.m @ np.asarray(other)

    def __array__(self, dtype=None, copy=None):
        return np.array(self.m, dtype=dtype)


@dataclass(frozen=True)
class OrthoSymplectic:
    """
    Elemento de C(ℓ) = Sp(2ℓ, ℝ) ∩ O(2ℓ) e sua unitária associada.

    m = [[Re u, -Im u], [Im u, Re u]].
    """

    m: np.ndarray
    u: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "m", _readonly(np.asarray(self.m, dtype=np.float64)))
        object.__setattr__(self, "u", _readonly(np.asarray(self.u, dtype=np.complex128)))

    @property
    def modes(self) -> int:
        return self.u.shape[0]

    @classmethod
    def from_matrix(cls, m, tol: Optional[Tolerance] = None) -> "OrthoSymplectic":
        return cls(m=np.asarray(m, dtype=np.float64), u=to_unitary(m, tol))

    @classmethod
    def unchecked(cls, m) -> "OrthoSymplectic":
        m = np.asarray(m, dtype=np.float64)
        ell = _modes_of(m)
        return cls(m=m, u=m[:ell, :ell] + 1j * m[ell:, :ell])

    def __array__(self, dtype=None, copy=None):
        return np.array(self.m, dtype=dtype)


def as_symplectic(s, tol: Optional[Tolerance] = None, validate: bool = True) -> SymplecticMatrix:
    """Normaliza ndarray/SymplecticMatrix, validando quando pedido."""
    if isinstance(s, SymplecticMatrix):
        return SymplecticMatrix.from_array(s.m, tol) if validate else s
    if validate:
        return SymplecticMatrix.from_array(s, tol)
    return SymplecticMatrix.unchecked(ensure_even(s, "s"))


# ---------------------------------------------------------------------------
# Operações do grupo
# ---------------------------------------------------------------------------

def symplectic_inverse(s, tol: Optional[Tolerance] = None) -> SymplecticMatrix:
    """S⁻¹ = Ω·Sᵀ·Ωᵀ, sem inversão geral."""
    s = as_symplectic(s, tol)
    omega = symplectic_form(s.modes)
    return SymplecticMatrix.unchecked(omega @ s.m.T @ omega.T)


def symplectic_polar(s, tol: Optional[Tolerance] = None,
                     validate: bool = True) -> tuple[SymplecticMatrix, OrthoSymplectic]:
    """
    Polar S = P·Y de uma matriz simplética: P simétrica PD e Y ∈ C(ℓ) são
    ambos simpléticos.
    """
    s = as_symplectic(s, tol, validate=validate)
    result = polar(s.m)
    return SymplecticMatrix.unchecked(result.p), OrthoSymplectic.unchecked(result.w)


# ---------------------------------------------------------------------------
# Forma complexa
# ---------------------------------------------------------------------------

def complex_change_of_basis(modes: int) -> np.ndarray:
    """R = (1/√2)·[[1, 1], [-i, i]] em blocos ℓ×ℓ (unitária)."""
    ell = ensure_modes(modes)
    eye = np.eye(ell)
    return np.block([[eye, eye], [-1j * eye, 1j * eye]]) / np.sqrt(2.0)


def complex_form_metric(modes: int) -> np.ndarray:
    """Z = 1ₗ ⊕ (-1ₗ)."""
    ell = ensure_modes(modes)
    return np.diag(np.concatenate([np.ones(ell), -np.ones(ell)])).astype(np.complex128)


def to_complex_form(s, tol: Optional[Tolerance] = None) -> np.ndarray:
    """𝒮 = R†·S·R, com estrutura [[H, K], [K*, H*]] e 𝒮·Z·𝒮† = Z."""
    s = as_symplectic(s, tol)
    r = complex_change_of_basis(s.modes)
    return r.conj().T @ s.m @ r


def from_complex_form(sc) -> np.ndarray:
    """Inversa de to_complex_form: S = R·𝒮·R† (parte real)."""
    sc = ensure_even(sc, "sc")
    r = complex_change_of_basis(_modes_of(sc))
    return np.real(r @ sc @ r.conj().T)


def complex_form_residuals(sc) -> dict:
    """Resíduos do padrão [[H, K], [K*, H*]] e de 𝒮·Z·𝒮† = Z."""
    sc = ensure_even(sc, "sc").astype(np.complex128)
    ell = _modes_of(sc)
    h, k = sc[:ell, :ell], sc[:ell, ell:]
    k_low, h_low = sc[ell:, :ell], sc[ell:, ell:]
    z = complex_form_metric(ell)
    return {
        "block_pattern": max(frobenius(k_low - k.conj()), frobenius(h_low - h.conj())),
        "metric": frobenius(sc @ z @ sc.conj().T - z),
    }


# ---------------------------------------------------------------------------
# C(ℓ) ↔ U(ℓ)
# ---------------------------------------------------------------------------

def from_unitary(u, tol: Optional[Tolerance] = None) -> OrthoSymplectic:
    """
    Mergulho de U(ℓ) em C(ℓ): [[Re u, -Im u], [Im u, Re u]].

    Raises:
        UnitarityError: u não unitária
    """
    tol = resolve(tol)
    u = ensure_square(u, "u").astype(np.complex128)
    residual = identity_residual(u)
    if residual > tol.bound(np.sqrt(u.shape[0])):
        raise UnitarityError(
            f"Matriz não é unitária: ‖u·u† - 1‖_F = {residual:.3e}",
            residual=residual,
        )
    re, im = u.real, u.imag
    m = np.block([[re, -im], [im, re]])
    return OrthoSymplectic(m=m, u=u)


def to_unitary(m, tol: Optional[Tolerance] = None) -> np.ndarray:
    """
    Inversa de from_unitary: u = A + i·C para m = [[A, -C], [C, A]].

    Raises:
        StructureError: indica a condição violada (orthogonality, symplectic,
            block_form)
    """
    tol = resolve(tol)
    if isinstance(m, OrthoSymplectic):
        m = m.m
    m = ensure_even(m, "m")
    if np.iscomplexobj(m):
        raise StructureError("Elemento de C(ℓ) deve ser real", invariant="real")
    ell = _modes_of(m)
    size_bound = tol.bound(np.sqrt(2 * ell))

    orth = orthogonality_residual(m)
    if orth > size_bound:
        raise StructureError(
            f"Matriz não é ortogonal: ‖m·mᵀ - 1‖_F = {orth:.3e}",
            invariant="orthogonality",
            residual=orth,
        )
    symp = symplectic_residual(m)
    if symp > size_bound:
        raise StructureError(
            f"Matriz não é simplética: ‖mΩmᵀ - Ω‖_F = {symp:.3e}",
            invariant="symplectic",
            residual=symp,
        )
    blocks = partition(m)
    form = max(frobenius(blocks.a - blocks.d), frobenius(blocks.b + blocks.c))
    if form > size_bound:
        raise StructureError(
            f"Forma de blocos [[A, -C], [C, A]] violada: resíduo {form:.3e}",
            invariant="block_form",
            residual=form,
        )
    return blocks.a + 1j * blocks.c


# ---------------------------------------------------------------------------
# Permutação xpxp ↔ xxpp e subgrupo nilpotente
# ---------------------------------------------------------------------------

def xxpp_to_xpxp_permutation(modes: int) -> np.ndarray:
    """
    Permutação Π₂ tal que Π₂ᵀ·[⊕ᵢ blocos 2×2]·Π₂ tem a forma de blocos fora
    da diagonal; Π₂ᵀ leva (x₁, p₁, …, x_ℓ, p_ℓ) em (x₁, …, x_ℓ, p₁, …, p_ℓ).
    """
    ell = ensure_modes(modes)
    perm = np.zeros((2 * ell, 2 * ell))
    k = np.arange(ell)
    perm[2 * k, k] = 1.0
    perm[2 * k + 1, ell + k] = 1.0
    return perm


def is_nilpotent_form(n, tol: Optional[Tolerance] = None) -> tuple[bool, float]:
    """
    Pertinência a N(ℓ): [[A, 0], [C, (A⁻¹)ᵀ]] com A triangular inferior
    unitária e AᵀC simétrica.
    """
    tol = resolve(tol)
    blocks = partition(n)
    a = blocks.a
    ell = a.shape[0]
    residuals = [
        frobenius(blocks.b),
        float(np.max(np.abs(np.diag(a) - 1.0))),
        float(np.max(np.abs(np.triu(a, k=1)))) if ell > 1 else 0.0,
        frobenius(a.T @ blocks.c - (a.T @ blocks.c).T),
        frobenius(a.T @ blocks.d - np.eye(ell)),
    ]
    residual = max(residuals)
    scale = max(1.0, frobenius(np.asarray(n, dtype=np.float64)) ** 2)
    return residual <= tol.bound(scale), residual


__all__ = [
    "BLOCK_IDENTITIES",
    "BlockConditionReport",
    "BlockPartition",
    "OrthoSymplectic",
    "SymplecticMatrix",
    "as_symplectic",
    "check_block_conditions",
    "complex_change_of_basis",
    "complex_form_metric",
    "complex_form_residuals",
    "direct_sum",
    "from_complex_form",
    "from_unitary",
    "is_nilpotent_form",
    "is_orthosymplectic",
    "is_symplectic",
    "orthogonality_residual",
    "partition",
    "symplectic_form",
    "symplectic_inverse",
    "symplectic_polar",
    "symplectic_residual",
    "to_complex_form",
    "to_unitary",
]
