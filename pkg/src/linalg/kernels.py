# src/linalg/kernels.py
"""
Kernels de álgebra linear densa sobre as primitivas SVD/eigh/Schur do SciPy.

Fornece decomposição polar, raízes quadradas PSD/PD (e inversa), raiz
principal de uma matriz unitária e a quase-diagonalização de matrizes reais
antissimétricas com a convenção de sinal (+φ acima da diagonal).
"""

import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from src.core.exceptions import (
    NotAntisymmetricError,
    NotPositiveDefiniteError,
    NotPositiveSemidefiniteError,
    UnitarityError,
)
from src.core.tolerance import Tolerance, resolve
from src.linalg.checks import (
    ensure_even,
    ensure_square,
    ensure_symmetric,
    frobenius,
    identity_residual,
)

logger = logging.getLogger(__name__)


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class PolarResult:
    """
    Decomposição polar a = p·w.

    Attributes:
        p (np.ndarray): fator PSD √(a·a†), hermitiano (simétrico se real)
        w (np.ndarray): fator unitário (ortogonal se real)
    """

    p: np.ndarray
    w: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "p", _readonly(self.p))
        object.__setattr__(self, "w", _readonly(self.w))

    def reconstruct(self) -> np.ndarray:
        return self.p @ self.w


@dataclass(frozen=True)
class SchurAntisymResult:
    """
    Forma quase-diagonal de uma matriz real antissimétrica: oᵀ·a·o = ⊕ᵢ [[0, φᵢ], [-φᵢ, 0]].

    Attributes:
        o (np.ndarray): matriz ortogonal 2ℓ×2ℓ (permutação de sinal Π₁ já absorvida)
        phis (np.ndarray): ℓ magnitudes φᵢ ≥ 0, não crescentes
    """

    o: np.ndarray
    phis: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "o", _readonly(self.o))
        object.__setattr__(self, "phis", _readonly(self.phis))

    def quasi_diagonal(self) -> np.ndarray:
        return quasi_diagonal(self.phis)

    def reconstruct(self) -> np.ndarray:
        return self.o @ self.quasi_diagonal() @ self.o.T


def quasi_diagonal(phis) -> np.ndarray:
    """Monta ⊕ᵢ [[0, φᵢ], [-φᵢ, 0]]."""
    phis = np.asarray(phis, dtype=np.float64)
    n = 2 * phis.size
    q = np.zeros((n, n))
    idx = np.arange(phis.size)
    q[2 * idx, 2 * idx + 1] = phis
    q[2 * idx + 1, 2 * idx] = -phis
    return q


def polar(a) -> PolarResult:
    """
    Decomposição polar a = P·W com P = √(a·a†) PSD e W unitário.

    Calculada pela SVD a = U·Σ·V†: P = U·Σ·U† e W = U·V†. Para a invertível
    U·V† coincide com P⁻¹·a; para a singular é o completamento que mantém
    P·W = a.

    Args:
        a: Matriz quadrada real ou complexa.

    Returns:
        PolarResult com o mesmo corpo escalar da entrada.

    Raises:
        DimensionError: entrada não quadrada
        InvalidInputError: entradas NaN/Inf
    """
    a = ensure_square(a, "a")
    u, s, vh = scipy.linalg.svd(a, lapack_driver="gesvd")

    p = (u * s) @ u.conj().T
    p = 0.5 * (p + p.conj().T)
    w = u @ vh

    if s[-1] <= np.finfo(float).eps * max(s[0], 1.0) * a.shape[0]:
        logger.debug(f"polar: entrada singular (σ_min={s[-1]:.3e}); W completado pela SVD")
    return PolarResult(p=p, w=w)


def _hermitian_eigh(a, tol: Tolerance, name: str):
    a = ensure_square(a, name)
    a = ensure_symmetric(a, tol, name)
    evals, evecs = scipy.linalg.eigh(a)
    norm = float(np.max(np.abs(evals))) if evals.size else 0.0
    return evals, evecs, norm


def psd_sqrt(a, tol: Tolerance | None = None) -> np.ndarray:
    """
    Raiz quadrada PSD única de uma matriz hermitiana/simétrica PSD.

    Autovalores em [-rtol·‖a‖, 0) são truncados em 0 (arredondamento de
    produtos como A·A†).

    Raises:
        SymmetryError: entrada não hermitiana (informa a assimetria máxima)
        NotPositiveSemidefiniteError: autovalor < -rtol·‖a‖
    """
    tol = resolve(tol)
    evals, evecs, norm = _hermitian_eigh(a, tol, "a")

    floor = -tol.rtol * norm
    if evals[0] < floor:
        raise NotPositiveSemidefiniteError(
            f"Matriz não é PSD: autovalor mínimo {evals[0]:.3e} < {floor:.3e}",
            min_eigenvalue=float(evals[0]),
            residual=float(-evals[0]),
        )
    clipped = int(np.count_nonzero(evals < 0))
    if clipped:
        logger.debug(f"psd_sqrt: {clipped} autovalor(es) negativo(s) truncado(s) em 0")

    root = (evecs * np.sqrt(np.clip(evals, 0.0, None))) @ evecs.conj().T
    return 0.5 * (root + root.conj().T)


def pd_inv_sqrt(a, tol: Tolerance | None = None) -> np.ndarray:
    """
    Inversa da raiz quadrada de uma matriz simétrica PD: B·a·B = 1.

    Raises:
        NotPositiveDefiniteError: autovalor mínimo ≤ rtol·‖a‖
    """
    tol = resolve(tol)
    evals, evecs, norm = _hermitian_eigh(a, tol, "a")

    if evals[0] <= tol.rtol * norm:
        raise NotPositiveDefiniteError(
            f"Matriz não é PD: autovalor mínimo {evals[0]:.3e} ≤ {tol.rtol * norm:.3e}",
            min_eigenvalue=float(evals[0]),
        )
    root = (evecs / np.sqrt(evals)) @ evecs.conj().T
    return 0.5 * (root + root.conj().T)


def pd_sqrt_pair(a, tol: Tolerance | None = None) -> tuple[np.ndarray, np.ndarray]:
    """(√a, [√a]⁻¹) de uma única autodecomposição; exige a PD."""
    tol = resolve(tol)
    evals, evecs, norm = _hermitian_eigh(a, tol, "a")
    if evals[0] <= tol.rtol * norm:
        raise NotPositiveDefiniteError(
            f"Matriz não é PD: autovalor mínimo {evals[0]:.3e} ≤ {tol.rtol * norm:.3e}",
            min_eigenvalue=float(evals[0]),
        )
    roots = np.sqrt(evals)
    sqrt_a = (evecs * roots) @ evecs.conj().T
    inv_sqrt_a = (evecs / roots) @ evecs.conj().T
    return 0.5 * (sqrt_a + sqrt_a.conj().T), 0.5 * (inv_sqrt_a + inv_sqrt_a.conj().T)


def unitary_sqrt(u, tol: Tolerance | None = None) -> np.ndarray:
    """
    Raiz quadrada principal de uma matriz unitária.

    u é normal, então sua forma de Schur complexa é diagonal: u = Z·diag(e^{iθ})·Z†.
    Cada autovalor e^{iθ}, θ ∈ (-π, π], vai para e^{iθ/2}; o autovalor -1 vai para +i,
    assim como os ângulos com |θ| ≥ π - rtol.

    Raises:
        UnitarityError: ‖u·u† - 1‖_F acima da tolerância
    """
    tol = resolve(tol)
    u = ensure_square(u, "u").astype(np.complex128)
    n = u.shape[0]

    residual = identity_residual(u)
    if residual > tol.bound(np.sqrt(n)):
        raise UnitarityError(
            f"Matriz não é unitária: ‖u·u† - 1‖_F = {residual:.3e}",
            residual=residual,
        )

    t, z = scipy.linalg.schur(u, output="complex")
    theta = np.angle(np.diag(t))
    # agrupamentos em torno de -1 vão todos para o mesmo ramo (+i)
    theta = np.where(np.pi - np.abs(theta) <= tol.rtol, np.pi, theta)
    return (z * np.exp(0.5j * theta)) @ z.conj().T


def schur_antisymmetric(a, tol: Tolerance | None = None) -> SchurAntisymResult:
    """
    Quase-diagonaliza uma matriz real antissimétrica de tamanho 2ℓ.

    Usa a forma de Schur real do SciPy e absorve em o:
      - a permutação Π₁ por bloco (troca as colunas quando o valor positivo
        está abaixo da diagonal);
      - a ordenação dos blocos por φ não crescente.
    Autovalores nulos aparecem como blocos 1×1 e são pareados em blocos φ = 0.

    Raises:
        DimensionError: tamanho ímpar
        NotAntisymmetricError: ‖a + aᵀ‖ acima de rtol·‖a‖
    """
    tol = resolve(tol)
    a = ensure_even(a, "a")
    if np.iscomplexobj(a):
        raise NotAntisymmetricError("schur_antisymmetric exige matriz real")

    scale = frobenius(a)
    asym = frobenius(a + a.T)
    if asym > tol.bound(scale):
        raise NotAntisymmetricError(
            f"Matriz não é antissimétrica: ‖a + aᵀ‖_F = {asym:.3e}",
            residual=asym,
        )
    a = 0.5 * (a - a.T)
    n = a.shape[0]

    t, z = scipy.linalg.schur(a, output="real")

    blocks: list[tuple[float, np.ndarray, np.ndarray]] = []
    null_columns: list[np.ndarray] = []
    swaps = 0
    i = 0
    while i < n:
        if i + 1 < n and t[i + 1, i] != 0.0:
            upper, lower = t[i, i + 1], t[i + 1, i]
            phi = float(np.sqrt(abs(upper * lower)))
            if upper > 0:
                blocks.append((phi, z[:, i], z[:, i + 1]))
            else:
                blocks.append((phi, z[:, i + 1], z[:, i]))
                swaps += 1
            i += 2
        else:
            null_columns.append(z[:, i])
            i += 1

    for k in range(0, len(null_columns), 2):
        blocks.append((0.0, null_columns[k], null_columns[k + 1]))

    order = sorted(range(len(blocks)), key=lambda k: -blocks[k][0])
    o = np.empty((n, n))
    phis = np.empty(n // 2)
    for pos, k in enumerate(order):
        phi, first, second = blocks[k]
        o[:, 2 * pos] = first
        o[:, 2 * pos + 1] = second
        phis[pos] = phi

    logger.debug(f"schur_antisymmetric: {len(blocks)} blocos, {swaps} trocas de sinal, "
                 f"{len(null_columns)} colunas nulas")
    return SchurAntisymResult(o=o, phis=phis)


__all__ = [
    "PolarResult",
    "SchurAntisymResult",
    "quasi_diagonal",
    "polar",
    "psd_sqrt",
    "pd_inv_sqrt",
    "pd_sqrt_pair",
    "unitary_sqrt",
    "schur_antisymmetric",
]
