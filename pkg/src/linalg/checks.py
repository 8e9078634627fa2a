"""Validadores compartilhados de matrizes densas (RealMatrix / ComplexMatrix)."""

import numpy as np

from src.core.exceptions import DimensionError, InvalidInputError, SymmetryError
from src.core.tolerance import Tolerance


def as_matrix(a, name: str = "a") -> np.ndarray:
    """Converte para ndarray 2-D float64/complex128 com entradas finitas."""
    arr = np.asarray(a)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise DimensionError(f"{name} deve ser uma matriz 2-D não vazia, recebido shape {arr.shape}")
    if np.iscomplexobj(arr):
        arr = arr.astype(np.complex128, copy=False)
    else:
        arr = arr.astype(np.float64, copy=False)
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"{name} contém entradas NaN/Inf")
    return arr


def ensure_square(a, name: str = "a") -> np.ndarray:
    arr = as_matrix(a, name)
    if arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"{name} deve ser quadrada, recebido shape {arr.shape}")
    return arr


def ensure_even(a, name: str = "a") -> np.ndarray:
    """Matriz quadrada de tamanho par 2ℓ."""
    arr = ensure_square(a, name)
    if arr.shape[0] % 2:
        raise DimensionError(f"{name} deve ter tamanho par 2ℓ, recebido {arr.shape[0]}")
    return arr


def ensure_modes(modes: int) -> int:
    if int(modes) != modes or modes < 1:
        raise DimensionError(f"Número de modos deve ser inteiro ≥ 1, recebido {modes}")
    return int(modes)


def frobenius(a: np.ndarray) -> float:
    return float(np.linalg.norm(a, "fro"))


def max_asymmetry(a: np.ndarray, hermitian: bool = True) -> float:
    """max|a - a†| (ou max|a - aᵀ| quando hermitian=False)."""
    other = a.conj().T if hermitian else a.T
    return float(np.max(np.abs(a - other)))


def ensure_symmetric(a: np.ndarray, tol: Tolerance, name: str = "a",
                     hermitian: bool = True) -> np.ndarray:
    """
    Verifica simetria (hermitiana por padrão) relativa à norma e devolve a
    parte simétrica, eliminando a assimetria de arredondamento.
    """
    asym = max_asymmetry(a, hermitian=hermitian)
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    if asym > tol.bound(scale):
        kind = "hermitiana" if (hermitian and np.iscomplexobj(a)) else "simétrica"
        raise SymmetryError(
            f"{name} não é {kind}: assimetria máxima {asym:.3e} > {tol.bound(scale):.3e}",
            residual=asym,
        )
    other = a.conj().T if hermitian else a.T
    return 0.5 * (a + other)


def identity_residual(a: np.ndarray) -> float:
    """‖a·a† - 1‖_F."""
    n = a.shape[0]
    return frobenius(a @ a.conj().T - np.eye(n))
