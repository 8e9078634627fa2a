"""Tipos de resultado das decomposições (valores imutáveis)."""

from dataclasses import dataclass

import numpy as np

from src.symplectic.core import OrthoSymplectic, SymplecticMatrix, direct_sum


def _readonly(a) -> np.ndarray:
    a = np.array(a, copy=True)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class TakagiResult:
    """M = W·diag(λ)·Wᵀ, W unitária e λ ≥ 0 não crescente."""

    w: np.ndarray
    lambdas: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "w", _readonly(self.w))
        object.__setattr__(self, "lambdas", _readonly(self.lambdas))

    def reconstruct(self) -> np.ndarray:
        return (self.w * self.lambdas) @ self.w.T

    def factors(self) -> dict:
        return {"W": self.w, "Lambda": np.diag(self.lambdas)}


@dataclass(frozen=True)
class BlochMessiahResult:
    """
    S = O·(Γ ⊕ Γ⁻¹)·Q com O, Q ∈ C(ℓ) e γᵢ ≥ 1 não crescentes.

    Attributes:
        o (OrthoSymplectic): interferômetro de saída
        gammas (np.ndarray): fatores de squeezing γᵢ
        q (OrthoSymplectic): interferômetro de entrada
    """

    o: OrthoSymplectic
    gammas: np.ndarray
    q: OrthoSymplectic

    def __post_init__(self):
        object.__setattr__(self, "gammas", _readonly(self.gammas))

    @property
    def d_matrix(self) -> np.ndarray:
        return np.diag(np.concatenate([self.gammas, 1.0 / self.gammas]))

    @property
    def squeezing(self) -> np.ndarray:
        """Parâmetros de squeezing rᵢ = ln γᵢ."""
        return np.log(self.gammas)

    def reconstruct(self) -> np.ndarray:
        return (self.o.m * np.concatenate([self.gammas, 1.0 / self.gammas])) @ self.q.m

    def factors(self) -> dict:
        return {"O": self.o.m, "D": self.d_matrix, "Q": self.q.m}


@dataclass(frozen=True)
class PreIwasawaResult:
    """
    S = E·(A₀ ⊕ A₀⁻¹)·F.

    Attributes:
        e (np.ndarray): [[1, 0], [C₀A₀⁻¹, 1]]
        a0 (np.ndarray): bloco simétrico PD A₀
        f (OrthoSymplectic): [[X, Y], [-Y, X]] ∈ C(ℓ)
        a0_inv (np.ndarray): A₀⁻¹ (calculada junto com A₀)
    """

    e: np.ndarray
    a0: np.ndarray
    f: OrthoSymplectic
    a0_inv: np.ndarray

    def __post_init__(self):
        for name in ("e", "a0", "a0_inv"):
            object.__setattr__(self, name, _readonly(getattr(self, name)))

    @property
    def d_matrix(self) -> np.ndarray:
        return direct_sum(self.a0, self.a0_inv)

    @property
    def shear(self) -> np.ndarray:
        """Bloco simétrico C₀A₀⁻¹ de E."""
        ell = self.a0.shape[0]
        return self.e[ell:, :ell]

    @property
    def unitary(self) -> np.ndarray:
        """U = X + iY para F = [[X, Y], [-Y, X]] (conjugado de F.u)."""
        return self.f.u.conj()

    def reconstruct(self) -> np.ndarray:
        return self.e @ self.d_matrix @ self.f.m

    def factors(self) -> dict:
        return {"E": self.e, "D": self.d_matrix, "F": self.f.m}


@dataclass(frozen=True)
class IwasawaResult:
    """
    S = N·(D_a ⊕ D_a⁻¹)·K com N ∈ N(ℓ), D_a diagonal positiva e K ∈ C(ℓ).
    """

    n: np.ndarray
    d: np.ndarray
    k: OrthoSymplectic

    def __post_init__(self):
        object.__setattr__(self, "n", _readonly(self.n))
        object.__setattr__(self, "d", _readonly(self.d))

    @property
    def d_matrix(self) -> np.ndarray:
        return np.diag(np.concatenate([self.d, 1.0 / self.d]))

    def reconstruct(self) -> np.ndarray:
        return (self.n * np.concatenate([self.d, 1.0 / self.d])) @ self.k.m

    def factors(self) -> dict:
        return {"E": self.n, "D": self.d_matrix, "F": self.k.m}


@dataclass(frozen=True)
class WilliamsonResult:
    """Σ = S·(Δ ⊕ Δ)·Sᵀ com S simplética e δᵢ > 0 não crescentes."""

    s: SymplecticMatrix
    deltas: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "deltas", _readonly(self.deltas))

    @property
    def t_matrix(self) -> np.ndarray:
        return np.diag(np.concatenate([self.deltas, self.deltas]))

    def reconstruct(self) -> np.ndarray:
        return (self.s.m * np.concatenate([self.deltas, self.deltas])) @ self.s.m.T

    def factors(self) -> dict:
        return {"S": self.s.m, "T": self.t_matrix}


__all__ = [
    "TakagiResult",
    "BlochMessiahResult",
    "PreIwasawaResult",
    "IwasawaResult",
    "WilliamsonResult",
]
