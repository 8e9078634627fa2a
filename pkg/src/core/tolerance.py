"""Modelo de tolerância usado por todos os predicados de validação."""

from dataclasses import dataclass
from typing import Optional

from src.core.config import settings


@dataclass(frozen=True)
class Tolerance:
    """
    Limiares relativo/absoluto.

    Attributes:
        rtol (float): tolerância relativa, multiplicada pela escala da entrada
        atol (float): piso absoluto
    """

    rtol: float = 1e-8
    atol: float = 1e-10

    def __post_init__(self):
        if not (self.rtol > 0 and self.atol > 0):
            raise ValueError(f"rtol e atol devem ser positivos (rtol={self.rtol}, atol={self.atol})")

    def bound(self, scale: float = 1.0) -> float:
        """Limite atol + rtol·scale."""
        return self.atol + self.rtol * float(scale)

    @classmethod
    def default(cls) -> "Tolerance":
        """Tolerância padrão lida de settings (SYMPDEC_TOL_RTOL / SYMPDEC_TOL_ATOL)."""
        return cls(rtol=settings.TOLERANCE.rtol, atol=settings.TOLERANCE.atol)


def resolve(tol: Optional[Tolerance]) -> Tolerance:
    return tol if tol is not None else Tolerance.default()


def resolve_validate(validate: Optional[bool]) -> bool:
    return settings.VALIDATE_OUTPUTS if validate is None else bool(validate)


def effective_tolerance(tol: Tolerance, input_norm: float, gamma_max: float = 1.0) -> float:
    """
    Tolerância efetiva das decomposições simpléticas.

    O condicionamento cresce com o squeezing, daí o fator max(1, γ_max):
    tol_eff = atol + rtol·‖s‖_F·max(1, γ_max).
    """
    return tol.bound(float(input_norm) * max(1.0, float(gamma_max)))
