"""Validação estrita das saídas (modo debug/strict, ver settings.VALIDATE_OUTPUTS)."""

import logging

from src.core.exceptions import ValidationFailure
from src.linalg.checks import frobenius

logger = logging.getLogger(__name__)


def require(name: str, residual: float, bound: float, *, invariant: str = "reconstruction") -> None:
    """Levanta ValidationFailure se residual > bound."""
    if not residual <= bound:
        raise ValidationFailure(
            f"{name}: resíduo {residual:.3e} acima da tolerância {bound:.3e}",
            invariant=invariant,
            residual=float(residual),
        )
    logger.debug(f"{name}: resíduo {residual:.3e} ≤ {bound:.3e}")


def require_reconstruction(name: str, target, reconstructed, bound: float) -> float:
    residual = frobenius(reconstructed - target)
    require(f"{name} reconstrução", residual, bound)
    return residual


def require_member(name: str, ok: bool, residual: float, *, invariant: str) -> None:
    """Levanta ValidationFailure se um predicado de pertinência falhou."""
    if not ok:
        raise ValidationFailure(
            f"{name}: predicado falhou (resíduo {residual:.3e})",
            invariant=invariant,
            residual=float(residual),
        )
