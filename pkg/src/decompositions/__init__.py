"""Decomposições de Takagi, Bloch-Messiah, (pré-)Iwasawa e Williamson."""

from src.decompositions.bloch_messiah import bloch_messiah
from src.decompositions.iwasawa import iwasawa, pre_iwasawa
from src.decompositions.results import (
    BlochMessiahResult,
    IwasawaResult,
    PreIwasawaResult,
    TakagiResult,
    WilliamsonResult,
)
from src.decompositions.takagi import takagi, takagi_real
from src.decompositions.williamson import symplectic_eigenvalues, williamson

__all__ = [
    "BlochMessiahResult",
    "IwasawaResult",
    "PreIwasawaResult",
    "TakagiResult",
    "WilliamsonResult",
    "bloch_messiah",
    "iwasawa",
    "pre_iwasawa",
    "symplectic_eigenvalues",
    "takagi",
    "takagi_real",
    "williamson",
]
