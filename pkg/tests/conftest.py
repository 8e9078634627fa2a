"""Fixtures compartilhadas dos testes do sympdec."""

from pathlib import Path

import numpy as np
import pytest

from src.core.tolerance import Tolerance
from src.symplectic.core import symplectic_form


@pytest.fixture
def tol() -> Tolerance:
    return Tolerance(rtol=1e-8, atol=1e-10)


@pytest.fixture
def omega() -> np.ndarray:
    """Ω para ℓ = 1."""
    return symplectic_form(1)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240917)


@pytest.fixture
def matrix_file(tmp_path):
    """Grava um texto de matriz em tmp_path e devolve o caminho."""
    def _write(name: str, content: str) -> Path:
        path = tmp_path / name
        path.write_text(content, encoding="utf-8")
        return path
    return _write
