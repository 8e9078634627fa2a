# src/reporting/report.py
"""
Relatório de resíduos das decomposições (saída padrão da CLI).

Cada comando monta uma lista de verificações (nome, resíduo, limite) que vira
um DataFrame; o cabeçalho traz ‖entrada‖_F, γ_max e a tolerância efetiva
atol + rtol·‖entrada‖_F·max(1, γ_max).
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import pandas as pd

from src.core.tolerance import Tolerance, effective_tolerance
from src.decompositions.results import (
    BlochMessiahResult,
    IwasawaResult,
    PreIwasawaResult,
    TakagiResult,
    WilliamsonResult,
)
from src.linalg.checks import frobenius, identity_residual, max_asymmetry
from src.linalg.kernels import PolarResult
from src.symplectic.core import (
    check_block_conditions,
    is_nilpotent_form,
    is_symplectic,
    orthogonality_residual,
    symplectic_residual,
)

logger = logging.getLogger(__name__)

CHECK_COLUMNS = ["check", "residual", "bound", "passed"]

Check = tuple[str, float, float]


@dataclass
class DecompositionReport:
    """
    Verificações de uma execução.

    Attributes:
        command (str): subcomando da CLI
        input_norm (float): ‖entrada‖_F
        gamma_max (float): maior fator de squeezing (1 quando não se aplica)
        tol (Tolerance): tolerâncias usadas
        checks (pd.DataFrame): colunas check, residual, bound, passed
        values (dict): vetores exibidos após a tabela (λ, γ, δ...)
    """

    command: str
    input_norm: float
    gamma_max: float
    tol: Tolerance
    checks: pd.DataFrame = field(default_factory=lambda: pd.DataFrame(columns=CHECK_COLUMNS))
    values: dict = field(default_factory=dict)

    @classmethod
    def from_checks(cls, command: str, input_norm: float, tol: Tolerance, checks: list[Check],
                    gamma_max: float = 1.0, values: Optional[dict] = None) -> "DecompositionReport":
        df = pd.DataFrame(checks, columns=["check", "residual", "bound"])
        df["passed"] = df["residual"] <= df["bound"]
        return cls(command=command, input_norm=float(input_norm), gamma_max=float(gamma_max),
                   tol=tol, checks=df, values=dict(values or {}))

    @property
    def effective_tolerance(self) -> float:
        return effective_tolerance(self.tol, self.input_norm, self.gamma_max)

    @property
    def passed(self) -> bool:
        return bool(self.checks["passed"].all())

    @property
    def max_residual(self) -> float:
        return float(self.checks["residual"].max()) if not self.checks.empty else 0.0

    def residual(self, name: str) -> float:
        row = self.checks.loc[self.checks["check"] == name, "residual"]
        if row.empty:
            raise KeyError(f"Verificação '{name}' não está no relatório")
        return float(row.iloc[0])

    def render(self, precision: int = 6) -> str:
        table = self.checks.copy()
        table["residual"] = table["residual"].map(lambda v: f"{v:.3e}")
        table["bound"] = table["bound"].map(lambda v: f"{v:.3e}")
        table["passed"] = table["passed"].map(lambda v: "ok" if v else "FALHOU")

        lines = [
            f"sympdec {self.command}",
            f"  ‖entrada‖_F       = {self.input_norm:.{precision}g}",
            f"  γ_max             = {self.gamma_max:.{precision}g}",
            f"  rtol, atol        = {self.tol.rtol:.1e}, {self.tol.atol:.1e}",
            f"  tolerância efetiva = atol + rtol·‖entrada‖_F·max(1, γ_max) = "
            f"{self.effective_tolerance:.3e}",
            "",
            table.to_string(index=False),
        ]
        for name, value in self.values.items():
            rendered = np.array2string(np.asarray(value), precision=precision, separator=", ")
            lines.append(f"{name} = {rendered}")
        lines.append(f"status: {'ok' if self.passed else 'FALHOU'}")
        return "\n".join(lines) + "\n"


def _size_bound(tol: Tolerance, m: np.ndarray) -> float:
    return tol.bound(np.sqrt(m.shape[0]))


def _symplectic_bound(tol: Tolerance, m: np.ndarray) -> float:
    return tol.bound(max(1.0, frobenius(m) ** 2))


def _ortho_symplectic_checks(label: str, m: np.ndarray, tol: Tolerance) -> list[Check]:
    return [
        (f"{label} ortogonal", orthogonality_residual(m), _size_bound(tol, m)),
        (f"{label} simplética", symplectic_residual(m), _size_bound(tol, m)),
    ]


def takagi_checks(m: np.ndarray, result: TakagiResult, tol: Tolerance) -> DecompositionReport:
    checks = [
        ("reconstrução", frobenius(result.reconstruct() - m), tol.bound(max(frobenius(m), 1.0))),
        ("W unitária", identity_residual(result.w), _size_bound(tol, result.w)),
        ("M simétrica", max_asymmetry(m, hermitian=False), tol.bound(float(np.max(np.abs(m))))),
    ]
    return DecompositionReport.from_checks("takagi", frobenius(m), tol, checks,
                                           values={"lambda": result.lambdas})


def bloch_messiah_checks(s: np.ndarray, result: BlochMessiahResult,
                         tol: Tolerance) -> DecompositionReport:
    gamma_max = float(result.gammas[0])
    checks = [
        ("reconstrução", frobenius(result.reconstruct() - s),
         effective_tolerance(tol, frobenius(s), gamma_max)),
        *_ortho_symplectic_checks("O", result.o.m, tol),
        *_ortho_symplectic_checks("Q", result.q.m, tol),
        ("γ ≥ 1", float(max(0.0, 1.0 - result.gammas.min())), tol.rtol),
    ]
    return DecompositionReport.from_checks("bloch-messiah", frobenius(s), tol, checks,
                                           gamma_max=gamma_max, values={"gamma": result.gammas})


def pre_iwasawa_checks(s: np.ndarray, result: PreIwasawaResult,
                       tol: Tolerance) -> DecompositionReport:
    gamma_max = float(np.linalg.norm(result.a0, 2))
    shear = result.shear
    checks = [
        ("reconstrução", frobenius(result.reconstruct() - s),
         effective_tolerance(tol, frobenius(s), gamma_max)),
        ("C₀A₀⁻¹ simétrica", frobenius(shear - shear.T), tol.bound(max(1.0, frobenius(s) ** 2))),
        ("E simplética", symplectic_residual(result.e), _symplectic_bound(tol, result.e)),
        ("D simplética", symplectic_residual(result.d_matrix), _symplectic_bound(tol, result.d_matrix)),
        *_ortho_symplectic_checks("F", result.f.m, tol),
    ]
    return DecompositionReport.from_checks("pre-iwasawa", frobenius(s), tol, checks,
                                           gamma_max=gamma_max)


def iwasawa_checks(s: np.ndarray, result: IwasawaResult, tol: Tolerance) -> DecompositionReport:
    gamma_max = float(result.d.max() / result.d.min())
    _, nil_residual = is_nilpotent_form(result.n, tol)
    checks = [
        ("reconstrução", frobenius(result.reconstruct() - s),
         effective_tolerance(tol, frobenius(s), gamma_max)),
        ("E ∈ N(ℓ)", nil_residual, tol.bound(max(1.0, frobenius(result.n) ** 2))),
        ("E simplética", symplectic_residual(result.n), _symplectic_bound(tol, result.n)),
        ("D simplética", symplectic_residual(result.d_matrix), _symplectic_bound(tol, result.d_matrix)),
        *_ortho_symplectic_checks("F", result.k.m, tol),
    ]
    return DecompositionReport.from_checks("iwasawa", frobenius(s), tol, checks,
                                           gamma_max=gamma_max, values={"d": result.d})


def williamson_checks(sigma: np.ndarray, result: WilliamsonResult, tol: Tolerance,
                      reference: Optional[np.ndarray] = None) -> DecompositionReport:
    s = result.s.m
    gamma_max = float(np.linalg.norm(s, 2))
    checks = [
        ("reconstrução", frobenius(result.reconstruct() - sigma),
         effective_tolerance(tol, frobenius(sigma), gamma_max)),
        ("S simplética", symplectic_residual(s), _symplectic_bound(tol, s)),
    ]
    if reference is not None:
        checks.append(("δ = |eig(iΩΣ)|", float(np.max(np.abs(result.deltas - reference))),
                       tol.bound(float(result.deltas[0]))))
    return DecompositionReport.from_checks("williamson", frobenius(sigma), tol, checks,
                                           gamma_max=gamma_max, values={"delta": result.deltas})


def polar_checks(a: np.ndarray, result: PolarResult, tol: Tolerance) -> DecompositionReport:
    checks = [
        ("reconstrução", frobenius(result.reconstruct() - a), tol.bound(max(frobenius(a), 1.0))),
        ("P hermitiana", max_asymmetry(result.p), tol.bound(float(np.max(np.abs(result.p))))),
        ("W unitária", identity_residual(result.w), _size_bound(tol, result.w)),
    ]
    return DecompositionReport.from_checks("polar", frobenius(a), tol, checks)


def symplectic_checks(m: np.ndarray, tol: Tolerance) -> DecompositionReport:
    """Resíduo SΩSᵀ = Ω e as identidades de blocos, para o subcomando check."""
    bound = _symplectic_bound(tol, m)
    _, residual = is_symplectic(m, tol)
    checks = [("SΩSᵀ = Ω", residual, bound)]
    if np.isfinite(residual):
        blocks = check_block_conditions(m, tol)
        checks.extend((name, value, bound) for name, value in blocks.residuals.items())
    return DecompositionReport.from_checks("check", frobenius(m), tol, checks)


def symplectic_eigenvalue_checks(sigma: np.ndarray, deltas: np.ndarray,
                                 tol: Tolerance) -> DecompositionReport:
    checks = [
        ("Σ simétrica", max_asymmetry(sigma), tol.bound(float(np.max(np.abs(sigma))))),
        ("δ > 0", float(max(0.0, -deltas.min())), 0.0),
    ]
    return DecompositionReport.from_checks("sympeig", frobenius(sigma), tol, checks,
                                           values={"delta": deltas})


__all__ = [
    "CHECK_COLUMNS",
    "DecompositionReport",
    "bloch_messiah_checks",
    "symplectic_eigenvalue_checks",
    "iwasawa_checks",
    "polar_checks",
    "pre_iwasawa_checks",
    "symplectic_checks",
    "takagi_checks",
    "williamson_checks",
]
