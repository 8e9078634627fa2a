"""Hierarquia de exceções do sympdec.

Todas derivam de ``ValueError`` para que chamadores que já tratam
``ValueError`` continuem funcionando. Cada exceção informa o invariante
violado e, quando existe, o resíduo medido (usados pelo relatório da CLI).
"""

from typing import Optional


class SympdecError(ValueError):
    """Erro base de validação/decomposição."""

    invariant: str = "input"

    def __init__(self, message: str, *, invariant: Optional[str] = None,
                 residual: Optional[float] = None):
        super().__init__(message)
        if invariant is not None:
            self.invariant = invariant
        self.residual = residual


class DimensionError(SympdecError):
    """Forma incompatível: não quadrada, tamanho ímpar, ℓ < 1..."""

    invariant = "dimension"


class InvalidInputError(SympdecError):
    """Entradas NaN/Inf ou parâmetros fora do domínio."""

    invariant = "finite"


class SymmetryError(SympdecError):
    """Matriz não simétrica/hermitiana dentro da tolerância."""

    invariant = "symmetry"


class NotAntisymmetricError(SymmetryError):
    invariant = "antisymmetry"


class NotPositiveSemidefiniteError(SympdecError):
    """Autovalor mínimo abaixo de -rtol·‖a‖."""

    invariant = "positive-semidefinite"

    def __init__(self, message: str, *, min_eigenvalue: float, **kwargs):
        super().__init__(message, **kwargs)
        self.min_eigenvalue = min_eigenvalue


class NotPositiveDefiniteError(NotPositiveSemidefiniteError):
    invariant = "positive-definite"


class UnitarityError(SympdecError):
    invariant = "unitarity"


class SymplecticError(SympdecError):
    invariant = "symplectic"


class StructureError(SympdecError):
    """Falha de estrutura de subgrupo (ortogonalidade, forma de blocos, det)."""

    invariant = "structure"


class DegeneracyError(SympdecError):
    """Pivô |R_ii| ≤ atol na decomposição de Iwasawa (entrada corrompida)."""

    invariant = "degeneracy"


class ValidationFailure(SympdecError):
    """Validação estrita da saída falhou (resíduo acima da tolerância efetiva)."""

    invariant = "reconstruction"


class MatrixFormatError(SympdecError):
    """Erro de sintaxe no formato texto."""

    invariant = "format"

    def __init__(self, message: str, *, line: Optional[int] = None,
                 token: Optional[str] = None, column: Optional[int] = None):
        super().__init__(message)
        self.line = line
        self.token = token
        self.column = column


class MatrixSchemaError(SympdecError):
    """Documento estruturado com campo ausente ou inconsistente."""

    invariant = "schema"

    def __init__(self, message: str, *, field: str):
        super().__init__(message)
        self.field = field


__all__ = [
    "SympdecError",
    "DimensionError",
    "InvalidInputError",
    "SymmetryError",
    "NotAntisymmetricError",
    "NotPositiveSemidefiniteError",
    "NotPositiveDefiniteError",
    "UnitarityError",
    "SymplecticError",
    "StructureError",
    "DegeneracyError",
    "ValidationFailure",
    "MatrixFormatError",
    "MatrixSchemaError",
]
