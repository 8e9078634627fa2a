# src/data_handler/matrix_io.py
"""
Leitura e escrita de matrizes reais e complexas.

Dois formatos:
  - texto: uma linha por linha da matriz, entradas separadas por espaço,
    complexos como ``a+bi`` / ``a-bi``; sem cabeçalho.
  - estruturado (JSON): ``{"dtype", "rows", "cols", "data"}`` validado por
    pydantic; complexos como pares ``[re, im]``.

Ambos fazem round-trip exato com 17 dígitos significativos.
"""

import logging
import math
import re
from pathlib import Path
from typing import Literal, Union

import numpy as np
from pydantic import BaseModel, Field, ValidationError, ValidationInfo, field_validator

from src.core.exceptions import MatrixFormatError, MatrixSchemaError
from src.linalg.checks import as_matrix

logger = logging.getLogger(__name__)

FORMATS = ("text", "structured")
EXTENSIONS = {"text": "txt", "structured": "json"}
DEFAULT_PRECISION = 17

_NUMBER = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_REAL_RE = re.compile(rf"^[+-]?{_NUMBER}$")
_COMPLEX_RE = re.compile(
    rf"^(?:(?P<re>[+-]?{_NUMBER})(?P<im>[+-]{_NUMBER})|(?P<pure>[+-]?{_NUMBER}))i$"
)


# ---------------------------------------------------------------------------
# Formato texto
# ---------------------------------------------------------------------------

def _parse_token(token: str, line: int, column: int) -> Union[float, complex]:
    if token.endswith("i"):
        match = _COMPLEX_RE.match(token)
        if match is None:
            raise MatrixFormatError(
                f"Token complexo inválido '{token}' (linha {line}, coluna {column})",
                line=line, token=token, column=column,
            )
        if match.group("pure") is not None:
            value: Union[float, complex] = complex(0.0, float(match.group("pure")))
        else:
            value = complex(float(match.group("re")), float(match.group("im")))
    elif _REAL_RE.match(token):
        value = float(token)
    else:
        raise MatrixFormatError(
            f"Token inválido '{token}' (linha {line}, coluna {column})",
            line=line, token=token, column=column,
        )
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise MatrixFormatError(
            f"Valor não finito '{token}' (linha {line}, coluna {column})",
            line=line, token=token, column=column,
        )
    return value


def parse_text(payload: Union[bytes, str]) -> np.ndarray:
    """
    Converte o formato texto em matriz; é complexa se algum token termina em 'i'.

    Linhas em branco são ignoradas. Colunas são posições de caractere (1-based).

    Raises:
        MatrixFormatError: UTF-8 inválido, token ilegível, linhas de tamanhos
            diferentes ou entrada vazia
    """
    if isinstance(payload, bytes):
        try:
            payload = payload.decode("utf-8")
        except UnicodeDecodeError as e:
            raise MatrixFormatError(f"Entrada não é UTF-8 válido: {e}") from e

    rows: list[list[Union[float, complex]]] = []
    width = None
    for line_no, raw in enumerate(payload.splitlines(), start=1):
        entries = [
            _parse_token(m.group(), line_no, m.start() + 1)
            for m in re.finditer(r"\S+", raw)
        ]
        if not entries:
            continue
        if width is None:
            width = len(entries)
        elif len(entries) != width:
            raise MatrixFormatError(
                f"Linha {line_no} com {len(entries)} entradas; esperado {width}",
                line=line_no,
            )
        rows.append(entries)

    if not rows:
        raise MatrixFormatError("Entrada vazia: nenhuma linha de matriz")

    is_complex = any(isinstance(v, complex) for row in rows for v in row)
    return np.array(rows, dtype=np.complex128 if is_complex else np.float64)


def _format_real(x: float, precision: int) -> str:
    x = float(x)
    if precision == DEFAULT_PRECISION:
        text = repr(x)
        return text[:-2] if text.endswith(".0") else text
    return f"{x:.{precision}g}"


def _format_complex(z: complex, precision: int) -> str:
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{_format_real(z.real, precision)}{sign}{_format_real(abs(z.imag), precision)}i"


def serialize_text(m, precision: int = DEFAULT_PRECISION) -> bytes:
    """
    Serializa no formato texto. Com precision=17 usa a representação mais curta
    que faz round-trip (repr), sem o sufixo '.0'.
    """
    if precision < 1:
        raise ValueError(f"precision deve ser ≥ 1, recebido {precision}")
    m = as_matrix(m, "m")
    fmt = _format_complex if np.iscomplexobj(m) else _format_real
    lines = [" ".join(fmt(v, precision) for v in row) for row in m.tolist()]
    return ("\n".join(lines) + "\n").encode("utf-8")


# ---------------------------------------------------------------------------
# Formato estruturado
# ---------------------------------------------------------------------------

class MatrixDocument(BaseModel):
    """Documento estruturado de uma matriz."""
    dtype: Literal["real", "complex"]
    rows: int = Field(gt=0)
    cols: int = Field(gt=0)
    data: list[list[Union[float, list[float]]]]

    @field_validator("data")
    @classmethod
    def _check_data(cls, data, info: ValidationInfo):
        dtype, rows, cols = (info.data.get(k) for k in ("dtype", "rows", "cols"))
        if rows is not None and len(data) != rows:
            raise ValueError(f"rows={rows} mas data tem {len(data)} linhas")
        for i, row in enumerate(data):
            if cols is not None and len(row) != cols:
                raise ValueError(f"cols={cols} mas a linha {i} de data tem {len(row)} entradas")
            for entry in row:
                if dtype == "complex":
                    if not isinstance(entry, list) or len(entry) != 2:
                        raise ValueError("dtype 'complex' exige entradas [re, im]")
                    values = entry
                elif dtype == "real":
                    if isinstance(entry, list):
                        raise ValueError("dtype 'real' exige entradas numéricas")
                    values = [entry]
                else:
                    values = entry if isinstance(entry, list) else [entry]
                if not all(math.isfinite(v) for v in values):
                    raise ValueError("data contém valores não finitos")
        return data

    def to_array(self) -> np.ndarray:
        if self.dtype == "complex":
            return np.array([[complex(re_, im_) for re_, im_ in row] for row in self.data],
                            dtype=np.complex128)
        return np.array(self.data, dtype=np.float64)

    @classmethod
    def from_array(cls, m) -> "MatrixDocument":
        m = as_matrix(m, "m")
        if np.iscomplexobj(m):
            data = [[[z.real, z.imag] for z in row] for row in m.tolist()]
            dtype = "complex"
        else:
            data = m.tolist()
            dtype = "real"
        return cls(dtype=dtype, rows=m.shape[0], cols=m.shape[1], data=data)


def parse_structured(payload: Union[bytes, str]) -> np.ndarray:
    """
    Raises:
        MatrixSchemaError: JSON inválido, campo ausente, dtype ou forma inconsistentes
    """
    try:
        doc = MatrixDocument.model_validate_json(payload)
    except ValidationError as e:
        first = e.errors()[0]
        field = str(first["loc"][0]) if first["loc"] else "document"
        raise MatrixSchemaError(f"Documento inválido no campo '{field}': {first['msg']}",
                                field=field) from e
    return doc.to_array()


def serialize_structured(m) -> bytes:
    return MatrixDocument.from_array(m).model_dump_json().encode("utf-8")


# ---------------------------------------------------------------------------
# Arquivos
# ---------------------------------------------------------------------------

def parse_matrix(payload: Union[bytes, str], fmt: str = "text") -> np.ndarray:
    if fmt == "text":
        return parse_text(payload)
    if fmt == "structured":
        return parse_structured(payload)
    raise ValueError(f"Formato desconhecido '{fmt}'. Use um de {FORMATS}")


def serialize_matrix(m, fmt: str = "text", precision: int = DEFAULT_PRECISION) -> bytes:
    if fmt == "text":
        return serialize_text(m, precision)
    if fmt == "structured":
        return serialize_structured(m)
    raise ValueError(f"Formato desconhecido '{fmt}'. Use um de {FORMATS}")


def read_matrix(path: Union[str, Path], fmt: str = "text") -> np.ndarray:
    path = Path(path)
    logger.debug(f"Lendo matriz de {path} (formato {fmt})")
    return parse_matrix(path.read_bytes(), fmt)


def write_matrix(m, path: Union[str, Path], fmt: str = "text",
                 precision: int = DEFAULT_PRECISION) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(serialize_matrix(m, fmt, precision))
    logger.debug(f"Matriz {np.shape(m)} salva em {path}")
    return path


__all__ = [
    "DEFAULT_PRECISION",
    "EXTENSIONS",
    "FORMATS",
    "MatrixDocument",
    "parse_matrix",
    "parse_structured",
    "parse_text",
    "read_matrix",
    "serialize_matrix",
    "serialize_structured",
    "serialize_text",
    "write_matrix",
]
