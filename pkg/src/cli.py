# src/cli.py
"""
CLI do sympdec.

Uso:
    sympdec takagi m.txt
    sympdec williamson sigma.txt --output-dir out/
    sympdec check omega.txt
    sympdec random --modes 3 --max-squeeze 1 --seed 7 | sympdec check -

Códigos de saída:
    0  sucesso
    1  falha de validação/decomposição (invariante violado)
    2  erro de leitura/formato ou de uso
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import BinaryIO, Callable, Optional, TextIO

import numpy as np

from src.core.config import load_run_config, settings
from src.core.exceptions import MatrixFormatError, MatrixSchemaError, SympdecError
from src.core.tolerance import Tolerance
from src.data_handler.matrix_io import (
    DEFAULT_PRECISION,
    EXTENSIONS,
    FORMATS,
    parse_matrix,
    serialize_matrix,
    write_matrix,
)
from src.decompositions import (
    bloch_messiah,
    iwasawa,
    pre_iwasawa,
    symplectic_eigenvalues,
    takagi,
    williamson,
)
from src.ensembles.random_ensembles import DEFAULT_MAX_SQUEEZE, random_symplectic
from src.linalg.kernels import polar
from src.reporting.report import (
    DecompositionReport,
    bloch_messiah_checks,
    iwasawa_checks,
    polar_checks,
    pre_iwasawa_checks,
    symplectic_checks,
    symplectic_eigenvalue_checks,
    takagi_checks,
    williamson_checks,
)
from src.utils.logger import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

DECOMPOSITIONS = ("takagi", "bloch-messiah", "pre-iwasawa", "iwasawa", "williamson", "polar")
COMMANDS = DECOMPOSITIONS + ("sympeig", "check", "random")
REAL_ONLY = {"bloch-messiah", "pre-iwasawa", "iwasawa", "williamson", "sympeig", "check"}


class UsageError(Exception):
    """Entrada incompatível com o subcomando (mapeada para exit 2)."""


@dataclass(frozen=True)
class CliConfig:
    """Configuração resolvida de uma execução (flags > YAML > padrões)."""
    command: str
    input: Optional[str] = None
    output_dir: Optional[Path] = None
    fmt: str = "text"
    tol: Tolerance = Tolerance()
    validate: bool = True
    seed: int = 0
    modes: int = 1
    max_squeeze: float = DEFAULT_MAX_SQUEEZE
    precision: int = DEFAULT_PRECISION

    @property
    def extension(self) -> str:
        return EXTENSIONS[self.fmt]

    @property
    def stem(self) -> str:
        if self.input in (None, "-"):
            return "stdin"
        return Path(self.input).stem

    def target_dir(self) -> Path:
        if self.output_dir is not None:
            return Path(self.output_dir)
        if self.input in (None, "-"):
            return Path.cwd()
        return Path(self.input).parent


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"deve ser > 0, recebido {text}")
    return value


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=FORMATS, default=None,
                        help="Formato de entrada/saída (padrão: text)")
    common.add_argument("--rtol", type=_positive_float, default=None, help="Tolerância relativa")
    common.add_argument("--atol", type=_positive_float, default=None, help="Tolerância absoluta")
    common.add_argument("--no-validate", dest="validate", action="store_false", default=None,
                        help="Não valida entrada/saída (resíduos continuam no relatório)")
    common.add_argument("--output-dir", type=Path, default=None,
                        help="Diretório dos arquivos de fatores")
    common.add_argument("--precision", type=int, default=None,
                        help="Dígitos significativos do formato texto (padrão: 17)")
    common.add_argument("--config", type=Path, default=None,
                        help="YAML com padrões de execução (padrão: configs/main.yaml)")
    common.add_argument("--log-level", default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                        help="Nível de log (stderr)")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympdec",
        description="Decomposições simpléticas: Takagi, Bloch-Messiah, (pré-)Iwasawa, Williamson",
    )
    common = _common_options()
    sub = parser.add_subparsers(dest="command", required=True)

    helps = {
        "takagi": "Takagi/Autonne de matriz complexa simétrica (fatores W, Lambda)",
        "bloch-messiah": "Bloch-Messiah/Euler de matriz simplética (O, D, Q)",
        "pre-iwasawa": "Pré-Iwasawa de matriz simplética (E, D, F)",
        "iwasawa": "Iwasawa de matriz simplética (E, D, F)",
        "williamson": "Williamson de matriz simétrica PD (S, T)",
        "polar": "Decomposição polar (P, W)",
        "sympeig": "Autovalores simpléticos (delta)",
        "check": "Verifica se a matriz é simplética",
    }
    for name, text in helps.items():
        cmd = sub.add_parser(name, parents=[common], help=text)
        cmd.add_argument("input", help="Arquivo da matriz ('-' para stdin)")

    rnd = sub.add_parser("random", parents=[common], help="Gera matriz simplética aleatória")
    rnd.add_argument("--modes", type=int, default=None, help="Número de modos ℓ")
    rnd.add_argument("--max-squeeze", type=float, default=None, help="Squeezing máximo r")
    rnd.add_argument("--seed", type=int, default=None, help="Semente (0 ≤ seed < 2⁶⁴)")
    return parser


def resolve_config(args: argparse.Namespace) -> CliConfig:
    """Combina flags, o YAML de execução e os padrões de settings."""
    run_config = load_run_config(args.config)
    cli_defaults = run_config["cli"]
    random_defaults = run_config["random"]

    def pick(value, key, defaults, fallback):
        if value is not None:
            return value
        return defaults.get(key, fallback)

    output_dir = pick(args.output_dir, "output_dir", cli_defaults, None)
    tol = Tolerance(
        rtol=float(pick(args.rtol, "rtol", cli_defaults, settings.TOLERANCE.rtol)),
        atol=float(pick(args.atol, "atol", cli_defaults, settings.TOLERANCE.atol)),
    )
    return CliConfig(
        command=args.command,
        input=getattr(args, "input", None),
        output_dir=Path(output_dir) if output_dir is not None else None,
        fmt=pick(args.fmt, "format", cli_defaults, "text"),
        tol=tol,
        validate=bool(pick(args.validate, "validate", cli_defaults, settings.VALIDATE_OUTPUTS)),
        seed=int(pick(getattr(args, "seed", None), "seed", random_defaults, 0)),
        modes=int(pick(getattr(args, "modes", None), "modes", random_defaults, 1)),
        max_squeeze=float(pick(getattr(args, "max_squeeze", None), "max_squeeze",
                               random_defaults, DEFAULT_MAX_SQUEEZE)),
        precision=int(pick(args.precision, "precision", cli_defaults, DEFAULT_PRECISION)),
    )


# ---------------------------------------------------------------------------
# Execução
# ---------------------------------------------------------------------------

def _read_input(config: CliConfig, stdin: BinaryIO) -> np.ndarray:
    if config.input == "-":
        payload = stdin.read()
    else:
        path = Path(config.input)
        if not path.is_file():
            raise UsageError(f"Arquivo de entrada não encontrado: {path}")
        payload = path.read_bytes()
    m = parse_matrix(payload, config.fmt)
    if config.command in REAL_ONLY and np.iscomplexobj(m):
        raise UsageError(f"'{config.command}' exige matriz real")
    return m


def _write_factors(config: CliConfig, factors: dict) -> list[Path]:
    out_dir = config.target_dir()
    written = []
    for name, array in factors.items():
        path = out_dir / f"{config.stem}.{name}.{config.extension}"
        written.append(write_matrix(array, path, config.fmt, config.precision))
    logger.info(f"Fatores salvos: {', '.join(str(p) for p in written)}")
    return written


def _run_takagi(m, config):
    result = takagi(m, config.tol, config.validate)
    return takagi_checks(m, result, config.tol), result.factors()


def _run_bloch_messiah(s, config):
    result = bloch_messiah(s, config.tol, config.validate)
    return bloch_messiah_checks(s, result, config.tol), result.factors()


def _run_pre_iwasawa(s, config):
    result = pre_iwasawa(s, config.tol, config.validate)
    return pre_iwasawa_checks(s, result, config.tol), result.factors()


def _run_iwasawa(s, config):
    result = iwasawa(s, config.tol, config.validate)
    return iwasawa_checks(s, result, config.tol), result.factors()


def _run_williamson(sigma, config):
    result = williamson(sigma, config.tol, config.validate)
    reference = symplectic_eigenvalues(sigma, config.tol)
    return williamson_checks(sigma, result, config.tol, reference), result.factors()


def _run_polar(a, config):
    result = polar(a)
    return polar_checks(a, result, config.tol), {"P": result.p, "W": result.w}


def _run_sympeig(sigma, config):
    deltas = symplectic_eigenvalues(sigma, config.tol)
    return symplectic_eigenvalue_checks(sigma, deltas, config.tol), {"delta": deltas[None, :]}


RUNNERS: dict[str, Callable[[np.ndarray, CliConfig], tuple[DecompositionReport, dict]]] = {
    "takagi": _run_takagi,
    "bloch-messiah": _run_bloch_messiah,
    "pre-iwasawa": _run_pre_iwasawa,
    "iwasawa": _run_iwasawa,
    "williamson": _run_williamson,
    "polar": _run_polar,
    "sympeig": _run_sympeig,
}


def _run_random(config: CliConfig, stdout: TextIO) -> int:
    s = random_symplectic(config.modes, config.max_squeeze, config.seed)
    if config.output_dir is not None:
        path = write_matrix(s.m, Path(config.output_dir) / f"random.S.{config.extension}",
                            config.fmt, config.precision)
        logger.info(f"Matriz aleatória salva em {path}")
    else:
        stdout.write(serialize_matrix(s.m, config.fmt, config.precision).decode("utf-8"))
        if config.fmt == "structured":
            stdout.write("\n")
    return EXIT_OK


def _run_check(m: np.ndarray, config: CliConfig, stdout: TextIO) -> int:
    report = symplectic_checks(m, config.tol)
    residual = report.residual("SΩSᵀ = Ω")
    stdout.write(f"symplectic: {'true' if report.passed else 'false'}, residual {residual:.3e}\n")
    stdout.write(report.render())
    return EXIT_OK if report.passed else EXIT_FAILURE


def run(config: CliConfig, stdin: Optional[BinaryIO] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """
    Executa um subcomando e devolve o código de saída.

    O relatório vai para stdout; diagnósticos para stderr.
    """
    stdin = stdin if stdin is not None else sys.stdin.buffer
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr

    try:
        if config.command == "random":
            return _run_random(config, stdout)

        m = _read_input(config, stdin)
        if config.command == "check":
            return _run_check(m, config, stdout)

        report, factors = RUNNERS[config.command](m, config)
        _write_factors(config, factors)
        stdout.write(report.render())
        if not report.passed:
            logger.warning(f"{config.command}: resíduo acima do limite no relatório")
            return EXIT_FAILURE
        return EXIT_OK

    except (MatrixFormatError, MatrixSchemaError) as e:
        stderr.write(f"erro de formato [{e.invariant}]: {e}\n")
        return EXIT_USAGE
    except UsageError as e:
        stderr.write(f"erro de uso: {e}\n")
        return EXIT_USAGE
    except SympdecError as e:
        residual = f" (resíduo {e.residual:.3e})" if e.residual is not None else ""
        stderr.write(f"erro [{e.invariant}]: {e}{residual}\n")
        return EXIT_FAILURE


def main(argv: Optional[list[str]] = None) -> int:
    """Ponto de entrada do console script ``sympdec``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE

    setup_logging(
        level=args.log_level or settings.LOG_LEVEL,
        log_to_file=settings.LOG_TO_FILE,
        log_dir=str(settings.LOGS_DIR),
    )

    try:
        config = resolve_config(args)
    except (FileNotFoundError, ValueError) as e:
        sys.stderr.write(f"erro de configuração: {e}\n")
        return EXIT_USAGE

    logger.debug(f"Configuração: {config}")
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
