import logging
import os
import sys
from datetime import datetime
from typing import Optional

LOG_FORMAT = "%(asctime)s - %(levelname)s - [%(name)s] %(message)s"


def setup_logging(log_file_prefix: str = 'sympdec', level: str = 'WARNING',
                  log_to_file: bool = False, log_dir: Optional[str] = None) -> None:
    """
    Configura o sistema de logging: console em stderr e, opcionalmente, arquivo.

    stdout fica reservado para o relatório da CLI. O nome do arquivo de log
    inclui o prefixo e um timestamp.
    """
    # Remove handlers existentes para evitar duplicação
    for handler in logging.root.handlers[:]:
        handler.close()
        logging.root.removeHandler(handler)

    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]

    log_filepath = None
    if log_to_file:
        log_dir = log_dir or "logs"
        os.makedirs(log_dir, exist_ok=True)
        log_filename = f"{log_file_prefix}_{datetime.now().strftime('%Y%m%d_%H%M%S')}.log"
        log_filepath = os.path.join(log_dir, log_filename)
        handlers.append(logging.FileHandler(log_filepath))

    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format=LOG_FORMAT,
        handlers=handlers,
    )
    if log_filepath:
        logging.info(f"Logging configurado. Salvando em: {log_filepath}")


__all__ = ['setup_logging', 'LOG_FORMAT']
