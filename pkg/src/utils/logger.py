import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Mapping, Optional

from ..config.settings import LOG_FILE, LOG_LEVEL

ROOT_LOGGER = "tactile_player"

# Formato do log: horário com milissegundos (atrasos de reprodução são da ordem de ms)
LOG_FORMAT = "%(asctime)s.%(msecs)03d - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%H:%M:%S"

# -q/-v da CLI → nível do handler de console
VERBOSITY_LEVELS = {-1: logging.ERROR, 0: logging.WARNING, 1: logging.INFO, 2: logging.DEBUG}


def setup_logger(name: str, log_file: Optional[Path] = None, level: str = LOG_LEVEL) -> logging.Logger:
    """
    Configura e retorna o logger raiz da aplicação.

    O console vai para stderr: stdout fica livre para logs de comandos e
    tabelas da CLI. O arquivo rotativo recebe tudo a partir de `level`.

    Args:
        name: Nome do logger
        log_file: Caminho opcional para arquivo de log rotativo
        level: Nível inicial (LOG_LEVEL do .env)

    Returns:
        logging.Logger: Logger configurado
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)
    if logger.handlers:
        return logger

    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    console_handler.set_name("console")
    logger.addHandler(console_handler)

    if log_file:
        try:
            file_handler = RotatingFileHandler(log_file, maxBytes=10 * 1024 * 1024, backupCount=5, encoding="utf-8")
        except OSError as e:
            logger.warning(f"Log em arquivo desativado ({log_file}): {e}")
        else:
            file_handler.setFormatter(formatter)
            file_handler.setLevel(level)
            file_handler.set_name("file")
            logger.addHandler(file_handler)

    return logger


def set_verbosity(verbosity: int) -> None:
    """
    Ajusta só o handler de console; o arquivo mantém o nível do .env.

    Args:
        verbosity: -1 (só erros), 0 (avisos), 1 (info), 2+ (debug)
    """
    level = VERBOSITY_LEVELS[max(-1, min(2, verbosity))]
    levels = [level]
    for handler in app_logger.handlers:
        if handler.get_name() == "console":
            handler.setLevel(level)
        else:
            levels.append(handler.level)
    app_logger.setLevel(min(levels))


def log_diagnostics(logger: logging.Logger, source: str, counts: Mapping[str, int]) -> None:
    """Resumo dos diagnósticos de uma execução, uma linha por código."""
    if not counts:
        return
    logger.info(f"Diagnósticos de {source}: {sum(counts.values())} ocorrências")
    for code, count in counts.items():
        logger.info(f"  {code}: {count}")


# Logger principal da aplicação
app_logger = setup_logger(ROOT_LOGGER, LOG_FILE)


def get_logger(name: str) -> logging.Logger:
    """
    Retorna um logger filho para o módulo especificado.

    Args:
        name: Nome do módulo (__name__)

    Returns:
        logging.Logger: Logger em tactile_player.<módulo>
    """
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")
