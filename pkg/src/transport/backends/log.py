from pathlib import Path
from typing import Union

from ...config.constants import LOG_HEADER
from ...errors import TransportError
from ...timeline.model import DeviceCommand
from ...utils.logger import get_logger
from ..base import OutputBackend
from ..logfile import format_log_line

logger = get_logger(__name__)


class LogBackend(OutputBackend):
    """Backend que grava cada comando entregue no formato de log"""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self._file = open(self.path, "w", encoding="utf-8", newline="\n")
            self._file.write(LOG_HEADER + "\n")
        except OSError as e:
            logger.error(f"Erro ao abrir log {self.path}: {e}")
            raise TransportError(f"Não foi possível abrir {self.path}: {e}") from e

    def send(self, command: DeviceCommand) -> None:
        try:
            self._file.write(format_log_line(command) + "\n")
        except (OSError, ValueError) as e:
            raise TransportError(f"Falha ao escrever em {self.path}: {e}") from e

    def close(self) -> None:
        if not self._file.closed:
            self._file.close()

    @property
    def name(self) -> str:
        return f"log:{self.path}"
