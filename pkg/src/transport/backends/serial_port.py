import serial

from ...config.settings import SERIAL_BAUDRATE, SERIAL_TIMEOUT
from ...errors import TransportError
from ...timeline.model import DeviceCommand
from ...utils.logger import get_logger
from ..base import OutputBackend
from ..framing import encode_frame

logger = get_logger(__name__)


def open_serial_port(port: str, baudrate: int = SERIAL_BAUDRATE) -> serial.Serial:
    """Abre a porta em 8N1 (convenção Hairless MIDI)."""
    try:
        return serial.Serial(
            port,
            baudrate=baudrate,
            bytesize=serial.EIGHTBITS,
            parity=serial.PARITY_NONE,
            stopbits=serial.STOPBITS_ONE,
            timeout=SERIAL_TIMEOUT,
        )
    except serial.SerialException as e:
        logger.error(f"Erro ao abrir porta serial {port}: {e}")
        raise TransportError(f"Porta serial {port} indisponível: {e}") from e


class SerialBackend(OutputBackend):
    """Backend que envia quadros de 4 bytes pela porta serial"""

    def __init__(self, port: str, baudrate: int = SERIAL_BAUDRATE, connection=None):
        self.port = port
        self._serial = connection if connection is not None else open_serial_port(port, baudrate)

    def send(self, command: DeviceCommand) -> None:
        try:
            self._serial.write(encode_frame(command.site, command.intensity))
        except (serial.SerialException, OSError) as e:
            logger.error(f"Erro ao escrever em {self.port}: {e}")
            raise TransportError(f"Falha de escrita em {self.port}: {e}") from e

    def close(self) -> None:
        try:
            self._serial.close()
        except Exception as e:
            logger.warning(f"Erro ao fechar {self.port}: {e}")

    @property
    def name(self) -> str:
        return f"serial:{self.port}"

    @property
    def is_available(self) -> bool:
        return bool(getattr(self._serial, "is_open", True))
