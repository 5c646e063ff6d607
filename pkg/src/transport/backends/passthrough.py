from ...errors import TransportError
from ...utils.logger import get_logger
from .serial_port import open_serial_port

logger = get_logger(__name__)


class RawMidiForwarder:
    """
    Reencaminha os bytes MIDI recebidos sem alteração para uma porta serial,
    compatível com firmwares que leem MIDI cru (ponte estilo Hairless).
    """

    def __init__(self, port: str, connection=None):
        self.port = port
        self._serial = connection if connection is not None else open_serial_port(port)

    def forward(self, chunk: bytes) -> None:
        try:
            self._serial.write(chunk)
        except Exception as e:
            logger.error(f"Erro no passthrough para {self.port}: {e}")
            raise TransportError(f"Falha no passthrough: {e}") from e

    def close(self) -> None:
        self._serial.close()
