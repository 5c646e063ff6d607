import threading
from abc import ABC, abstractmethod
from queue import Queue
from typing import BinaryIO, Iterator, Optional

import serial

from ..config.settings import SOURCE_CHUNK_SIZE, SOURCE_QUEUE_SIZE
from ..utils.diagnostics import Diagnostics
from ..utils.logger import get_logger
from .backends.serial_port import open_serial_port

logger = get_logger(__name__)


class MidiSource(ABC):
    """Fonte de bytes MIDI crus (serial ou entrada padrão)"""

    @abstractmethod
    def read_chunk(self) -> Optional[bytes]:
        """
        Lê o próximo pedaço disponível.

        Returns:
            Optional[bytes]: Bytes lidos (podem ser vazios em timeout) ou
                None no fim do fluxo
        """
        pass

    def close(self) -> None:
        pass

    @property
    @abstractmethod
    def name(self) -> str:
        pass


class StreamSource(MidiSource):
    """Fonte sobre um arquivo binário (sys.stdin.buffer, BytesIO...)"""

    def __init__(self, stream: BinaryIO, chunk_size: int = SOURCE_CHUNK_SIZE, label: str = "stdin"):
        self._stream = stream
        self._chunk_size = chunk_size
        self._label = label

    def read_chunk(self) -> Optional[bytes]:
        read = getattr(self._stream, "read1", self._stream.read)
        chunk = read(self._chunk_size)
        return chunk if chunk else None

    @property
    def name(self) -> str:
        return self._label


class SerialSource(MidiSource):
    """Fonte numa porta serial; desconexão vira fim de fluxo"""

    def __init__(self, port: str, connection=None, diagnostics: Optional[Diagnostics] = None):
        self.port = port
        self._serial = connection if connection is not None else open_serial_port(port)
        self.diagnostics = diagnostics if diagnostics is not None else Diagnostics()

    def read_chunk(self) -> Optional[bytes]:
        try:
            waiting = getattr(self._serial, "in_waiting", 0) or 1
            return self._serial.read(waiting)
        except (serial.SerialException, OSError) as e:
            self.diagnostics.record("source_disconnected", str(e))
            logger.warning(f"Porta {self.port} desconectada: {e}")
            return None

    def close(self) -> None:
        self._serial.close()

    @property
    def name(self) -> str:
        return f"serial:{self.port}"


def read_midi_source(source: MidiSource, cancel: Optional[threading.Event] = None) -> Iterator[bytes]:
    """
    Entrega os bytes da fonte em ordem de chegada, sem perdas, até o fim do
    fluxo ou o cancelamento.

    Args:
        source: Fonte aberta
        cancel: Evento opcional de cancelamento

    Yields:
        bytes: Pedaços não vazios, prontos para decode_stream
    """
    while cancel is None or not cancel.is_set():
        chunk = source.read_chunk()
        if chunk is None:
            logger.debug(f"Fim do fluxo em {source.name}")
            return
        if chunk:
            yield chunk


class SourceReader:
    """
    Leitor em thread própria que entrega pedaços por uma fila limitada:
    quando a fila enche, o leitor bloqueia (back-pressure).
    """

    def __init__(self, source: MidiSource, queue_size: int = SOURCE_QUEUE_SIZE):
        self.source = source
        self.queue: Queue = Queue(maxsize=queue_size)
        self.cancel = threading.Event()
        self._thread: Optional[threading.Thread] = None

    def _worker(self) -> None:
        try:
            for chunk in read_midi_source(self.source, self.cancel):
                self.queue.put(chunk)
        except Exception as e:
            logger.error(f"Erro na leitura de {self.source.name}: {e}")
        finally:
            self.queue.put(None)

    def start(self) -> "SourceReader":
        """Inicia a thread de leitura"""
        self._thread = threading.Thread(target=self._worker, name=f"source-{self.source.name}", daemon=True)
        self._thread.start()
        return self

    def stop(self) -> None:
        """Sinaliza o cancelamento e aguarda a thread"""
        self.cancel.set()
        if self._thread is not None:
            self._thread.join(timeout=1.0)
