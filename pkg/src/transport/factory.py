import sys
from typing import Callable, Dict

from ..errors import TransportError
from ..utils.logger import get_logger
from .backends.log import LogBackend
from .backends.null import CaptureBackend, NullBackend
from .backends.serial_port import SerialBackend
from .base import OutputBackend
from .sources import MidiSource, SerialSource, StreamSource

logger = get_logger(__name__)

# Backends que recebem um argumento após ":"
_BACKENDS_WITH_TARGET: Dict[str, Callable[[str], OutputBackend]] = {
    "serial": SerialBackend,
    "log": LogBackend,
}
_BACKENDS_PLAIN: Dict[str, Callable[[], OutputBackend]] = {
    "null": NullBackend,
    "capture": CaptureBackend,
}


def create_backend(spec: str) -> OutputBackend:
    """
    Cria um backend a partir da especificação textual da CLI.

    Args:
        spec: "serial:<porta>", "log:<caminho>", "null" ou "capture"

    Returns:
        OutputBackend: Backend pronto para uso
    """
    kind, _, target = spec.partition(":")
    if kind in _BACKENDS_PLAIN and not target:
        backend = _BACKENDS_PLAIN[kind]()
    elif kind in _BACKENDS_WITH_TARGET and target:
        backend = _BACKENDS_WITH_TARGET[kind](target)
    else:
        raise TransportError(f"Backend inválido: {spec!r}")
    logger.info(f"Usando backend: {backend.name}")
    return backend


def open_source(spec: str) -> MidiSource:
    """Abre a fonte MIDI: "stdin" ou "serial:<porta>"."""
    kind, _, target = spec.partition(":")
    if kind == "stdin" and not target:
        return StreamSource(sys.stdin.buffer)
    if kind == "serial" and target:
        return SerialSource(target)
    raise TransportError(f"Fonte inválida: {spec!r}")
