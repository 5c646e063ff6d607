from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

from ..config.constants import MessageKind, STATUS_KINDS, SYSTEM_COMMON_LENGTHS
from ..utils.diagnostics import Diagnostics
from ..utils.logger import get_logger
from .messages import MidiMessage

logger = get_logger(__name__)


@dataclass
class DecoderState:
    """
    Estado do decodificador de fluxo. Pertence a um único chamador:
    carrega o running status, os bytes de dados pendentes e os contadores.
    """
    running_status: Optional[int] = None
    pending: List[int] = field(default_factory=list)
    # Mensagem de sistema em andamento (sysex ou system common)
    system_status: Optional[int] = None
    diagnostics: Diagnostics = field(default_factory=Diagnostics)

    @property
    def discarded(self) -> int:
        return self.diagnostics.count("stray_data_byte")


def _expected_length(status: int) -> int:
    return STATUS_KINDS[status & 0xF0][1]


def build_message(status: int, data: List[int]) -> MidiMessage:
    kind = STATUS_KINDS[status & 0xF0][0]
    data1 = data[0]
    data2 = data[1] if len(data) > 1 else 0
    # NoteOn com velocidade 0 é NoteOff
    if kind is MessageKind.NOTE_ON and data2 == 0:
        kind = MessageKind.NOTE_OFF
    return MidiMessage(kind=kind, channel=status & 0x0F, data1=data1, data2=data2)


def decode_stream(data: Iterable[int], state: DecoderState) -> Tuple[List[MidiMessage], DecoderState]:
    """
    Decodifica bytes MIDI brutos de forma incremental.

    Suporta running status; bytes de tempo real (0xF8-0xFF) são ignorados
    sem afetar o running status; mensagens incompletas ficam no estado.

    Args:
        data: Bytes recebidos (qualquer fatia do fluxo)
        state: Estado do decodificador, atualizado in place

    Returns:
        Tuple[List[MidiMessage], DecoderState]: Mensagens de canal completas e o estado
    """
    messages: List[MidiMessage] = []

    for byte in data:
        if byte >= 0xF8:
            continue

        if byte & 0x80:
            if byte < 0xF0:
                state.running_status = byte
                state.system_status = None
                state.pending.clear()
            elif byte == 0xF7:
                state.system_status = None
                state.pending.clear()
            else:
                # Sysex e system common cancelam o running status
                state.running_status = None
                state.pending.clear()
                state.system_status = byte
                if SYSTEM_COMMON_LENGTHS.get(byte) == 0:
                    state.system_status = None
            continue

        if state.system_status is not None:
            # Payload de sysex é descartado; system common só é consumido
            if state.system_status != 0xF0:
                state.pending.append(byte)
                if len(state.pending) >= SYSTEM_COMMON_LENGTHS.get(state.system_status, 0):
                    state.pending.clear()
                    state.system_status = None
            continue

        if state.running_status is None:
            state.diagnostics.record("stray_data_byte", f"byte 0x{byte:02X} sem status")
            continue

        state.pending.append(byte)
        if len(state.pending) == _expected_length(state.running_status):
            messages.append(build_message(state.running_status, state.pending))
            state.pending = []

    return messages, state


def decode_all(data: Iterable[int]) -> List[MidiMessage]:
    """Decodifica um fluxo completo com um estado novo."""
    messages, state = decode_stream(data, DecoderState())
    if state.discarded:
        logger.warning(f"{state.discarded} bytes de dados descartados (sem status)")
    return messages
