from dataclasses import dataclass

from ..config.constants import MessageKind, NoteNameConvention

NOTE_NAMES = ["C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B"]


@dataclass(frozen=True)
class MidiMessage:
    """Mensagem de canal decodificada (status + até dois bytes de dados)"""
    kind: MessageKind
    channel: int = 0
    data1: int = 0
    data2: int = 0

    def __post_init__(self):
        if not 0 <= self.channel <= 15:
            raise ValueError(f"Canal inválido: {self.channel}")
        if not (0 <= self.data1 < 128 and 0 <= self.data2 < 128):
            raise ValueError(f"Bytes de dados devem ser < 128: {self.data1}, {self.data2}")

    @property
    def is_note_on(self) -> bool:
        return self.kind is MessageKind.NOTE_ON

    @property
    def is_note_off(self) -> bool:
        return self.kind is MessageKind.NOTE_OFF

    @property
    def note(self) -> int:
        return self.data1

    @property
    def velocity(self) -> int:
        return self.data2


@dataclass(frozen=True)
class TimedEvent:
    """Mensagem com tempo absoluto em ticks dentro de uma trilha"""
    tick: int
    message: MidiMessage
    track_index: int = 0


def note_name(note: int, convention: NoteNameConvention = NoteNameConvention.STUDY) -> str:
    """
    Nome legível de uma nota MIDI.

    Args:
        note: Número da nota (0-127)
        convention: STUDY (72 = C4, convenção do estudo) ou STANDARD (60 = C4)

    Returns:
        str: Nome como "C4" ou "D#5"
    """
    offset = 2 if convention is NoteNameConvention.STUDY else 1
    return f"{NOTE_NAMES[note % 12]}{note // 12 - offset}"
