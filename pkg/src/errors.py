from typing import Any, Optional


class TactileError(Exception):
    """Erro base do sistema"""


class MidiParseError(TactileError):
    """Arquivo SMF inválido; informa o offset do byte problemático"""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class MappingError(TactileError):
    """Erro no mapeamento música → háptico"""


class UnmappedNoteError(MappingError):
    """Nota ausente da tabela de dedilhado"""

    def __init__(self, note: int):
        super().__init__(f"Nota {note} não está na tabela de dedilhado")
        self.note = note


class RangeError(MappingError):
    """Valor fora da faixa permitida"""

    def __init__(self, what: str, value: Any, lo: Any, hi: Any):
        super().__init__(f"{what}={value} fora da faixa [{lo}, {hi}]")
        self.value = value
        self.lo = lo
        self.hi = hi


class ProfileError(TactileError):
    """Documento de perfil inválido; informa o caminho do campo"""

    def __init__(self, path: str, constraint: str):
        super().__init__(f"{path}: {constraint}")
        self.path = path
        self.constraint = constraint


class TransportError(TactileError):
    """Falha de backend de saída ou de fonte MIDI"""


class PlaybackError(TactileError):
    """Reprodução abortada; carrega o relatório parcial"""

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report


class TrialDataError(TactileError):
    """Arquivo de ensaios malformado ou vazio"""
