from enum import Enum, auto


class MessageKind(Enum):
    """Tipos de mensagem de canal MIDI"""
    NOTE_ON = "NoteOn"
    NOTE_OFF = "NoteOff"
    CONTROL_CHANGE = "ControlChange"
    PROGRAM_CHANGE = "ProgramChange"
    PITCH_BEND = "PitchBend"
    CHANNEL_PRESSURE = "ChannelPressure"
    POLY_PRESSURE = "PolyPressure"
    SYSTEM_OTHER = "SystemOther"


class ChannelRole(Enum):
    """Papel musical atribuído a um canal MIDI"""
    MELODY = "melody"
    CHORDS = "chords"
    BASSLINE = "bassline"
    PERCUSSION = "percussion"
    IGNORE = "ignore"


class MelodyMode(Enum):
    """Estratégias de mapeamento da melodia nas pontas dos dedos"""
    FINGER_SCRIPT = "finger_script"
    CHROMATIC_CIRCLE = "chromatic_circle"


class Sequencing(Enum):
    """Ordem dos toques de um trem do coelho cutâneo"""
    ALTERNATING = "alternating"
    SALTATION = "saltation"


class VelocityLaw(Enum):
    """Lei velocidade → intensidade dentro de uma banda de oitava"""
    BAND_LINEAR = "band_linear"


class NoteNameConvention(Enum):
    """Convenção de nomes de notas (só para exibição)"""
    STUDY = auto()     # 72 = C4
    STANDARD = auto()  # 60 = C4


# Status de canal (nibble alto) → tipo e quantidade de bytes de dados
STATUS_KINDS = {
    0x80: (MessageKind.NOTE_OFF, 2),
    0x90: (MessageKind.NOTE_ON, 2),
    0xA0: (MessageKind.POLY_PRESSURE, 2),
    0xB0: (MessageKind.CONTROL_CHANGE, 2),
    0xC0: (MessageKind.PROGRAM_CHANGE, 1),
    0xD0: (MessageKind.CHANNEL_PRESSURE, 1),
    0xE0: (MessageKind.PITCH_BEND, 2),
}

# Tamanho dos dados das mensagens System Common (0xF1-0xF6)
SYSTEM_COMMON_LENGTHS = {0xF1: 1, 0xF2: 2, 0xF3: 1, 0xF4: 0, 0xF5: 0, 0xF6: 0}

# MIDI / SMF
DEFAULT_TEMPO_US = 500000  # 120 BPM
GM_DRUM_CHANNEL = 9
SMF_HEADER_TAG = b"MThd"
SMF_TRACK_TAG = b"MTrk"
META_TEMPO = 0x51
META_END_OF_TRACK = 0x2F

# Bandas de oitava (bloco MIDI bruto note // 12)
MIDDLE_OCTAVE = 6  # notas 72-83 (72 = C4 na convenção do estudo)
UPPER_OCTAVE = 7

# Protocolo serial
FRAME_SYNC = 0xA5
FRAME_LENGTH = 4
CRC8_POLY = 0x07
CRC8_INIT = 0x00

# Arquivo de log de comandos
LOG_HEADER = "#tactile-log v1"

# Códigos de saída da CLI
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
