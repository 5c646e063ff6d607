from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

from ..config.constants import (
    GM_DRUM_CHANNEL,
    MIDDLE_OCTAVE,
    UPPER_OCTAVE,
    ChannelRole,
    MelodyMode,
    Sequencing,
    VelocityLaw,
)
from ..layout.circle import ChromaticCircle
from ..layout.sites import ActuatorSite, SiteGroup, site_group
from .percussion import DEFAULT_PERCUSSION_TABLE, PercussionTable

# Dedilhado da mão direita na abertura de Für Elise (E-D#-E-D#-E, B-D-C-A)
FUR_ELISE_FINGERING: Dict[int, int] = {
    76: 4,  # E5
    75: 3,  # D#5
    71: 1,  # B4
    74: 3,  # D5
    72: 2,  # C5
    69: 1,  # A4
    60: 1,  # C4
    64: 2,  # E4
    68: 3,  # G#4
}

DEFAULT_OCTAVE_BANDS: Dict[int, Tuple[int, int]] = {
    MIDDLE_OCTAVE: (85, 170),   # 50-100 Hz
    UPPER_OCTAVE: (170, 255),   # 100-150 Hz
}

DEFAULT_CHANNEL_ROLES: Dict[int, ChannelRole] = {
    0: ChannelRole.MELODY,
    1: ChannelRole.CHORDS,
    2: ChannelRole.BASSLINE,
    GM_DRUM_CHANNEL: ChannelRole.PERCUSSION,
}


@dataclass(frozen=True)
class RabbitParams:
    """Parâmetros do trem de toques do coelho cutâneo"""
    tap_count: int = 4
    inter_tap_ms: float = 60.0
    tap_duration_ms: float = 40.0
    sequencing: Sequencing = Sequencing.ALTERNATING

    def __post_init__(self):
        if self.tap_count < 1:
            raise ValueError("tap_count deve ser >= 1")
        if self.inter_tap_ms <= 0 or self.tap_duration_ms <= 0:
            raise ValueError("Tempos do coelho devem ser positivos")
        if self.tap_duration_ms > self.inter_tap_ms:
            raise ValueError("tap_duration_ms não pode exceder inter_tap_ms")


@dataclass(frozen=True)
class MappingProfile:
    """Toda a política de mapeamento música → háptico"""
    melody_mode: MelodyMode = MelodyMode.FINGER_SCRIPT
    finger_table: Mapping[int, int] = field(default_factory=lambda: dict(FUR_ELISE_FINGERING))
    octave_bands: Mapping[int, Tuple[int, int]] = field(default_factory=lambda: dict(DEFAULT_OCTAVE_BANDS))
    velocity_law: VelocityLaw = VelocityLaw.BAND_LINEAR
    circle: ChromaticCircle = field(default_factory=ChromaticCircle)
    rabbit: RabbitParams = field(default_factory=RabbitParams)

    # Janela de graves compartilhada por acordes e baixo
    bass_base_note: int = 45  # A2
    bass_span_semitones: int = 24
    bass_base_freq_hz: float = 50.0
    bass_top_freq_hz: float = 150.0
    # MCP do grave para o agudo, e (metade inferior, metade superior) do baixo
    chord_sites: Tuple[ActuatorSite, ActuatorSite, ActuatorSite] = (
        ActuatorSite.MCP_ULNAR,
        ActuatorSite.MCP_CENTER,
        ActuatorSite.MCP_RADIAL,
    )
    bass_sites: Tuple[ActuatorSite, ActuatorSite] = (ActuatorSite.HYPOTHENAR, ActuatorSite.THENAR)

    percussion_table: PercussionTable = field(default_factory=lambda: dict(DEFAULT_PERCUSSION_TABLE))
    percussion_duration_s: float = 0.05

    channel_roles: Mapping[int, ChannelRole] = field(default_factory=lambda: dict(DEFAULT_CHANNEL_ROLES))
    # Control Change → atuador (nível definido diretamente pelo valor do CC)
    controller_map: Mapping[int, ActuatorSite] = field(default_factory=dict)

    def __post_init__(self):
        for octave, (lo, hi) in self.octave_bands.items():
            if not (0 <= lo < hi <= 255):
                raise ValueError(f"Banda da oitava {octave} inválida: ({lo}, {hi})")
        if not self.octave_bands:
            raise ValueError("É preciso ao menos uma banda de oitava")
        if self.bass_base_freq_hz >= self.bass_top_freq_hz:
            raise ValueError("bass_base_freq_hz deve ser menor que bass_top_freq_hz")
        if self.bass_span_semitones < 1:
            raise ValueError("bass_span_semitones deve ser >= 1")
        for note, finger in self.finger_table.items():
            if not 1 <= finger <= 5:
                raise ValueError(f"Dedo inválido para a nota {note}: {finger}")
        if self.percussion_duration_s <= 0:
            raise ValueError("percussion_duration_s deve ser positivo")
        if any(site_group(s) is not SiteGroup.MIDDLE for s in self.chord_sites):
            raise ValueError("chord_sites devem ser atuadores MCP")
        if any(site_group(s) is not SiteGroup.BASS for s in self.bass_sites):
            raise ValueError("bass_sites devem ser thenar/hypothenar")

    def role_of(self, channel: int) -> ChannelRole:
        return self.channel_roles.get(channel, ChannelRole.IGNORE)

    @property
    def bass_top_note(self) -> int:
        return self.bass_base_note + self.bass_span_semitones
