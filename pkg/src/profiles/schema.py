from typing import Annotated, Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, field_validator

from ..config.constants import MIDDLE_OCTAVE, UPPER_OCTAVE, ChannelRole, MelodyMode, Sequencing, VelocityLaw
from ..layout.sites import ActuatorSite

BAND_ALIASES = {"middle": MIDDLE_OCTAVE, "upper": UPPER_OCTAVE}


def _site(value: Any) -> ActuatorSite:
    if isinstance(value, ActuatorSite):
        return value
    if not isinstance(value, str):
        raise ValueError(f"atuador deve ser um nome, não {value!r}")
    return ActuatorSite.from_label(value)


def _band_key(value: Any) -> Any:
    return BAND_ALIASES.get(value, value) if isinstance(value, str) else value


def _percussion_entry(value: Any) -> Any:
    # "Site" é atalho para ["Site", 1.0]
    return (value, 1.0) if isinstance(value, str) else value


Site = Annotated[ActuatorSite, BeforeValidator(_site)]
MidiNote = Annotated[int, Field(ge=0, le=127)]
PitchClass = Annotated[int, Field(ge=0, le=11)]
Octave = Annotated[int, BeforeValidator(_band_key), Field(ge=0, le=10)]
Channel = Annotated[int, Field(ge=0, le=15)]
Controller = Annotated[int, Field(ge=0, le=119)]
Level = Annotated[int, Field(strict=True, ge=0, le=255)]
Finger = Annotated[int, Field(strict=True, ge=1, le=5)]
PositiveFloat = Annotated[float, Field(gt=0)]
PercussionEntry = Annotated[Tuple[Site, PositiveFloat], BeforeValidator(_percussion_entry)]


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class LayoutSection(_Section):
    circle_anchors: Optional[Dict[PitchClass, Site]] = None


class MelodySection(_Section):
    mode: Optional[MelodyMode] = None
    finger_table: Optional[Dict[MidiNote, Finger]] = None
    octave_bands: Optional[Dict[Octave, Tuple[Level, Level]]] = None
    velocity_law: Optional[VelocityLaw] = None

    @field_validator("octave_bands")
    @classmethod
    def _check_bands(cls, bands):
        if bands is None:
            return bands
        if not bands:
            raise ValueError("é preciso ao menos uma banda")
        for octave, (lo, hi) in bands.items():
            if lo >= hi:
                raise ValueError(f"banda {octave}: min deve ser menor que max")
        return bands


class BassSection(_Section):
    base_note: Optional[Annotated[int, Field(strict=True, ge=0, le=127)]] = None
    span_semitones: Optional[Annotated[int, Field(strict=True, ge=1, le=127)]] = None
    base_freq_hz: Optional[PositiveFloat] = None
    top_freq_hz: Optional[PositiveFloat] = None
    chord_sites: Optional[Tuple[Site, Site, Site]] = None
    bass_sites: Optional[Tuple[Site, Site]] = None


class PercussionSection(_Section):
    duration_ms: Optional[PositiveFloat] = None
    table: Optional[Dict[MidiNote, Annotated[List[PercussionEntry], Field(min_length=1)]]] = None


class RabbitSection(_Section):
    tap_count: Optional[Annotated[int, Field(strict=True, ge=1, le=64)]] = None
    inter_tap_ms: Optional[PositiveFloat] = None
    tap_duration_ms: Optional[PositiveFloat] = None
    sequencing: Optional[Sequencing] = None


class ProfileDocument(_Section):
    """Documento JSON de perfil; toda seção é opcional"""
    name: Optional[str] = None
    description: Optional[str] = None
    layout: LayoutSection = Field(default_factory=LayoutSection)
    melody: MelodySection = Field(default_factory=MelodySection)
    bass: BassSection = Field(default_factory=BassSection)
    percussion: PercussionSection = Field(default_factory=PercussionSection)
    rabbit: Optional[RabbitSection] = None
    channels: Dict[Channel, ChannelRole] = Field(default_factory=dict)
    controllers: Dict[Controller, Site] = Field(default_factory=dict)
