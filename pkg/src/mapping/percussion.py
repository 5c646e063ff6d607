"""Roteamento de percussão General MIDI para grupos de atuadores.

Sons agudos e secos (caixa, chimbal, pratos) vão para as pontas dos dedos;
bumbo para thenar/hypothenar; tons para a linha MCP. Caixa e bumbo também
acionam o MCP central para um impacto mais forte.
"""
from typing import Dict, List, Optional, Tuple

from ..layout.sites import ActuatorSite
from ..utils.diagnostics import Diagnostics
from ..utils.numeric import round_half_up
from .events import HapticEvent

# Notas GM (canal 10, índice 9)
KICK_2 = 35
KICK_1 = 36
SNARE_1 = 38
SNARE_2 = 40
LOW_FLOOR_TOM = 41
HI_HAT_CLOSED = 42
HIGH_FLOOR_TOM = 43
HI_HAT_PEDAL = 44
LOW_TOM = 45
HI_HAT_OPEN = 46
LOW_MID_TOM = 47
HIGH_MID_TOM = 48
CRASH_1 = 49
HIGH_TOM = 50
RIDE_1 = 51
CRASH_2 = 57
RIDE_2 = 59

PercussionTable = Dict[int, Tuple[Tuple[ActuatorSite, float], ...]]

_TIPS = tuple((ActuatorSite(i), 1.0) for i in range(5))
_KICK = ((ActuatorSite.THENAR, 1.0), (ActuatorSite.HYPOTHENAR, 1.0), (ActuatorSite.MCP_CENTER, 1.0))
_SNARE = ((ActuatorSite.TIP_INDEX, 1.0), (ActuatorSite.TIP_MIDDLE, 1.0), (ActuatorSite.MCP_CENTER, 1.0))

DEFAULT_PERCUSSION_TABLE: PercussionTable = {
    KICK_2: _KICK,
    KICK_1: _KICK,
    SNARE_1: _SNARE,
    SNARE_2: _SNARE,
    HI_HAT_CLOSED: ((ActuatorSite.TIP_RING, 1.0),),
    HI_HAT_PEDAL: ((ActuatorSite.TIP_LITTLE, 1.0),),
    HI_HAT_OPEN: ((ActuatorSite.TIP_LITTLE, 1.0),),
    CRASH_1: _TIPS,
    CRASH_2: _TIPS,
    RIDE_1: ((ActuatorSite.TIP_LITTLE, 1.0),),
    RIDE_2: ((ActuatorSite.TIP_LITTLE, 1.0),),
    LOW_FLOOR_TOM: ((ActuatorSite.MCP_ULNAR, 1.0),),
    HIGH_FLOOR_TOM: ((ActuatorSite.MCP_ULNAR, 1.0),),
    LOW_TOM: ((ActuatorSite.MCP_CENTER, 1.0),),
    LOW_MID_TOM: ((ActuatorSite.MCP_CENTER, 1.0),),
    HIGH_MID_TOM: ((ActuatorSite.MCP_RADIAL, 1.0),),
    HIGH_TOM: ((ActuatorSite.MCP_RADIAL, 1.0),),
}


def velocity_to_intensity(velocity: int) -> int:
    """Velocidade 0-127 → intensidade 0-255 (half-up)"""
    return round_half_up(velocity * 255 / 127)


def map_percussion(
    gm_note: int,
    velocity: int,
    t_on: float,
    profile,
    gesture_id: int = 0,
    diagnostics: Optional[Diagnostics] = None,
) -> List[HapticEvent]:
    """
    Gera um pulso de duração fixa em cada atuador mapeado para a peça.

    Args:
        gm_note: Nota GM da peça de bateria
        velocity: Velocidade 1-127
        t_on: Início em segundos
        profile: MappingProfile com a tabela de percussão
        gesture_id: Id do gesto
        diagnostics: Contador opcional para notas sem mapa

    Returns:
        List[HapticEvent]: Um evento por atuador (vazio se a nota não tem mapa)
    """
    entries = profile.percussion_table.get(gm_note)
    if not entries:
        if diagnostics is not None:
            diagnostics.record("unmapped_percussion", f"nota GM {gm_note}")
        return []

    base = velocity_to_intensity(velocity)
    return [
        HapticEvent(
            t_on=t_on,
            duration=profile.percussion_duration_s,
            site=site,
            intensity=min(255, round_half_up(base * scale)),
            gesture_id=gesture_id,
        )
        for site, scale in entries
    ]
