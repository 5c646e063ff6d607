from typing import List, Optional

from ..config.constants import MelodyMode, Sequencing
from ..errors import UnmappedNoteError
from ..layout.circle import locate_pitch_class
from ..layout.sites import ActuatorSite
from ..utils.diagnostics import Diagnostics
from ..utils.numeric import round_half_up
from .events import HapticEvent
from .intensity import octave_band_intensity
from .profile import RabbitParams


def _b_slots(tap_count: int, b_taps: int, sequencing: Sequencing) -> List[bool]:
    if sequencing is Sequencing.SALTATION:
        return [i >= tap_count - b_taps for i in range(tap_count)]
    # Espalhamento de Bresenham: B o mais uniforme possível no trem
    return [((i + 1) * b_taps) // tap_count > (i * b_taps) // tap_count for i in range(tap_count)]


def rabbit_train(
    anchor_a: ActuatorSite,
    anchor_b: ActuatorSite,
    fraction: float,
    t_on: float,
    duration: float,
    intensity: int,
    params: RabbitParams,
    gesture_id: int = 0,
) -> List[HapticEvent]:
    """
    Trem de toques entre duas pontas para evocar uma posição intermediária
    (ilusão do coelho cutâneo).

    round(n × fraction) toques vão para B e o resto para A. Se o trem não
    cabe na nota, espaçamento e duração dos toques são comprimidos na mesma
    proporção.

    Args:
        anchor_a: Âncora anti-horária
        anchor_b: Âncora horária
        fraction: Posição no arco, 0 (em A) a 1 (em B)
        t_on: Início da nota em segundos
        duration: Duração da nota em segundos
        intensity: Intensidade de todos os toques
        params: RabbitParams
        gesture_id: Id do gesto

    Returns:
        List[HapticEvent]: Exatamente params.tap_count eventos
    """
    if not 0.0 <= fraction <= 1.0:
        raise ValueError(f"fraction deve estar em [0, 1]: {fraction}")

    n = params.tap_count
    b_taps = min(n, max(0, round_half_up(n * fraction)))
    slots = _b_slots(n, b_taps, params.sequencing)

    spacing = params.inter_tap_ms / 1000.0
    tap = params.tap_duration_ms / 1000.0
    length = (n - 1) * spacing + tap
    if length > duration:
        scale = duration / length
        spacing *= scale
        tap *= scale

    end = t_on + duration
    events = []
    for i, is_b in enumerate(slots):
        start = t_on + i * spacing
        events.append(
            HapticEvent(
                t_on=start,
                duration=min(tap, end - start),
                site=anchor_b if is_b else anchor_a,
                intensity=intensity,
                gesture_id=gesture_id,
            )
        )
    return events


def map_melody_note(
    note: int,
    velocity: int,
    t_on: float,
    duration: float,
    profile,
    gesture_id: int = 0,
    diagnostics: Optional[Diagnostics] = None,
) -> List[HapticEvent]:
    """
    Mapeia uma nota da melodia nas pontas dos dedos.

    FingerScript: um evento na ponta do dedo indicado pela tabela, durante
    toda a nota. ChromaticCircle: classe ancorada gera um evento único;
    classe virtual gera um trem do coelho entre as âncoras vizinhas.

    Args:
        note: Número da nota
        velocity: Velocidade
        t_on: Início em segundos
        duration: Duração em segundos
        profile: MappingProfile
        gesture_id: Id do gesto
        diagnostics: Contador opcional

    Returns:
        List[HapticEvent]: Eventos do gesto

    Raises:
        UnmappedNoteError: Nota ausente da tabela no modo FingerScript
    """
    intensity = octave_band_intensity(note, velocity, profile, diagnostics)

    if profile.melody_mode is MelodyMode.FINGER_SCRIPT:
        finger = profile.finger_table.get(note)
        if finger is None:
            raise UnmappedNoteError(note)
        return [HapticEvent(t_on, duration, ActuatorSite.fingertip(finger), intensity, gesture_id)]

    anchor_a, anchor_b, fraction = locate_pitch_class(profile.circle, note % 12)
    if anchor_a == anchor_b and fraction == 0.0:
        return [HapticEvent(t_on, duration, anchor_a, intensity, gesture_id)]
    return rabbit_train(anchor_a, anchor_b, fraction, t_on, duration, intensity, profile.rabbit, gesture_id)
