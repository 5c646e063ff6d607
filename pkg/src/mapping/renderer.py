from collections import defaultdict, deque
from itertools import count
from typing import Deque, Dict, List, Optional, Sequence, Tuple

from ..config.constants import ChannelRole, MessageKind
from ..errors import MappingError
from ..midi.messages import TimedEvent
from ..midi.tempo import TempoMap, ticks_to_seconds
from ..timeline.model import HapticTimeline
from ..utils.diagnostics import Diagnostics
from ..utils.logger import get_logger
from .controllers import ControllerTracker, controller_events
from .events import HapticEvent
from .harmony import map_bassline_note, map_chord_note
from .melody import map_melody_note
from .percussion import map_percussion

logger = get_logger(__name__)


def map_sustained_note(
    role: ChannelRole,
    note: int,
    velocity: int,
    t_on: float,
    duration: float,
    profile,
    gesture_id: int,
    diagnostics: Optional[Diagnostics] = None,
) -> List[HapticEvent]:
    """Despacha uma nota com duração para o mapeador do seu papel."""
    if role is ChannelRole.MELODY:
        return map_melody_note(note, velocity, t_on, duration, profile, gesture_id, diagnostics)
    if role is ChannelRole.CHORDS:
        return [map_chord_note(note, velocity, t_on, duration, profile, gesture_id, diagnostics)]
    if role is ChannelRole.BASSLINE:
        return [map_bassline_note(note, velocity, t_on, duration, profile, gesture_id, diagnostics)]
    return []


def render_timeline(
    events: Sequence[TimedEvent],
    tempo: TempoMap,
    profile,
    diagnostics: Optional[Diagnostics] = None,
) -> HapticTimeline:
    """
    Converte eventos MIDI ordenados numa timeline háptica.

    Pareia NoteOn/NoteOff por (canal, nota) para obter durações e despacha
    para o mapeador do papel do canal. Percussão dispara no NoteOn.
    Resultado determinístico para entradas idênticas.

    Args:
        events: Eventos em ordem global (ver merge_tracks)
        tempo: Mapa de tempo para ticks → segundos
        profile: MappingProfile
        diagnostics: Contador opcional; um novo é criado se omitido

    Returns:
        HapticTimeline: Eventos ordenados por (t_on, atuador, gesture_id)
    """
    diagnostics = diagnostics if diagnostics is not None else Diagnostics()
    tpq = tempo.ticks_per_quarter
    gesture_ids = count()
    controllers = ControllerTracker(dict(profile.controller_map))

    # (canal, nota) → fila de (gesture_id, t_on, velocidade)
    open_notes: Dict[Tuple[int, int], Deque[Tuple[int, float, int]]] = defaultdict(deque)
    unlisted_channels = set()
    output: List[HapticEvent] = []
    end_of_song = 0.0

    def close(channel: int, note: int, opened: Tuple[int, float, int], t_off: float) -> None:
        gesture_id, t_on, velocity = opened
        if t_off <= t_on:
            diagnostics.record("zero_length_note", f"canal {channel} nota {note} em {t_on:.6f}s")
            return
        try:
            output.extend(
                map_sustained_note(
                    profile.role_of(channel), note, velocity, t_on, t_off - t_on, profile, gesture_id, diagnostics
                )
            )
        except MappingError as e:
            diagnostics.record("unmapped_note", str(e))
            logger.warning(f"Nota ignorada: {e}")

    for event in events:
        t = ticks_to_seconds(tempo, tpq, event.tick)
        end_of_song = max(end_of_song, t)
        msg = event.message

        if msg.kind is MessageKind.CONTROL_CHANGE and controllers.handles(msg.data1):
            output.extend(controller_events(controllers.update(msg.channel, msg.data1, msg.data2, t), lambda: next(gesture_ids)))
            continue
        if not (msg.is_note_on or msg.is_note_off):
            continue

        role = profile.role_of(msg.channel)
        if msg.channel not in profile.channel_roles and msg.channel not in unlisted_channels:
            unlisted_channels.add(msg.channel)
            diagnostics.record("unlisted_channel", f"canal {msg.channel} tratado como Ignore")
        if role is ChannelRole.IGNORE:
            continue

        key = (msg.channel, msg.note)
        if msg.is_note_on:
            gesture_id = next(gesture_ids)
            if role is ChannelRole.PERCUSSION:
                output.extend(map_percussion(msg.note, msg.velocity, t, profile, gesture_id, diagnostics))
            else:
                open_notes[key].append((gesture_id, t, msg.velocity))
        elif role is not ChannelRole.PERCUSSION:
            if open_notes[key]:
                close(msg.channel, msg.note, open_notes[key].popleft(), t)
            else:
                diagnostics.record("orphan_note_off", f"canal {msg.channel} nota {msg.note} em {t:.6f}s")

    for (channel, note), pending in sorted(open_notes.items()):
        for opened in pending:
            diagnostics.record("unclosed_note", f"canal {channel} nota {note} fechada no fim")
            close(channel, note, opened, end_of_song)
    output.extend(controller_events(controllers.close_all(end_of_song), lambda: next(gesture_ids)))

    if diagnostics:
        logger.debug(f"Diagnósticos do render: {diagnostics.as_dict()}")
    return HapticTimeline.from_events(output, duration=end_of_song)
