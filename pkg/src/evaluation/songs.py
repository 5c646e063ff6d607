"""
Trechos usados no estudo de reconhecimento, em posição de Dó (C4-G4 com a
mão direita parada, um dedo por nota).

As três músicas são transcrições aproximadas feitas para este projeto a
partir das descrições do livro de método (melodias de cinco notas em
semínimas e mínimas); não são as partituras originais. A frase de abertura
de Für Elise segue o dedilhado padrão.
"""
from typing import Dict, List, Optional, Sequence, Tuple

from ..config.constants import MessageKind
from ..mapping.renderer import render_timeline
from ..midi.messages import MidiMessage, TimedEvent
from ..midi.tempo import TempoMap
from ..timeline.model import HapticTimeline
from ..utils.diagnostics import Diagnostics

# (nota, início em semínimas, duração em semínimas)
NoteSpec = Tuple[int, float, float]

C4, D4, E4, F4, G4 = 60, 62, 64, 65, 67

MUSIC_LAND: List[NoteSpec] = [
    (C4, 0, 1), (D4, 1, 1), (E4, 2, 1), (F4, 3, 1),
    (G4, 4, 2), (G4, 6, 2),
    (F4, 8, 1), (E4, 9, 1), (D4, 10, 1), (C4, 11, 1),
    (E4, 12, 2), (C4, 14, 2),
]

PATTERNS: List[NoteSpec] = [
    (C4, 0, 1), (E4, 1, 1), (G4, 2, 1), (E4, 3, 1),
    (C4, 4, 1), (E4, 5, 1), (G4, 6, 2),
    (D4, 8, 1), (F4, 9, 1), (D4, 10, 1), (F4, 11, 1),
    (E4, 12, 2), (C4, 14, 2),
]

TRAFFIC_COP: List[NoteSpec] = [
    (G4, 0, 1), (G4, 1, 1), (G4, 2, 2),
    (E4, 4, 1), (E4, 5, 1), (E4, 6, 2),
    (D4, 8, 1), (E4, 9, 1), (F4, 10, 1), (D4, 11, 1),
    (C4, 12, 4),
]

STUDY_SONGS: Dict[str, List[NoteSpec]] = {
    "song1": MUSIC_LAND,
    "song2": PATTERNS,
    "song3": TRAFFIC_COP,
}

SONG_TITLES = {"song1": "Music Land", "song2": "Patterns", "song3": "Traffic Cop"}

# E5 D#5 E5 D#5 E5 B4 D5 C5 A4 (colcheias, lá final em semínima)
FUR_ELISE_OPENING: List[NoteSpec] = [
    (76, 0.0, 0.5), (75, 0.5, 0.5), (76, 1.0, 0.5), (75, 1.5, 0.5), (76, 2.0, 0.5),
    (71, 2.5, 0.5), (74, 3.0, 0.5), (72, 3.5, 0.5), (69, 4.0, 1.0),
]


def song_events(
    notes: Sequence[NoteSpec],
    ticks_per_quarter: int = 480,
    channel: int = 0,
    velocity: int = 100,
) -> List[TimedEvent]:
    """
    Converte uma lista de notas em eventos NoteOn/NoteOff ordenados.

    No mesmo tick, NoteOff vem antes de NoteOn.

    Args:
        notes: (nota, início, duração) em semínimas
        ticks_per_quarter: Resolução
        channel: Canal MIDI
        velocity: Velocidade dos NoteOn

    Returns:
        List[TimedEvent]: Eventos em ordem global
    """
    tagged = []
    for note, start, length in notes:
        on_tick = round(start * ticks_per_quarter)
        off_tick = round((start + length) * ticks_per_quarter)
        tagged.append((on_tick, 1, TimedEvent(on_tick, MidiMessage(MessageKind.NOTE_ON, channel, note, velocity))))
        tagged.append((off_tick, 0, TimedEvent(off_tick, MidiMessage(MessageKind.NOTE_OFF, channel, note, 0))))
    tagged.sort(key=lambda item: (item[0], item[1]))
    return [event for _, _, event in tagged]


def render_song(notes: Sequence[NoteSpec], profile, ticks_per_quarter: int = 480, diagnostics: Optional[Diagnostics] = None) -> HapticTimeline:
    """Renderiza uma lista de notas a 120 BPM com o perfil dado."""
    tempo = TempoMap(ticks_per_quarter=ticks_per_quarter)
    return render_timeline(song_events(notes, ticks_per_quarter), tempo, profile, diagnostics)
