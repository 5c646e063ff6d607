import io
from pathlib import Path
from typing import List, Optional, Sequence

import mido
import numpy as np
import pytest

from src.evaluation.songs import FUR_ELISE_OPENING, NoteSpec, song_events
from src.mapping.profile import MappingProfile

FIXTURES_DIR = Path(__file__).parent / "fixtures"


def notes_track(
    notes: Sequence[NoteSpec],
    channel: int = 0,
    velocity: int = 100,
    ticks_per_beat: int = 480,
    tempo: Optional[int] = None,
) -> List[mido.Message]:
    """Lista de notas → mensagens mido com tempos delta."""
    messages: List = []
    if tempo is not None:
        messages.append(mido.MetaMessage("set_tempo", tempo=tempo, time=0))
    last = 0
    for event in song_events(notes, ticks_per_beat, channel, velocity):
        msg = event.message
        kind = "note_on" if msg.is_note_on else "note_off"
        messages.append(
            mido.Message(kind, channel=msg.channel, note=msg.note, velocity=msg.velocity, time=event.tick - last)
        )
        last = event.tick
    return messages


def smf_bytes(tracks: Sequence[Sequence], ticks_per_beat: int = 480, midi_type: int = 1) -> bytes:
    """Serializa trilhas mido num SMF em memória."""
    mid = mido.MidiFile(type=midi_type, ticks_per_beat=ticks_per_beat)
    for messages in tracks:
        track = mido.MidiTrack()
        track.extend(messages)
        mid.tracks.append(track)
    buffer = io.BytesIO()
    mid.save(file=buffer)
    return buffer.getvalue()


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


@pytest.fixture
def default_profile():
    return MappingProfile()


@pytest.fixture
def write_midi(tmp_path):
    """Escreve um .mid a partir de listas de notas (uma trilha por lista)."""

    def _write(name: str, *note_lists: Sequence[NoteSpec], channels: Sequence[int] = (), velocity: int = 100) -> Path:
        tracks = [
            notes_track(notes, channel=channels[i] if i < len(channels) else 0, velocity=velocity)
            for i, notes in enumerate(note_lists)
        ]
        path = tmp_path / name
        path.write_bytes(smf_bytes(tracks, midi_type=0 if len(tracks) == 1 else 1))
        return path

    return _write


@pytest.fixture
def fur_elise_midi(write_midi):
    return write_midi("fur_elise.mid", FUR_ELISE_OPENING)


@pytest.fixture
def fur_elise_golden_log():
    return (FIXTURES_DIR / "fur_elise_opening.log").read_text(encoding="utf-8")
