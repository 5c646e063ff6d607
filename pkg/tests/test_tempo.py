import pytest

from src.midi.smf import SmfDocument
from src.midi.tempo import TempoMap, build_tempo_map, ticks_to_seconds


def doc_with(changes, tpq=480):
    return SmfDocument(format=1, ticks_per_quarter=tpq, tracks=[], meta_tempo_changes=list(changes))


def brute_force_seconds(changes, tpq, tick):
    """Acumula tick a tick com o tempo vigente."""
    tempo_at = dict(sorted(changes))
    tempo = tempo_at.get(0, 500000)
    seconds = 0.0
    for t in range(tick):
        tempo = tempo_at.get(t, tempo)
        seconds += tempo / (tpq * 1e6)
    return seconds


def test_default_tempo_when_no_events():
    assert build_tempo_map(doc_with([])).entries == ((0, 500000),)


def test_two_entries_in_order():
    tempo = build_tempo_map(doc_with([(960, 300000), (0, 600000)]))
    assert tempo.entries == ((0, 600000), (960, 300000))


def test_same_tick_last_wins():
    tempo = build_tempo_map(doc_with([(0, 500000), (480, 400000), (480, 250000)]))
    assert tempo.entries == ((0, 500000), (480, 250000))


def test_tick_zero():
    assert ticks_to_seconds(TempoMap(), 480, 0) == 0.0


def test_one_quarter_at_default_tempo():
    assert ticks_to_seconds(TempoMap(), 480, 480) == pytest.approx(0.5)


def test_mid_song_change_matches_brute_force():
    changes = [(0, 600000), (960, 300000), (1500, 450000)]
    tempo = build_tempo_map(doc_with(changes))
    for tick in (0, 100, 960, 1200, 1500, 2400):
        expected = brute_force_seconds(changes, 480, tick)
        assert ticks_to_seconds(tempo, 480, tick) == pytest.approx(expected)
        # caminho genérico (resolução diferente da do mapa)
        assert ticks_to_seconds(tempo, 240, tick) == pytest.approx(brute_force_seconds(changes, 240, tick))


def test_monotone(rng):
    tempo = build_tempo_map(doc_with([(0, 700000), (333, 200000), (1000, 900000)]))
    ticks = sorted(int(t) for t in rng.integers(0, 5000, size=300))
    seconds = [ticks_to_seconds(tempo, 480, t) for t in ticks]
    assert all(b >= a for a, b in zip(seconds, seconds[1:]))


def test_invalid_maps():
    with pytest.raises(ValueError):
        TempoMap(entries=((10, 500000),))
    with pytest.raises(ValueError):
        TempoMap(entries=((0, 500000), (0, 400000)))
