import dataclasses

import pytest

from src.config.constants import MelodyMode, Sequencing
from src.errors import UnmappedNoteError
from src.layout.sites import ActuatorSite
from src.mapping.melody import map_melody_note, rabbit_train
from src.mapping.profile import MappingProfile, RabbitParams
from src.utils.numeric import round_half_up

A, B = ActuatorSite.TIP_INDEX, ActuatorSite.TIP_MIDDLE


def sites(events):
    return [e.site for e in events]


def test_fraction_zero_stays_on_a():
    assert sites(rabbit_train(A, B, 0.0, 0.0, 1.0, 150, RabbitParams())) == [A] * 4


def test_fraction_one_stays_on_b():
    assert sites(rabbit_train(A, B, 1.0, 0.0, 1.0, 150, RabbitParams())) == [B] * 4


def test_half_alternating():
    assert sites(rabbit_train(A, B, 0.5, 0.0, 1.0, 150, RabbitParams())) == [A, B, A, B]


def test_half_saltation():
    params = RabbitParams(sequencing=Sequencing.SALTATION)
    assert sites(rabbit_train(A, B, 0.5, 0.0, 1.0, 150, params)) == [A, A, B, B]


def test_timing_follows_params():
    events = rabbit_train(A, B, 0.5, 2.0, 1.0, 120, RabbitParams(tap_count=3, inter_tap_ms=100, tap_duration_ms=50))
    assert [e.t_on for e in events] == pytest.approx([2.0, 2.1, 2.2])
    assert all(e.duration == pytest.approx(0.05) for e in events)
    assert {e.intensity for e in events} == {120}


def test_short_note_compresses_train():
    events = rabbit_train(A, B, 0.5, 0.0, 0.1, 120, RabbitParams())
    assert len(events) == 4
    assert max(e.t_off for e in events) <= 0.1 + 1e-9


def balanced(slots):
    """Em janelas de mesmo tamanho a contagem de B varia no máximo 1."""
    n = len(slots)
    for width in range(1, n + 1):
        counts = [sum(slots[i : i + width]) for i in range(n - width + 1)]
        if max(counts) - min(counts) > 1:
            return False
    return True


@pytest.mark.parametrize("sequencing", list(Sequencing))
@pytest.mark.parametrize("tap_count", range(1, 9))
@pytest.mark.parametrize("fraction", [0.0, 0.25, 0.5, 0.75, 1.0])
def test_rabbit_properties(rng, fraction, tap_count, sequencing):
    # 13 temporizações por combinação: 80 combinações, 1040 casos
    for _ in range(13):
        inter_tap_ms = float(rng.uniform(20, 120))
        params = RabbitParams(
            tap_count=tap_count,
            inter_tap_ms=inter_tap_ms,
            tap_duration_ms=float(rng.uniform(5, inter_tap_ms)),
            sequencing=sequencing,
        )
        t_on = float(rng.uniform(0, 10))
        duration = float(rng.uniform(0.01, 1.0))
        events = rabbit_train(A, B, fraction, t_on, duration, 200, params, gesture_id=7)
        slots = [e.site == B for e in events]

        assert len(events) == tap_count
        assert sum(slots) == round_half_up(tap_count * fraction)
        assert set(sites(events)) <= {A, B}
        assert all(t_on - 1e-9 <= e.t_on and e.t_off <= t_on + duration + 1e-9 for e in events)
        assert [e.t_on for e in events] == sorted(e.t_on for e in events)
        assert {e.gesture_id for e in events} == {7}
        assert {e.intensity for e in events} == {200}
        if sequencing is Sequencing.SALTATION:
            assert slots == sorted(slots)
        else:
            assert balanced(slots)


def test_alternating_spreads_b_taps_evenly():
    params = RabbitParams(tap_count=6)
    # 2 toques em B num trem de 6: nunca adjacentes
    labels = sites(rabbit_train(A, B, 1 / 3, 0.0, 1.0, 100, params))
    assert labels.count(B) == 2
    assert all(not (x == y == B) for x, y in zip(labels, labels[1:]))


def test_fraction_out_of_range():
    with pytest.raises(ValueError):
        rabbit_train(A, B, 1.5, 0.0, 1.0, 100, RabbitParams())


def test_rabbit_params_validation():
    with pytest.raises(ValueError):
        RabbitParams(tap_count=0)
    with pytest.raises(ValueError):
        RabbitParams(inter_tap_ms=30, tap_duration_ms=40)


@pytest.mark.parametrize("note, site", [(76, ActuatorSite.TIP_RING), (75, ActuatorSite.TIP_MIDDLE)])
def test_finger_script(default_profile, note, site):
    (event,) = map_melody_note(note, 100, 1.0, 0.25, default_profile, gesture_id=3)
    assert event.site is site
    assert (event.t_on, event.duration, event.gesture_id) == (1.0, 0.25, 3)


def test_finger_script_unmapped(default_profile):
    with pytest.raises(UnmappedNoteError) as excinfo:
        map_melody_note(61, 100, 0.0, 0.5, default_profile)
    assert excinfo.value.note == 61


def test_chromatic_anchored_note_is_single_tap():
    profile = MappingProfile(melody_mode=MelodyMode.CHROMATIC_CIRCLE)
    (event,) = map_melody_note(72, 127, 0.0, 0.5, profile)
    assert event.site is ActuatorSite.TIP_THUMB
    assert event.intensity == 170


def test_chromatic_virtual_note_is_rabbit_train():
    profile = MappingProfile(melody_mode=MelodyMode.CHROMATIC_CIRCLE)
    events = map_melody_note(76, 100, 0.0, 0.5, profile)
    # E (4) fica no meio do arco D# (TipIndex) → F (TipMiddle)
    assert sites(events) == [ActuatorSite.TIP_INDEX, ActuatorSite.TIP_MIDDLE] * 2


def test_custom_rabbit_params_flow_through_profile():
    profile = dataclasses.replace(
        MappingProfile(melody_mode=MelodyMode.CHROMATIC_CIRCLE), rabbit=RabbitParams(tap_count=7)
    )
    assert len(map_melody_note(73, 100, 0.0, 1.0, profile)) == 7
