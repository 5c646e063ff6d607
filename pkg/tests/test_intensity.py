import pytest

from src.errors import RangeError
from src.mapping.intensity import bass_pitch_to_frequency, frequency_to_intensity, octave_band_intensity
from src.mapping.profile import MappingProfile
from src.utils.diagnostics import Diagnostics
from src.utils.numeric import round_half_up, round_ratio


@pytest.mark.parametrize("freq, intensity", [(50.0, 85), (100.0, 170), (150.0, 255)])
def test_frequency_anchors(freq, intensity):
    assert frequency_to_intensity(freq) == intensity


def test_frequency_is_monotone():
    values = [frequency_to_intensity(50 + i * 0.25) for i in range(401)]
    assert values == sorted(values)


@pytest.mark.parametrize("freq", [49.9, 150.1, 0.0])
def test_frequency_out_of_range(freq):
    with pytest.raises(RangeError):
        frequency_to_intensity(freq)


@pytest.mark.parametrize("index, freq", [(0, 50.0), (12, 100.0), (24, 150.0)])
def test_bass_law_anchors(default_profile, index, freq):
    assert bass_pitch_to_frequency(index, default_profile) == pytest.approx(freq)


def test_semitone_step(default_profile):
    step = bass_pitch_to_frequency(1, default_profile) - bass_pitch_to_frequency(0, default_profile)
    assert step == pytest.approx(4.1667, abs=1e-4)


def test_bass_law_out_of_span(default_profile):
    with pytest.raises(RangeError):
        bass_pitch_to_frequency(25, default_profile)


def test_middle_octave_band_endpoints(default_profile):
    assert octave_band_intensity(72, 1, default_profile) == 85
    assert octave_band_intensity(72, 127, default_profile) == 170


def test_upper_octave_velocity_64(default_profile):
    assert octave_band_intensity(84, 64, default_profile) == 213


def test_missing_octave_clamps_with_diagnostic(default_profile):
    diagnostics = Diagnostics()
    assert octave_band_intensity(40, 127, default_profile, diagnostics) == 170
    assert octave_band_intensity(110, 1, default_profile, diagnostics) == 170
    assert diagnostics.count("octave_clamped") == 2


def test_velocity_is_monotone_within_band():
    profile = MappingProfile()
    values = [octave_band_intensity(76, v, profile) for v in range(1, 128)]
    assert values == sorted(values)
    assert all(85 <= v <= 170 for v in values)


def test_rounding_helpers():
    assert round_half_up(42.5) == 43
    assert round_half_up(2.4999) == 2
    assert str(round_ratio(15, 16)) == "0.94"
    assert str(round_ratio(1, 8)) == "0.13"
