from typing import Optional

from ..errors import RangeError
from ..utils.diagnostics import Diagnostics
from ..utils.numeric import round_half_up

# Faixa perceptível dos motores ERM
ERM_MIN_HZ = 50.0
ERM_MAX_HZ = 150.0


def frequency_to_intensity(freq_hz: float) -> int:
    """
    Converte frequência do ERM em intensidade de acionamento.

    intensidade = round(1.7 × f): 50 Hz → 85, 100 Hz → 170, 150 Hz → 255.

    Args:
        freq_hz: Frequência entre 50 e 150 Hz

    Returns:
        int: Intensidade 0-255

    Raises:
        RangeError: Frequência fora da faixa perceptível
    """
    if not ERM_MIN_HZ <= freq_hz <= ERM_MAX_HZ:
        raise RangeError("freq_hz", freq_hz, ERM_MIN_HZ, ERM_MAX_HZ)
    return round_half_up(freq_hz * 17 / 10)


def bass_pitch_to_frequency(semitone_index: int, profile) -> float:
    """
    Semitom dentro da janela de graves → frequência (lei linear).

    Com os padrões, cada semitom vale 100/24 ≈ 4.1667 Hz.

    Args:
        semitone_index: 0 a profile.bass_span_semitones
        profile: MappingProfile

    Returns:
        float: Frequência em Hz
    """
    span = profile.bass_span_semitones
    if not 0 <= semitone_index <= span:
        raise RangeError("semitone_index", semitone_index, 0, span)
    base = profile.bass_base_freq_hz
    return base + semitone_index * (profile.bass_top_freq_hz - base) / span


def octave_band_intensity(
    note: int,
    velocity: int,
    profile,
    diagnostics: Optional[Diagnostics] = None,
) -> int:
    """
    Intensidade de uma nota de melodia dentro da banda da sua oitava.

    Lei BandLinear: lo + round((hi - lo) × (v - 1) / 126). Oitavas sem banda
    usam a banda configurada mais próxima e geram diagnóstico.

    Args:
        note: Número da nota
        velocity: Velocidade 1-127 (valores fora são limitados)
        profile: MappingProfile
        diagnostics: Contador opcional

    Returns:
        int: Intensidade dentro da banda
    """
    octave = note // 12
    bands = profile.octave_bands
    if octave not in bands:
        nearest = min(bands, key=lambda k: (abs(k - octave), k))
        if diagnostics is not None:
            diagnostics.record("octave_clamped", f"nota {note}: oitava {octave} → {nearest}")
        octave = nearest

    lo, hi = bands[octave]
    velocity = max(1, min(127, velocity))
    return lo + round_half_up((hi - lo) * (velocity - 1) / 126)
