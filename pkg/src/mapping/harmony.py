"""Camadas de acordes (linha MCP) e baixo (thenar/hypothenar).

Ambas usam a mesma janela de 24 semitons: a altura vira frequência do ERM
e a frequência vira intensidade.
"""
from typing import Optional

from ..utils.diagnostics import Diagnostics
from .events import HapticEvent
from .intensity import bass_pitch_to_frequency, frequency_to_intensity


def window_index(note: int, profile, diagnostics: Optional[Diagnostics] = None) -> int:
    """Índice do semitom na janela de graves, limitado às bordas."""
    index = note - profile.bass_base_note
    span = profile.bass_span_semitones
    if not 0 <= index <= span:
        clamped = min(span, max(0, index))
        if diagnostics is not None:
            diagnostics.record("window_clamped", f"nota {note} fora da janela, índice {index} → {clamped}")
        index = clamped
    return index


def _window_intensity(index: int, profile) -> int:
    return frequency_to_intensity(bass_pitch_to_frequency(index, profile))


def map_chord_note(
    note: int,
    velocity: int,
    t_on: float,
    duration: float,
    profile,
    gesture_id: int = 0,
    diagnostics: Optional[Diagnostics] = None,
) -> HapticEvent:
    """
    Nota de acorde → um atuador MCP escolhido pelo terço da janela.

    Args:
        note: Número da nota
        velocity: Velocidade (não altera a intensidade; a altura decide)
        t_on: Início em segundos
        duration: Duração em segundos
        profile: MappingProfile
        gesture_id: Id do gesto
        diagnostics: Contador opcional

    Returns:
        HapticEvent: Evento no MCP (grave → McpUlnar, agudo → McpRadial)
    """
    index = window_index(note, profile, diagnostics)
    tertile = min(2, index * 3 // (profile.bass_span_semitones + 1))
    site = profile.chord_sites[tertile]
    return HapticEvent(t_on, duration, site, _window_intensity(index, profile), gesture_id)


def map_bassline_note(
    note: int,
    velocity: int,
    t_on: float,
    duration: float,
    profile,
    gesture_id: int = 0,
    diagnostics: Optional[Diagnostics] = None,
) -> HapticEvent:
    """
    Nota do baixo → Hypothenar (metade inferior) ou Thenar (metade superior,
    fechada no ponto médio).
    """
    index = window_index(note, profile, diagnostics)
    lower, upper = profile.bass_sites
    site = upper if 2 * index >= profile.bass_span_semitones else lower
    return HapticEvent(t_on, duration, site, _window_intensity(index, profile), gesture_id)
