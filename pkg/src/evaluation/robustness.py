from typing import Dict, Mapping, Optional, Sequence

import numpy as np

from ..mapping.events import HapticEvent
from ..timeline.model import HapticTimeline
from ..utils.logger import get_logger
from .fingerprint import fingerprint, identify

logger = get_logger(__name__)


def jitter_timeline(timeline: HapticTimeline, sigma_s: float, rng: np.random.Generator) -> HapticTimeline:
    """
    Desloca cada gesto por um ruído gaussiano N(0, sigma) no ataque.

    Os eventos de um mesmo gesto andam juntos; ataques negativos são
    levados a 0.
    """
    gesture_ids = timeline.gesture_ids
    offsets = dict(zip(gesture_ids, rng.normal(0.0, sigma_s, size=len(gesture_ids)))) if sigma_s > 0 else {}
    shifted = [
        HapticEvent(
            t_on=max(0.0, e.t_on + float(offsets.get(e.gesture_id, 0.0))),
            duration=e.duration,
            site=e.site,
            intensity=e.intensity,
            gesture_id=e.gesture_id,
        )
        for e in timeline.events
    ]
    return HapticTimeline.from_events(shifted)


def jitter_accuracy(
    references: Mapping[str, HapticTimeline],
    sigma_s: float,
    trials: int = 100,
    seed: Optional[int] = 0,
) -> Dict[str, float]:
    """
    Taxa de auto-identificação sob jitter de ataque.

    Args:
        references: Rótulo → timeline de referência (também o conjunto de candidatos)
        sigma_s: Desvio padrão do jitter em segundos
        trials: Cópias ruidosas por rótulo
        seed: Semente do gerador (numpy default_rng)

    Returns:
        Dict[str, float]: Rótulo → fração de cópias reconhecidas corretamente
    """
    rng = np.random.default_rng(seed)
    candidates = {label: fingerprint(t) for label, t in references.items()}
    accuracy = {}
    for label, timeline in references.items():
        hits = sum(
            identify(fingerprint(jitter_timeline(timeline, sigma_s, rng)), candidates)[0] == label
            for _ in range(trials)
        )
        accuracy[label] = hits / trials
    logger.debug(f"Jitter sigma={sigma_s * 1000:.1f}ms: {accuracy}")
    return accuracy


def degradation_curve(
    references: Mapping[str, HapticTimeline],
    sigmas_s: Sequence[float],
    trials: int = 100,
    seed: Optional[int] = 0,
) -> Dict[float, Dict[str, float]]:
    """Acurácia de jitter_accuracy para cada sigma (mesma semente em todos)."""
    return {sigma: jitter_accuracy(references, sigma, trials, seed) for sigma in sigmas_s}
