from dataclasses import dataclass
from typing import Dict, Mapping, Sequence, Tuple

import numpy as np

from ..timeline.model import HapticTimeline
from ..utils.numeric import round_half_up

# Quantização dos intervalos entre ataques (10 ms)
IOI_BINS_PER_SECOND = 100


@dataclass(frozen=True)
class Fingerprint:
    """Sequência de (id do atuador, IOI em bins de 10 ms), um par por gesto"""
    tokens: Tuple[Tuple[int, int], ...] = ()

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def sites(self) -> Tuple[int, ...]:
        return tuple(site for site, _ in self.tokens)

    @property
    def iois(self) -> Tuple[int, ...]:
        return tuple(ioi for _, ioi in self.tokens)


def fingerprint(timeline: HapticTimeline) -> Fingerprint:
    """
    Impressão rítmico-espacial de uma timeline.

    Gestos ordenados pelo ataque; o atuador representativo é o do primeiro
    evento do gesto; o primeiro IOI é 0.

    Args:
        timeline: Timeline háptica (vazia → impressão vazia)

    Returns:
        Fingerprint: Um token por gesto
    """
    first_event: Dict[int, Tuple[float, int]] = {}
    for event in timeline.events:
        if event.gesture_id not in first_event:
            first_event[event.gesture_id] = (event.t_on, int(event.site))

    ordered = sorted((onset, gesture_id, site) for gesture_id, (onset, site) in first_event.items())
    tokens = []
    previous = None
    for onset, _, site in ordered:
        ioi = 0 if previous is None else round_half_up((onset - previous) * IOI_BINS_PER_SECOND)
        tokens.append((site, ioi))
        previous = onset
    return Fingerprint(tuple(tokens))


def _encode(tokens: Sequence[Tuple[int, int]]) -> np.ndarray:
    return np.array([site * 1_000_000 + ioi for site, ioi in tokens], dtype=np.int64)


def edit_distance(a: Fingerprint, b: Fingerprint) -> int:
    """Distância de Levenshtein entre as sequências de tokens (linha vetorizada)."""
    xa, xb = _encode(a.tokens), _encode(b.tokens)
    idx = np.arange(len(xb) + 1)
    prev = idx.copy()
    for i, token in enumerate(xa, start=1):
        cost = np.empty_like(prev)
        cost[0] = i
        cost[1:] = np.minimum(prev[1:] + 1, prev[:-1] + (xb != token))
        # Inserções: cur[j] = min(cost[j], cur[j-1] + 1)
        prev = np.minimum.accumulate(cost - idx) + idx
    return int(prev[-1])


def normalized_distance(a: Fingerprint, b: Fingerprint) -> float:
    longest = max(len(a), len(b))
    return edit_distance(a, b) / longest if longest else 0.0


def identify(query: Fingerprint, candidates: Mapping[str, Fingerprint]) -> Tuple[str, float]:
    """
    Reconhece a música mais próxima da consulta.

    Args:
        query: Impressão consultada
        candidates: Rótulo → impressão (não vazio)

    Returns:
        Tuple[str, float]: Rótulo com menor distância normalizada (empate →
            menor rótulo) e score = 1 - distância
    """
    if not candidates:
        raise ValueError("É preciso ao menos um candidato")
    distance, label = min((normalized_distance(query, fp), label) for label, fp in candidates.items())
    return label, 1.0 - distance
