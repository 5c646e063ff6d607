from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Tuple

from ..config.constants import DEFAULT_TEMPO_US
from .smf import SmfDocument


@dataclass(frozen=True)
class TempoMap:
    """
    Mapa de tempo: lista ordenada de (tick, microssegundos por semínima),
    sempre começando em tick 0.
    """
    entries: Tuple[Tuple[int, int], ...] = ((0, DEFAULT_TEMPO_US),)
    ticks_per_quarter: int = 480
    # Segundos acumulados no início de cada segmento
    _starts: Tuple[float, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        ticks = [tick for tick, _ in self.entries]
        if not ticks or ticks[0] != 0:
            raise ValueError("TempoMap precisa de uma entrada no tick 0")
        if any(b <= a for a, b in zip(ticks, ticks[1:])):
            raise ValueError("Ticks do TempoMap devem ser estritamente crescentes")
        starts = [0.0]
        for (tick, tempo), (next_tick, _) in zip(self.entries, self.entries[1:]):
            starts.append(starts[-1] + (next_tick - tick) * tempo / (self.ticks_per_quarter * 1e6))
        object.__setattr__(self, "_starts", tuple(starts))


def build_tempo_map(doc: SmfDocument) -> TempoMap:
    """
    Constrói o mapa de tempo a partir dos meta-eventos de tempo.

    Args:
        doc: Documento SMF

    Returns:
        TempoMap: Entradas ordenadas; no mesmo tick vale o último evento;
            (0, 500000) quando não há tempo no tick 0
    """
    by_tick = {0: DEFAULT_TEMPO_US}
    # sort estável: a ordem de leitura decide empates
    for tick, tempo in sorted(doc.meta_tempo_changes, key=lambda item: item[0]):
        by_tick[tick] = tempo
    return TempoMap(entries=tuple(sorted(by_tick.items())), ticks_per_quarter=doc.ticks_per_quarter)


def ticks_to_seconds(tempo_map: TempoMap, ticks_per_quarter: int, tick: int) -> float:
    """
    Converte ticks absolutos em segundos, acumulando segmento a segmento.

    Args:
        tempo_map: Mapa de tempo
        ticks_per_quarter: Resolução do arquivo (> 0)
        tick: Tick absoluto

    Returns:
        float: Segundos desde o início (monótono em tick)
    """
    if ticks_per_quarter <= 0:
        raise ValueError("ticks_per_quarter deve ser positivo")
    entries = tempo_map.entries
    if ticks_per_quarter == tempo_map.ticks_per_quarter:
        index = bisect_right(entries, (tick, float("inf"))) - 1
        seg_tick, tempo = entries[index]
        return tempo_map._starts[index] + (tick - seg_tick) * tempo / (ticks_per_quarter * 1e6)

    seconds = 0.0
    for i, (seg_tick, tempo) in enumerate(entries):
        if seg_tick >= tick:
            break
        end = entries[i + 1][0] if i + 1 < len(entries) else tick
        seconds += (min(end, tick) - seg_tick) * tempo / (ticks_per_quarter * 1e6)
    return seconds

