from typing import Dict, List, Tuple

from ..layout.sites import ActuatorSite
from ..utils.numeric import round_half_up
from .events import HapticEvent


def controller_intensity(value: int) -> int:
    """Valor de CC 0-127 → intensidade 0-255"""
    return round_half_up(value * 255 / 127)


class ControllerTracker:
    """
    Converte mensagens Control Change em níveis sustentados: cada CC define
    o nível do atuador até o próximo CC do mesmo controlador e canal.
    Cada trecho com nível > 0 vira um gesto próprio.
    """

    def __init__(self, controller_map: Dict[int, ActuatorSite]):
        self._map = controller_map
        # (canal, controlador) → (início, intensidade)
        self._open: Dict[Tuple[int, int], Tuple[float, int]] = {}

    def handles(self, controller: int) -> bool:
        return controller in self._map

    def update(self, channel: int, controller: int, value: int, t: float) -> List[Tuple[float, float, ActuatorSite, int]]:
        """
        Registra um novo valor e devolve o trecho fechado, se houver.

        Returns:
            List: Zero ou um trecho (início, duração, atuador, intensidade)
        """
        key = (channel, controller)
        closed = self._close(key, t)
        level = controller_intensity(value)
        if level > 0:
            self._open[key] = (t, level)
        return closed

    def close_all(self, t: float) -> List[Tuple[float, float, ActuatorSite, int]]:
        closed = []
        for key in sorted(self._open):
            closed.extend(self._close(key, t))
        return closed

    def _close(self, key: Tuple[int, int], t: float) -> List[Tuple[float, float, ActuatorSite, int]]:
        if key not in self._open:
            return []
        start, level = self._open.pop(key)
        if t <= start:
            return []
        return [(start, t - start, self._map[key[1]], level)]


def controller_events(segments, next_gesture_id) -> List[HapticEvent]:
    """Trechos de CC → HapticEvents, um gesto por trecho."""
    return [
        HapticEvent(start, duration, site, level, next_gesture_id())
        for start, duration, site, level in segments
    ]
