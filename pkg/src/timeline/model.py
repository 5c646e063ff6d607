from dataclasses import dataclass
from typing import Iterable, Tuple

from ..layout.sites import ActuatorSite
from ..mapping.events import HapticEvent


@dataclass(frozen=True)
class HapticTimeline:
    """Eventos hápticos ordenados por (t_on, id do atuador, gesture_id)"""
    events: Tuple[HapticEvent, ...] = ()
    duration: float = 0.0

    def __post_init__(self):
        keys = [e.sort_key() for e in self.events]
        if any(b < a for a, b in zip(keys, keys[1:])):
            raise ValueError("Eventos da timeline fora de ordem")
        latest = max((e.t_off for e in self.events), default=0.0)
        if self.duration < latest:
            object.__setattr__(self, "duration", latest)

    @classmethod
    def from_events(cls, events: Iterable[HapticEvent], duration: float = 0.0) -> "HapticTimeline":
        return cls(events=tuple(sorted(events, key=HapticEvent.sort_key)), duration=duration)

    def __len__(self) -> int:
        return len(self.events)

    @property
    def gesture_ids(self) -> Tuple[int, ...]:
        return tuple(sorted({e.gesture_id for e in self.events}))


@dataclass(frozen=True)
class DeviceCommand:
    """Nível comandado de um atuador a partir do instante t (0 = desligado)"""
    t: float
    site: ActuatorSite
    intensity: int

    def __post_init__(self):
        if not 0 <= self.intensity <= 255:
            raise ValueError(f"Intensidade fora de 0-255: {self.intensity}")
