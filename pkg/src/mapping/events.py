from dataclasses import dataclass

from ..layout.sites import ActuatorSite


@dataclass(frozen=True)
class HapticEvent:
    """Gesto temporizado num atuador; gesture_id agrupa os toques de uma nota"""
    t_on: float
    duration: float
    site: ActuatorSite
    intensity: int
    gesture_id: int = 0

    def __post_init__(self):
        if self.t_on < 0:
            raise ValueError(f"t_on negativo: {self.t_on}")
        if self.duration <= 0:
            raise ValueError(f"Duração deve ser positiva: {self.duration}")
        if not 0 <= self.intensity <= 255:
            raise ValueError(f"Intensidade fora de 0-255: {self.intensity}")

    @property
    def t_off(self) -> float:
        return self.t_on + self.duration

    def sort_key(self):
        return (self.t_on, int(self.site), self.gesture_id)
