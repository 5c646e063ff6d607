import threading
import time
from abc import ABC, abstractmethod
from typing import Optional


class Clock(ABC):
    """Relógio de reprodução em segundos desde o início"""

    @abstractmethod
    def now(self) -> float:
        pass

    @abstractmethod
    def sleep_until(self, t: float, cancel: Optional[threading.Event] = None) -> None:
        """Bloqueia até o instante t ou até o cancelamento."""
        pass


class VirtualClock(Clock):
    """Relógio determinístico: dormir apenas avança o tempo"""

    def __init__(self, start: float = 0.0):
        self._now = start

    def now(self) -> float:
        return self._now

    def sleep_until(self, t: float, cancel: Optional[threading.Event] = None) -> None:
        self._now = max(self._now, t)


class WallClock(Clock):
    """Relógio de parede baseado em time.perf_counter"""

    def __init__(self):
        self._origin = time.perf_counter()

    def now(self) -> float:
        return time.perf_counter() - self._origin

    def sleep_until(self, t: float, cancel: Optional[threading.Event] = None) -> None:
        remaining = t - self.now()
        if remaining <= 0:
            return
        if cancel is not None:
            cancel.wait(remaining)
        else:
            time.sleep(remaining)
