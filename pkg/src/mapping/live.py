from collections import defaultdict, deque
from itertools import count
from typing import Deque, Dict, List, Optional, Tuple

from ..config.constants import ChannelRole, MessageKind
from ..config.settings import LIVE_HOLD_S
from ..errors import MappingError
from ..layout.sites import ActuatorSite
from ..midi.messages import MidiMessage
from ..timeline.model import DeviceCommand
from ..utils.diagnostics import Diagnostics
from ..utils.logger import get_logger
from .controllers import controller_intensity
from .events import HapticEvent
from .percussion import map_percussion
from .renderer import map_sustained_note

logger = get_logger(__name__)


class LiveSession:
    """
    Renderizador incremental para fluxos MIDI ao vivo.

    NoteOn abre o gesto com uma duração provisória (hold_s); o NoteOff
    correspondente corta os eventos naquele instante. tick(now) faz o
    max-merge dos eventos ativos e devolve só os comandos que mudaram.
    """

    def __init__(self, profile, hold_s: float = LIVE_HOLD_S, diagnostics: Optional[Diagnostics] = None):
        self.profile = profile
        self.hold_s = hold_s
        self.diagnostics = diagnostics if diagnostics is not None else Diagnostics()
        self._gesture_ids = count()
        self._active: List[HapticEvent] = []
        self._open: Dict[Tuple[int, int], Deque[int]] = defaultdict(deque)
        self._cc_levels: Dict[Tuple[int, int], Tuple[ActuatorSite, int]] = {}
        self._levels: Dict[ActuatorSite, int] = {}

    @property
    def active_events(self) -> Tuple[HapticEvent, ...]:
        return tuple(self._active)

    def feed(self, message: MidiMessage, now: float) -> None:
        """
        Aplica uma mensagem recebida no instante `now`.

        Args:
            message: Mensagem decodificada
            now: Tempo do relógio em segundos
        """
        if message.kind is MessageKind.CONTROL_CHANGE and message.data1 in self.profile.controller_map:
            key = (message.channel, message.data1)
            self._cc_levels[key] = (self.profile.controller_map[message.data1], controller_intensity(message.data2))
            return
        if not (message.is_note_on or message.is_note_off):
            return

        role = self.profile.role_of(message.channel)
        if role is ChannelRole.IGNORE:
            return
        key = (message.channel, message.note)

        if message.is_note_off:
            if role is ChannelRole.PERCUSSION:
                return
            if not self._open[key]:
                self.diagnostics.record("orphan_note_off", f"canal {message.channel} nota {message.note}")
                return
            self._truncate(self._open[key].popleft(), now)
            return

        gesture_id = next(self._gesture_ids)
        try:
            if role is ChannelRole.PERCUSSION:
                events = map_percussion(
                    message.note, message.velocity, now, self.profile, gesture_id, self.diagnostics
                )
            else:
                events = map_sustained_note(
                    role, message.note, message.velocity, now, self.hold_s, self.profile, gesture_id, self.diagnostics
                )
                self._open[key].append(gesture_id)
        except MappingError as e:
            self.diagnostics.record("unmapped_note", str(e))
            logger.warning(f"Nota ao vivo ignorada: {e}")
            return
        self._active.extend(events)

    def _truncate(self, gesture_id: int, now: float) -> None:
        kept = []
        for event in self._active:
            if event.gesture_id != gesture_id or event.t_off <= now:
                kept.append(event)
            elif event.t_on < now:
                kept.append(HapticEvent(event.t_on, now - event.t_on, event.site, event.intensity, gesture_id))
        self._active = kept

    def tick(self, now: float) -> List[DeviceCommand]:
        """
        Calcula o nível de cada atuador em `now` e devolve as mudanças.

        Returns:
            List[DeviceCommand]: Comandos ordenados pelo id do atuador
        """
        levels: Dict[ActuatorSite, int] = {}
        for event in self._active:
            if event.t_on <= now < event.t_off:
                levels[event.site] = max(levels.get(event.site, 0), event.intensity)
        for site, level in self._cc_levels.values():
            levels[site] = max(levels.get(site, 0), level)
        self._active = [e for e in self._active if e.t_off > now]

        commands = []
        for site in sorted(set(levels) | set(self._levels)):
            level = levels.get(site, 0)
            if level != self._levels.get(site, 0):
                commands.append(DeviceCommand(now, site, level))
        self._levels = {site: level for site, level in levels.items() if level > 0}
        return commands

    def close(self, now: float) -> List[DeviceCommand]:
        """Encerra tudo no fim do fluxo e devolve os comandos de desligamento."""
        for key, pending in self._open.items():
            for gesture_id in pending:
                self.diagnostics.record("unclosed_note", f"canal {key[0]} nota {key[1]} fechada no fim do fluxo")
                self._truncate(gesture_id, now)
        self._open.clear()
        self._cc_levels.clear()
        self._active = []
        return self.tick(now)
