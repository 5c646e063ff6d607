from collections import Counter, defaultdict
from typing import Dict, List, Tuple

from ..layout.sites import ActuatorSite
from ..mapping.events import HapticEvent
from .model import DeviceCommand, HapticTimeline


def _site_changes(events: List[HapticEvent]) -> List[Tuple[float, int]]:
    # Varredura pelos instantes de borda com um multiconjunto de intensidades ativas
    starts: Dict[float, List[int]] = defaultdict(list)
    ends: Dict[float, List[int]] = defaultdict(list)
    for event in events:
        starts[event.t_on].append(event.intensity)
        ends[event.t_off].append(event.intensity)

    active: Counter = Counter()
    level = 0
    changes = []
    for t in sorted(set(starts) | set(ends)):
        for intensity in ends.get(t, ()):
            active[intensity] -= 1
            if active[intensity] == 0:
                del active[intensity]
        for intensity in starts.get(t, ()):
            active[intensity] += 1
        new_level = max(active) if active else 0
        if new_level != level:
            changes.append((t, new_level))
            level = new_level
    return changes


def arbitrate(timeline: HapticTimeline) -> List[DeviceCommand]:
    """
    Funde gestos sobrepostos em um fluxo de comandos por atuador.

    Em cada instante o nível de um atuador é o máximo entre os eventos
    ativos (max-merge). Comandos só são emitidos nas mudanças e todo
    atuador tocado termina em 0.

    Args:
        timeline: HapticTimeline válida

    Returns:
        List[DeviceCommand]: Ordenados por (t, id do atuador)
    """
    by_site: Dict[ActuatorSite, List[HapticEvent]] = defaultdict(list)
    for event in timeline.events:
        by_site[event.site].append(event)

    commands = [
        DeviceCommand(t, site, level)
        for site, events in by_site.items()
        for t, level in _site_changes(events)
    ]
    commands.sort(key=lambda c: (c.t, int(c.site)))
    return commands


def timeline_from_commands(commands: List[DeviceCommand]) -> HapticTimeline:
    """
    Reconstrói uma timeline a partir de comandos: cada trecho de nível
    constante > 0 vira um evento com gesto próprio.

    Args:
        commands: Comandos ordenados no tempo

    Returns:
        HapticTimeline: arbitrate() desta timeline devolve os mesmos comandos
    """
    open_level: Dict[ActuatorSite, Tuple[float, int]] = {}
    events = []
    for command in commands:
        previous = open_level.pop(command.site, None)
        if previous is not None and command.t > previous[0]:
            events.append((previous[0], command.t - previous[0], command.site, previous[1]))
        if command.intensity > 0:
            open_level[command.site] = (command.t, command.intensity)

    events.sort(key=lambda e: (e[0], int(e[2])))
    end = max((c.t for c in commands), default=0.0)
    return HapticTimeline.from_events(
        (HapticEvent(t_on, duration, site, level, gesture_id) for gesture_id, (t_on, duration, site, level) in enumerate(events)),
        duration=end,
    )
