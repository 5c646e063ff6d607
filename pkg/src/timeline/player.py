import threading
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from ..config.settings import LATENESS_ALERT_MS
from ..errors import PlaybackError
from ..layout.sites import ActuatorSite
from ..utils.logger import get_logger
from .clock import Clock
from .model import DeviceCommand

logger = get_logger(__name__)


@dataclass
class PlaybackReport:
    """Resumo de uma reprodução"""
    emitted: int = 0
    max_lateness_s: float = 0.0
    late_count: int = 0
    cancelled: bool = False


def shutoff(backend, clock: Clock, sites: Iterable[ActuatorSite] = tuple(ActuatorSite)) -> None:
    # Desliga os atuadores; falhas aqui só são registradas
    for site in sites:
        try:
            backend.send(DeviceCommand(clock.now(), site, 0))
        except Exception as e:
            logger.error(f"Falha ao desligar {site.label}: {e}")


def playback(
    commands: Sequence[DeviceCommand],
    clock: Clock,
    backend,
    cancel: Optional[threading.Event] = None,
    alert_ms: float = LATENESS_ALERT_MS,
) -> PlaybackReport:
    """
    Entrega cada comando ao backend quando o relógio chega ao seu instante.

    Args:
        commands: Comandos ordenados no tempo
        clock: VirtualClock (atraso sempre 0) ou WallClock
        backend: Backend de saída com exclusividade durante a reprodução
        cancel: Evento compartilhado checado entre emissões
        alert_ms: Atraso acima do qual um alerta é registrado (nunca imposto)

    Returns:
        PlaybackReport: Emissões, maior atraso e se houve cancelamento

    Raises:
        PlaybackError: Falha do backend; todos os atuadores recebem 0 antes
    """
    report = PlaybackReport()
    lit = set()

    for command in commands:
        if cancel is not None and cancel.is_set():
            report.cancelled = True
            break
        clock.sleep_until(command.t, cancel)
        if cancel is not None and cancel.is_set():
            report.cancelled = True
            break

        try:
            backend.send(command)
        except Exception as e:
            logger.error(f"Falha no backend durante a reprodução: {e}")
            shutoff(backend, clock, list(ActuatorSite))
            raise PlaybackError(f"Reprodução abortada: {e}", report) from e

        report.emitted += 1
        if command.intensity > 0:
            lit.add(command.site)
        else:
            lit.discard(command.site)

        lateness = max(0.0, clock.now() - command.t)
        report.max_lateness_s = max(report.max_lateness_s, lateness)
        if lateness * 1000.0 > alert_ms:
            report.late_count += 1
            logger.warning(f"Comando atrasado {lateness * 1000.0:.2f} ms ({command.site.label})")

    if report.cancelled:
        logger.info("Reprodução cancelada; desligando atuadores ativos")
        shutoff(backend, clock, sorted(lit))

    return report
