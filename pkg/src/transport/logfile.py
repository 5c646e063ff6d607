"""Log de comandos: cabeçalho `#tactile-log v1` e um objeto JSON por linha.

Formato fixo (chaves t, site, intensity nesta ordem; segundos com 6 casas)
para que arquivos dourados possam ser comparados byte a byte.
"""
import json
from typing import Iterable, List

from ..config.constants import LOG_HEADER
from ..errors import TransportError
from ..layout.sites import ActuatorSite
from ..timeline.model import DeviceCommand


def format_log_line(command: DeviceCommand) -> str:
    return f'{{"t":{command.t:.6f},"site":"{command.site.label}","intensity":{command.intensity}}}'


def write_log(commands: Iterable[DeviceCommand]) -> str:
    """
    Serializa comandos no formato de log, preservando a ordem de entrada.

    Args:
        commands: Comandos ordenados no tempo

    Returns:
        str: Texto do log (só o cabeçalho quando vazio)
    """
    lines = [LOG_HEADER]
    lines.extend(format_log_line(c) for c in commands)
    return "\n".join(lines) + "\n"


def read_log(text: str) -> List[DeviceCommand]:
    """
    Lê um log de comandos.

    Raises:
        TransportError: Cabeçalho ausente ou linha malformada
    """
    lines = text.splitlines()
    if not lines or lines[0].strip() != LOG_HEADER:
        raise TransportError(f"Log sem cabeçalho {LOG_HEADER!r}")

    commands = []
    for number, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
            commands.append(
                DeviceCommand(float(record["t"]), ActuatorSite.from_label(record["site"]), int(record["intensity"]))
            )
        except (ValueError, KeyError, TypeError) as e:
            raise TransportError(f"Linha {number} do log inválida: {e}") from e
    return commands
