import pytest

from src.errors import TransportError
from src.layout.sites import ActuatorSite
from src.timeline.model import DeviceCommand
from src.transport.backends.log import LogBackend
from src.transport.logfile import format_log_line, read_log, write_log


def test_empty_log_is_only_the_header():
    assert write_log([]) == "#tactile-log v1\n"


def test_line_format():
    line = format_log_line(DeviceCommand(0.5, ActuatorSite.TIP_RING, 170))
    assert line == '{"t":0.500000,"site":"TipRing","intensity":170}'


def test_read_golden_log(fur_elise_golden_log):
    commands = read_log(fur_elise_golden_log)
    assert len(commands) == 18
    assert commands[0] == DeviceCommand(0.0, ActuatorSite.TIP_RING, 152)
    assert commands[-1] == DeviceCommand(2.5, ActuatorSite.TIP_THUMB, 0)
    assert write_log(commands) == fur_elise_golden_log


def test_blank_lines_are_ignored():
    text = '#tactile-log v1\n\n{"t":1.000000,"site":"Thenar","intensity":10}\n'
    assert read_log(text) == [DeviceCommand(1.0, ActuatorSite.THENAR, 10)]


@pytest.mark.parametrize(
    "text",
    [
        "",
        '{"t":0.000000,"site":"TipRing","intensity":1}\n',
        "#tactile-log v2\n",
        "#tactile-log v1\nnão é json\n",
        '#tactile-log v1\n{"t":0.000000,"site":"Palm","intensity":1}\n',
        '#tactile-log v1\n{"t":0.000000,"site":"TipRing"}\n',
        '#tactile-log v1\n{"t":0.000000,"site":"TipRing","intensity":300}\n',
    ],
)
def test_malformed_logs_raise(text):
    with pytest.raises(TransportError):
        read_log(text)


def test_log_backend_matches_write_log(tmp_path, fur_elise_golden_log):
    commands = read_log(fur_elise_golden_log)
    path = tmp_path / "saida" / "play.log"
    with LogBackend(path) as backend:
        for command in commands:
            backend.send(command)
    assert path.read_text(encoding="utf-8") == write_log(commands)
    assert backend.name == f"log:{path}"
