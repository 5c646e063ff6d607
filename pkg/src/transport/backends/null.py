from typing import List

from ...timeline.model import DeviceCommand
from ..base import OutputBackend


class NullBackend(OutputBackend):
    """Backend que descarta os comandos, só contando"""

    def __init__(self):
        self.count = 0

    def send(self, command: DeviceCommand) -> None:
        self.count += 1

    @property
    def name(self) -> str:
        return "null"


class CaptureBackend(OutputBackend):
    """Backend que guarda os comandos em memória (inspeção e testes)"""

    def __init__(self):
        self.commands: List[DeviceCommand] = []

    def send(self, command: DeviceCommand) -> None:
        self.commands.append(command)

    @property
    def name(self) -> str:
        return "capture"
