from abc import ABC, abstractmethod

from ..timeline.model import DeviceCommand


class OutputBackend(ABC):
    """Interface base para backends de saída de comandos"""

    @abstractmethod
    def send(self, command: DeviceCommand) -> None:
        """
        Entrega um comando ao destino.

        Args:
            command: Comando de nível de um atuador

        Raises:
            TransportError: Falha de escrita
        """
        pass

    def close(self) -> None:
        """Libera o recurso do backend"""
        pass

    @property
    @abstractmethod
    def name(self) -> str:
        """Nome do backend"""
        pass

    @property
    def is_available(self) -> bool:
        """Verifica se o backend está pronto para uso"""
        return True

    def __enter__(self) -> "OutputBackend":
        return self

    def __exit__(self, exc_type, exc, tb) -> None:
        self.close()
