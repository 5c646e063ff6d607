from collections import Counter
from typing import Dict, Optional

from .logger import get_logger

logger = get_logger(__name__)


class Diagnostics:
    """
    Contador de entradas degeneradas (bytes descartados, notas sem mapa,
    oitavas fora de banda...). Nunca interrompe o processamento: registra
    no log e conta, para que o chamador decida o que fazer.
    """

    def __init__(self):
        self._counts: Counter = Counter()

    def record(self, code: str, detail: Optional[str] = None) -> None:
        """
        Registra uma ocorrência.

        Args:
            code: Identificador curto do diagnóstico (ex: "unmapped_note")
            detail: Texto opcional para o log
        """
        self._counts[code] += 1
        if detail:
            logger.debug(f"{code}: {detail}")

    def count(self, code: str) -> int:
        return self._counts[code]

    def merge(self, other: "Diagnostics") -> None:
        self._counts.update(other._counts)

    def as_dict(self) -> Dict[str, int]:
        return dict(sorted(self._counts.items()))

    def __bool__(self) -> bool:
        return bool(self._counts)

    def __repr__(self) -> str:
        return f"Diagnostics({self.as_dict()})"
