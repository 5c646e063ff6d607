from decimal import Decimal
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np

from ..utils.logger import get_logger
from ..utils.numeric import round_ratio
from .metrics import ConfusionMatrix

logger = get_logger(__name__)

MAX_TOTAL_TRIALS = 200

# Precisão/revocação publicadas para as três músicas do estudo
TABLE1_TARGETS: Dict[str, Tuple[float, float]] = {
    "song1": (0.94, 0.94),
    "song2": (0.91, 0.83),
    "song3": (0.92, 1.00),
}
TABLE1_TOTAL_TRIALS = 80


def _quantize(value: float, decimals: int) -> Decimal:
    return Decimal(str(value)).quantize(Decimal(1).scaleb(-decimals))


def _row_candidates(recall: Decimal, total: int, decimals: int, row_sum: Optional[int]) -> List[Tuple[int, int]]:
    """Pares (diagonal, soma da linha) cuja revocação arredondada bate com o alvo"""
    sums = [row_sum] if row_sum is not None else range(1, total + 1)
    return [
        (d, r)
        for r in sums
        if r >= 1
        for d in range(r + 1)
        if round_ratio(d, r, decimals) == recall
    ]


def table1_consistency(
    targets: Mapping[str, Tuple[float, float]],
    total_trials: int,
    decimals: int = 2,
    row_sums: Optional[Mapping[str, int]] = None,
) -> List[ConfusionMatrix]:
    """
    Enumera todas as matrizes de confusão 3×3 inteiras com o total dado cujas
    precisão e revocação por rótulo, arredondadas (half-up), batem com os
    alvos.

    Busca exaustiva: para cada linha são enumerados os pares (diagonal,
    soma) compatíveis com a revocação; restam três graus de liberdade fora
    da diagonal, filtrados pela precisão de cada coluna.

    Args:
        targets: Rótulo → (precisão, revocação), na ordem das linhas
        total_trials: Soma de todas as células (<= 200)
        decimals: Casas decimais do arredondamento
        row_sums: Somas de linha fixas opcionais, por rótulo

    Returns:
        List[ConfusionMatrix]: Todas as matrizes viáveis (possivelmente vazia)
    """
    if len(targets) != 3:
        raise ValueError("table1_consistency trabalha com exatamente 3 rótulos")
    if not 0 <= total_trials <= MAX_TOTAL_TRIALS:
        raise ValueError(f"total_trials deve estar entre 0 e {MAX_TOTAL_TRIALS}")

    labels = tuple(targets)
    row_sums = row_sums or {}
    precisions = [_quantize(targets[label][0], decimals) for label in labels]
    recalls = [_quantize(targets[label][1], decimals) for label in labels]
    rows = [
        _row_candidates(recalls[i], total_trials, decimals, row_sums.get(label))
        for i, label in enumerate(labels)
    ]

    @lru_cache(maxsize=None)
    def precision_ok(column: int, correct: int, detected: int) -> bool:
        return detected >= 1 and round_ratio(correct, detected, decimals) == precisions[column]

    row2_by_sum: Dict[int, List[int]] = {}
    for d2, r2 in rows[2]:
        row2_by_sum.setdefault(r2, []).append(d2)

    feasible = []
    for d0, r0 in rows[0]:
        for d1, r1 in rows[1]:
            r2 = total_trials - r0 - r1
            for d2 in row2_by_sum.get(r2, ()):
                e0, e1, e2 = r0 - d0, r1 - d1, r2 - d2
                for x01 in range(e0 + 1):
                    x02 = e0 - x01
                    for x12 in range(e1 + 1):
                        x10 = e1 - x12
                        if not precision_ok(2, d2, d2 + x02 + x12):
                            continue
                        for x20 in range(e2 + 1):
                            x21 = e2 - x20
                            if precision_ok(0, d0, d0 + x10 + x20) and precision_ok(1, d1, d1 + x01 + x21):
                                counts = np.array([[d0, x01, x02], [x10, d1, x12], [x20, x21, d2]])
                                feasible.append(ConfusionMatrix(labels, counts))

    logger.info(f"{len(feasible)} matrizes viáveis para total={total_trials}")
    return feasible
