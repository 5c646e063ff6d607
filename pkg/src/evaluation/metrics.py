from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from ..errors import TrialDataError
from ..utils.logger import get_logger

logger = get_logger(__name__)

TRIAL_COLUMNS = ["participant", "presented", "answered", "confidence", "trained"]
_TRUE = {"true", "1", "yes", "y"}
_FALSE = {"false", "0", "no", "n"}


@dataclass(frozen=True)
class TrialRecord:
    """Uma resposta de um participante a uma apresentação háptica"""
    participant_id: str
    presented: str
    answered: str
    confidence: Optional[int] = None
    trained: bool = False

    def __post_init__(self):
        if self.confidence is not None and not 1 <= self.confidence <= 10:
            raise ValueError(f"Confiança fora de 1-10: {self.confidence}")

    @property
    def correct(self) -> bool:
        return self.presented == self.answered


@dataclass
class ConfusionMatrix:
    """Contagens L×L: linhas = apresentado, colunas = respondido"""
    labels: Tuple[str, ...]
    counts: np.ndarray

    def __post_init__(self):
        self.labels = tuple(self.labels)
        self.counts = np.asarray(self.counts, dtype=np.int64)
        size = len(self.labels)
        if self.counts.shape != (size, size):
            raise ValueError(f"Matriz deve ser {size}x{size}, recebida {self.counts.shape}")
        if (self.counts < 0).any():
            raise ValueError("Contagens não podem ser negativas")

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def row_sums(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    def column_sums(self) -> np.ndarray:
        return self.counts.sum(axis=0)


@dataclass(frozen=True)
class LabelMetrics:
    """Precisão e revocação de um rótulo; None quando o denominador é 0"""
    precision: Optional[float]
    recall: Optional[float]


@dataclass
class GroupStats:
    trials: int = 0
    correct: int = 0
    confidences: List[int] = field(default_factory=list)

    @property
    def accuracy(self) -> Optional[float]:
        return self.correct / self.trials if self.trials else None

    @property
    def mean_confidence(self) -> Optional[float]:
        return float(np.mean(self.confidences)) if self.confidences else None


@dataclass
class AccuracyReport:
    """Acurácia por participante e por grupo (com/sem formação musical)"""
    participants: Dict[str, GroupStats]
    groups: Dict[str, GroupStats]


def precision_recall(matrix: ConfusionMatrix) -> Dict[str, LabelMetrics]:
    """
    Precisão = corretas / detectadas (coluna); revocação = corretas /
    apresentadas (linha).

    Args:
        matrix: Matriz de confusão

    Returns:
        Dict[str, LabelMetrics]: Por rótulo; denominador zero → None
    """
    diagonal = np.diag(matrix.counts)
    rows, columns = matrix.row_sums(), matrix.column_sums()
    result = {}
    for i, label in enumerate(matrix.labels):
        precision = float(diagonal[i] / columns[i]) if columns[i] else None
        recall = float(diagonal[i] / rows[i]) if rows[i] else None
        result[label] = LabelMetrics(precision, recall)
    return result


def micro_recall(matrix: ConfusionMatrix) -> Optional[float]:
    """Soma da diagonal / total (igual à acurácia global)."""
    total = matrix.total
    return float(np.trace(matrix.counts) / total) if total else None


def confusion_from_trials(trials: Iterable[TrialRecord], labels: Optional[Sequence[str]] = None) -> ConfusionMatrix:
    """
    Monta a matriz de confusão a partir dos ensaios.

    Args:
        trials: Ensaios
        labels: Conjunto declarado de rótulos (padrão: os vistos, ordenados)

    Returns:
        ConfusionMatrix: Contagens
    """
    trials = list(trials)
    if labels is None:
        labels = sorted({t.presented for t in trials} | {t.answered for t in trials})
    index = {label: i for i, label in enumerate(labels)}
    counts = np.zeros((len(labels), len(labels)), dtype=np.int64)
    for trial in trials:
        if trial.presented not in index or trial.answered not in index:
            raise TrialDataError(f"Rótulo fora do conjunto declarado em {trial}")
        counts[index[trial.presented], index[trial.answered]] += 1
    return ConfusionMatrix(tuple(labels), counts)


def accuracy_by_group(trials: Iterable[TrialRecord]) -> AccuracyReport:
    """
    Acurácia e confiança média por participante e por grupo.

    Args:
        trials: Ensaios

    Returns:
        AccuracyReport: Grupos "trained" e "untrained" sempre presentes
            (accuracy None quando vazios)
    """
    participants: Dict[str, GroupStats] = {}
    groups = {"trained": GroupStats(), "untrained": GroupStats()}
    for trial in trials:
        for stats in (
            participants.setdefault(trial.participant_id, GroupStats()),
            groups["trained" if trial.trained else "untrained"],
        ):
            stats.trials += 1
            stats.correct += int(trial.correct)
            if trial.confidence is not None:
                stats.confidences.append(trial.confidence)
    return AccuracyReport(participants=dict(sorted(participants.items())), groups=groups)


def _parse_bool(value: str, row: int) -> bool:
    text = value.strip().lower()
    if text in _TRUE:
        return True
    if text in _FALSE:
        return False
    raise TrialDataError(f"Linha {row}: trained inválido {value!r}")


def load_trials(path: Union[str, Path], labels: Optional[Sequence[str]] = None) -> List[TrialRecord]:
    """
    Lê o CSV de ensaios (participant,presented,answered,confidence,trained).

    Args:
        path: Caminho do CSV UTF-8
        labels: Conjunto declarado de rótulos, opcional

    Returns:
        List[TrialRecord]: Ensaios validados

    Raises:
        TrialDataError: Cabeçalho errado, valores inválidos ou arquivo sem ensaios
    """
    try:
        df = pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8")
    except pd.errors.EmptyDataError:
        raise TrialDataError(f"no trials: {path} está vazio") from None

    columns = [c.strip() for c in df.columns]
    if columns != TRIAL_COLUMNS:
        raise TrialDataError(f"Cabeçalho esperado {','.join(TRIAL_COLUMNS)}, encontrado {','.join(columns)}")
    if df.empty:
        raise TrialDataError(f"no trials: {path} não contém ensaios")
    df.columns = columns

    trials = []
    for row, record in enumerate(df.itertuples(index=False), start=2):
        confidence_text = record.confidence.strip()
        try:
            confidence = int(confidence_text) if confidence_text else None
            trial = TrialRecord(
                participant_id=record.participant.strip(),
                presented=record.presented.strip(),
                answered=record.answered.strip(),
                confidence=confidence,
                trained=_parse_bool(record.trained, row),
            )
        except ValueError as e:
            raise TrialDataError(f"Linha {row}: {e}") from e
        if labels is not None and (trial.presented not in labels or trial.answered not in labels):
            raise TrialDataError(f"Linha {row}: rótulo fora de {list(labels)}")
        trials.append(trial)

    logger.info(f"{len(trials)} ensaios lidos de {path}")
    return trials
