import numpy as np
import pytest

from src.errors import TrialDataError
from src.evaluation.metrics import (
    ConfusionMatrix,
    TrialRecord,
    accuracy_by_group,
    confusion_from_trials,
    load_trials,
    micro_recall,
    precision_recall,
)

LABELS = ("song1", "song2", "song3")


def test_perfect_diagonal():
    matrix = ConfusionMatrix(LABELS, np.diag([10, 12, 8]))
    metrics = precision_recall(matrix)
    assert all(m.precision == 1.0 and m.recall == 1.0 for m in metrics.values())
    assert micro_recall(matrix) == 1.0


def test_known_matrix():
    matrix = ConfusionMatrix(LABELS, [[15, 1, 0], [1, 15, 2], [0, 2, 14]])
    metrics = precision_recall(matrix)
    assert metrics["song1"].precision == pytest.approx(15 / 16)
    assert metrics["song1"].recall == pytest.approx(0.9375)
    assert metrics["song2"].recall == pytest.approx(15 / 18)
    assert metrics["song3"].precision == pytest.approx(14 / 16)
    assert micro_recall(matrix) == pytest.approx(44 / 50)


def test_against_brute_force(rng):
    for _ in range(50):
        size = int(rng.integers(2, 5))
        counts = rng.integers(0, 6, size=(size, size))
        labels = tuple(f"l{i}" for i in range(size))
        metrics = precision_recall(ConfusionMatrix(labels, counts))
        for i, label in enumerate(labels):
            column = sum(int(counts[r][i]) for r in range(size))
            row = sum(int(counts[i][c]) for c in range(size))
            if column:
                assert metrics[label].precision == pytest.approx(int(counts[i][i]) / column)
            else:
                assert metrics[label].precision is None
            if row:
                assert metrics[label].recall == pytest.approx(int(counts[i][i]) / row)
            else:
                assert metrics[label].recall is None


def test_undefined_metrics_are_none():
    matrix = ConfusionMatrix(("a", "b"), [[3, 0], [0, 0]])
    metrics = precision_recall(matrix)
    assert metrics["b"].precision is None
    assert metrics["b"].recall is None
    assert micro_recall(ConfusionMatrix(("a", "b"), np.zeros((2, 2)))) is None


def test_matrix_validation():
    with pytest.raises(ValueError):
        ConfusionMatrix(LABELS, np.zeros((2, 2)))
    with pytest.raises(ValueError):
        ConfusionMatrix(("a", "b"), [[1, -1], [0, 0]])


def trials():
    records = []
    for i in range(5):
        records.append(TrialRecord("p1", LABELS[i % 3], LABELS[i % 3], 8, trained=True))
    for i in range(5):
        answered = LABELS[(i + 1) % 3] if i == 0 else LABELS[i % 3]
        records.append(TrialRecord("p2", LABELS[i % 3], answered, 5))
    return records


def test_micro_recall_equals_accuracy():
    records = trials()
    matrix = confusion_from_trials(records)
    assert matrix.labels == LABELS
    assert matrix.total == 10
    assert micro_recall(matrix) == pytest.approx(sum(t.correct for t in records) / len(records))


def test_accuracy_by_group():
    report = accuracy_by_group(trials())
    assert report.groups["trained"].accuracy == 1.0
    assert report.groups["untrained"].accuracy == pytest.approx(0.8)
    assert report.groups["trained"].mean_confidence == 8.0
    assert list(report.participants) == ["p1", "p2"]


def test_empty_group_has_no_accuracy():
    report = accuracy_by_group([TrialRecord("p1", "a", "a")])
    assert report.groups["trained"].accuracy is None
    assert report.groups["trained"].mean_confidence is None


def test_label_outside_declared_set():
    with pytest.raises(TrialDataError):
        confusion_from_trials([TrialRecord("p1", "song1", "song9")], labels=LABELS)


def test_confidence_range():
    with pytest.raises(ValueError):
        TrialRecord("p1", "a", "a", confidence=11)


def test_load_trials(tmp_path):
    path = tmp_path / "trials.csv"
    path.write_text(
        "participant,presented,answered,confidence,trained\n"
        "p1,song1,song1,9,yes\n"
        "p2,song2,song3,,0\n",
        encoding="utf-8",
    )
    records = load_trials(path)
    assert records == [
        TrialRecord("p1", "song1", "song1", 9, True),
        TrialRecord("p2", "song2", "song3", None, False),
    ]


@pytest.mark.parametrize("content", ["", "participant,presented,answered,confidence,trained\n"])
def test_load_empty_trials(tmp_path, content):
    path = tmp_path / "trials.csv"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(TrialDataError, match="no trials"):
        load_trials(path)


@pytest.mark.parametrize(
    "content",
    [
        "who,presented,answered,confidence,trained\np1,a,a,1,yes\n",
        "participant,presented,answered,confidence,trained\np1,a,a,0,yes\n",
        "participant,presented,answered,confidence,trained\np1,a,a,5,talvez\n",
        "participant,presented,answered,confidence,trained\np1,a,a,alto,no\n",
    ],
    ids=["header", "confidence-range", "trained", "confidence-text"],
)
def test_load_malformed_trials(tmp_path, content):
    path = tmp_path / "trials.csv"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(TrialDataError):
        load_trials(path)


def test_load_trials_checks_labels(tmp_path):
    path = tmp_path / "trials.csv"
    path.write_text("participant,presented,answered,confidence,trained\np1,a,x,5,no\n", encoding="utf-8")
    with pytest.raises(TrialDataError):
        load_trials(path, labels=["a", "b"])
