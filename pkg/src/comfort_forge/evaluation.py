"""Accuracy, per-class precision/recall, and confusion matrices.

The confusion matrix is always 3x3 over the fixed label order (-1, 0, +1)
with truth on rows and predictions on columns, so reports from different
datasets line up even when a class is absent.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .classifiers import TrainedModel, predict
from .errors import EmptyEvaluationSet
from .features import FeatureMatrix
from .records import CLASS_LABELS, CLASS_NAMES


class EvalMode(enum.Enum):
    """What the scored rows represent."""

    HOLDOUT_TEST = "holdout_test"
    ALL_ORIGINAL_DATA = "all_original_data"


@dataclass(frozen=True)
class EvalReport:
    method: str
    mode: EvalMode
    n_rows: int
    accuracy: float                       # percent
    precision: dict                       # label -> percent (0 when class never predicted)
    recall: dict                          # label -> percent (0 when class absent)
    confusion: np.ndarray                 # rows: truth, cols: predicted, order CLASS_LABELS
    split_scheme: str = ""

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "mode": self.mode.value,
            "n_rows": self.n_rows,
            "accuracy": self.accuracy,
            "precision": {CLASS_NAMES[label]: self.precision[label] for label in CLASS_LABELS},
            "recall": {CLASS_NAMES[label]: self.recall[label] for label in CLASS_LABELS},
            "confusion": self.confusion.tolist(),
            "class_order": list(CLASS_LABELS),
            "split_scheme": self.split_scheme,
        }


def confusion_matrix(truth: np.ndarray, predicted: np.ndarray) -> np.ndarray:
    """Counts over the fixed (-1, 0, +1) label order."""
    size = len(CLASS_LABELS)
    index = {label: i for i, label in enumerate(CLASS_LABELS)}
    matrix = np.zeros((size, size), dtype=np.int64)
    for t, p in zip(truth, predicted):
        matrix[index[int(t)], index[int(p)]] += 1
    return matrix


def evaluate(model: TrainedModel, data: FeatureMatrix, mode: EvalMode,
             split_scheme: str = "") -> EvalReport:
    if len(data) == 0:
        raise EmptyEvaluationSet("no rows to evaluate")
    if data.labels is None:
        raise EmptyEvaluationSet("evaluation data has no labels")
    predicted = predict(model, data)
    truth = data.labels
    matrix = confusion_matrix(truth, predicted)
    total = int(matrix.sum())
    accuracy = 100.0 * float(np.trace(matrix)) / total
    precision = {}
    recall = {}
    for i, label in enumerate(CLASS_LABELS):
        col = float(matrix[:, i].sum())
        row = float(matrix[i, :].sum())
        precision[label] = 100.0 * float(matrix[i, i]) / col if col > 0 else 0.0
        recall[label] = 100.0 * float(matrix[i, i]) / row if row > 0 else 0.0
    return EvalReport(
        method=model.spec.method,
        mode=mode,
        n_rows=total,
        accuracy=accuracy,
        precision=precision,
        recall=recall,
        confusion=matrix,
        split_scheme=split_scheme,
    )
