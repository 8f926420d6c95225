"""Feature matrices: assembly from records, standardization, seeded splits."""

import enum
from dataclasses import dataclass, replace

import numpy as np

from .errors import DegenerateSplit, EmptyMatrix, ZeroVarianceColumn
from .records import RecordSet, derive_label


class FeatureSet(enum.Enum):
    FIVE_PARAM = "five"
    FOUR_PARAM_NO_AGE = "four"


FEATURE_COLUMNS = {
    FeatureSet.FIVE_PARAM: (
        "air_temperature", "relative_humidity", "clothing_insulation",
        "metabolic_rate", "age"),
    FeatureSet.FOUR_PARAM_NO_AGE: (
        "air_temperature", "relative_humidity", "clothing_insulation",
        "metabolic_rate"),
}

TEMPERATURE_COLUMN = 0
HUMIDITY_COLUMN = 1


@dataclass(frozen=True)
class FeatureMatrix:
    """Numeric features in fixed column order with an optional label vector."""

    features: np.ndarray  # (n, d) float64
    labels: np.ndarray | None  # (n,) ints in {-1, 0, +1}; None for probe grids
    feature_set: FeatureSet
    dropped_rows: int = 0

    def __len__(self) -> int:
        return self.features.shape[0]

    @property
    def columns(self) -> tuple[str, ...]:
        return FEATURE_COLUMNS[self.feature_set]


def assemble_features(record_set: RecordSet, feature_set: FeatureSet) -> FeatureMatrix:
    """Keep rows with every required feature and a derivable label.

    Rows missing any required feature or the preference vote are dropped
    (counted, in order). Raises EmptyMatrix when nothing survives.
    """
    columns = FEATURE_COLUMNS[feature_set]
    rows, labels = [], []
    dropped = 0
    for record in record_set:
        label = derive_label(record)
        values = [getattr(record, name) for name in columns]
        if label is None or any(v is None for v in values):
            dropped += 1
            continue
        rows.append(values)
        labels.append(label)
    if not rows:
        raise EmptyMatrix(f"no usable rows for feature set {feature_set.value}")
    return FeatureMatrix(
        features=np.asarray(rows, dtype=np.float64),
        labels=np.asarray(labels, dtype=np.int64),
        feature_set=feature_set,
        dropped_rows=dropped,
    )


@dataclass(frozen=True)
class StandardizationStats:
    """Per-column mean and sample standard deviation of a training split."""

    mean: np.ndarray
    std: np.ndarray

    @classmethod
    def identity(cls, n_columns: int) -> "StandardizationStats":
        return cls(mean=np.zeros(n_columns), std=np.ones(n_columns))

    def apply(self, features: np.ndarray) -> np.ndarray:
        return (features - self.mean) / self.std


def standardize(
    matrix: FeatureMatrix,
    stats: StandardizationStats | None = None,
) -> tuple[FeatureMatrix, StandardizationStats]:
    """Transform each column to (x - mean) / std.

    With ``stats=None`` the statistics are computed from ``matrix`` itself
    (the training split); pass those stats back in for validation and test
    data so every split shares the training-split transform.
    """
    if stats is None:
        mean = matrix.features.mean(axis=0)
        std = matrix.features.std(axis=0, ddof=1) if len(matrix) > 1 \
            else np.zeros(matrix.features.shape[1])
        zero = np.flatnonzero(std == 0.0)
        if zero.size:
            raise ZeroVarianceColumn(int(zero[0]))
        stats = StandardizationStats(mean=mean, std=std)
    elif stats.mean.shape[0] != matrix.features.shape[1]:
        raise ValueError(
            f"stats cover {stats.mean.shape[0]} columns, matrix has "
            f"{matrix.features.shape[1]}")
    return replace(matrix, features=stats.apply(matrix.features)), stats


def split(
    matrix: FeatureMatrix,
    fractions: tuple[float, float, float],
    seed: int,
) -> tuple[FeatureMatrix, FeatureMatrix, FeatureMatrix]:
    """Seeded shuffle then contiguous train/validation/test partition.

    Validation and test sizes are floors of their fractions; the remainder
    goes to train. Deterministic for a given seed.
    """
    f_train, f_val, f_test = fractions
    if abs(f_train + f_val + f_test - 1.0) > 1e-9:
        raise DegenerateSplit(f"fractions {fractions} do not sum to 1")
    n = len(matrix)
    n_val = int(np.floor(n * f_val))
    n_test = int(np.floor(n * f_test))
    n_train = n - n_val - n_test
    for size, fraction, name in ((n_train, f_train, "train"),
                                 (n_val, f_val, "validation"),
                                 (n_test, f_test, "test")):
        if fraction > 0 and size == 0:
            raise DegenerateSplit(f"{name} split would be empty for n={n}")
    order = np.random.default_rng(seed).permutation(n)
    parts = (order[:n_train], order[n_train:n_train + n_val],
             order[n_train + n_val:])
    out = []
    for indices in parts:
        out.append(replace(
            matrix,
            features=matrix.features[indices],
            labels=None if matrix.labels is None else matrix.labels[indices],
            dropped_rows=0,
        ))
    return tuple(out)
