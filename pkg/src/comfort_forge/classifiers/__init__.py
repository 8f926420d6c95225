"""Fifteen shallow classifier configurations behind one train/predict API.

Every method is identified by a short id ("fine_tree", "cosine_knn", ...)
mapping to a :class:`ClassifierSpec` that fixes its family and
hyperparameters. Standardization is part of each ClassifierSpec: methods that need
it get training-split statistics baked into the returned model, and
:func:`predict` always routes raw features through those statistics, so
evaluation data can never be scaled with its own mean and std.
"""

import json
from dataclasses import dataclass, field

import numpy as np

from ..errors import (
    CorruptFile,
    FeatureSetMismatch,
    SingleClassTrainingSet,
    VersionMismatch,
)
from ..features import FEATURE_COLUMNS, FeatureMatrix, FeatureSet, StandardizationStats, standardize
from .knn import fit_knn, predict_knn
from .naive_bayes import fit_gaussian_nb, predict_gaussian_nb
from .neural import fit_nn, nn_gradient, nn_loss, predict_nn
from .tree import fit_tree, predict_tree

MODEL_MAGIC = "comfort-forge-model"
MODEL_FORMAT_VERSION = 1


@dataclass(frozen=True)
class ClassifierSpec:
    """One named configuration: family, display name, hyperparameters."""

    method: str
    family: str
    display_name: str
    standardize: bool
    params: dict = field(default_factory=dict)


def _tree(method, name, max_splits):
    return ClassifierSpec(method, "tree", name, False, {"max_splits": max_splits})


def _knn(method, name, k, metric="euclidean", weights="equal"):
    return ClassifierSpec(method, "knn", name, True,
                          {"k": k, "metric": metric, "weights": weights})


def _nn(method, name, hidden):
    return ClassifierSpec(method, "neural_net", name, True,
                          {"hidden": hidden, "iteration_limit": 1000, "l2": 0.0})


SPECS = {spec.method: spec for spec in (
    _tree("fine_tree", "Fine Tree", 100),
    _tree("medium_tree", "Medium Tree", 20),
    _tree("coarse_tree", "Coarse Tree", 4),
    _knn("fine_knn", "Fine KNN", 1),
    _knn("medium_knn", "Medium KNN", 10),
    _knn("coarse_knn", "Coarse KNN", 100),
    _knn("cosine_knn", "Cosine KNN", 10, metric="cosine"),
    _knn("cubic_knn", "Cubic KNN", 10, metric="cubic"),
    _knn("weighted_knn", "Weighted KNN", 10, weights="squared_inverse"),
    ClassifierSpec("gaussian_nb", "naive_bayes", "Gaussian Naive Bayes", False),
    _nn("narrow_nn", "Narrow Neural Network", (10,)),
    _nn("medium_nn", "Medium Neural Network", (25,)),
    _nn("wide_nn", "Wide Neural Network", (100,)),
    _nn("bilayered_nn", "Bilayered Neural Network", (10, 10)),
    _nn("trilayered_nn", "Trilayered Neural Network", (10, 10, 10)),
)}

METHODS = tuple(SPECS)


def classifier_spec(method: str) -> ClassifierSpec:
    try:
        return SPECS[method]
    except KeyError:
        raise KeyError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}") from None


@dataclass(frozen=True)
class TrainedModel:
    """Learned parameters plus everything needed to apply them."""

    spec: ClassifierSpec
    feature_set: FeatureSet
    classes: np.ndarray            # sorted label values; params index into this
    stats: StandardizationStats    # identity for methods that skip scaling
    params: dict
    metadata: dict = field(default_factory=dict)


def _label_indices(classes: np.ndarray, labels: np.ndarray) -> np.ndarray:
    """Positions of labels in the sorted class vector; -1 for unseen labels."""
    idx = np.searchsorted(classes, labels)
    idx_clipped = np.clip(idx, 0, classes.size - 1)
    known = classes[idx_clipped] == labels
    return np.where(known, idx_clipped, -1).astype(np.int64)


def train(spec, train_matrix: FeatureMatrix, val_matrix: FeatureMatrix | None = None,
          seed: int = 0, metadata: dict | None = None) -> TrainedModel:
    """Fit one classifier; deterministic per seed.

    ``spec`` may be a :class:`ClassifierSpec` or a method id. Validation
    data is only consulted by the neural networks (early stopping); it is
    scaled with the training statistics, never its own.
    """
    if isinstance(spec, str):
        spec = classifier_spec(spec)
    labels = train_matrix.labels
    if labels is None:
        raise ValueError("training matrix has no labels")
    classes = np.unique(labels)
    if classes.size < 2:
        raise SingleClassTrainingSet(
            f"training data contains only class {classes[0]!r}" if classes.size
            else "training data is empty")
    y_idx = _label_indices(classes, labels)

    if spec.standardize:
        scaled, stats = standardize(train_matrix)
        X = scaled.features
    else:
        stats = StandardizationStats.identity(train_matrix.features.shape[1])
        X = train_matrix.features

    if spec.family == "tree":
        params = fit_tree(X, y_idx, classes.size, spec.params["max_splits"])
    elif spec.family == "knn":
        params = fit_knn(X, y_idx, classes.size, spec.params["k"],
                         spec.params["metric"], spec.params["weights"])
    elif spec.family == "naive_bayes":
        params = fit_gaussian_nb(X, y_idx, classes.size)
    elif spec.family == "neural_net":
        val_X = val_y = None
        if val_matrix is not None and len(val_matrix) > 0 and val_matrix.labels is not None:
            val_X = stats.apply(val_matrix.features)
            val_y = _label_indices(classes, val_matrix.labels)
        params, trace = fit_nn(
            X, y_idx, classes.size, spec.params["hidden"],
            val_X=val_X, val_y=val_y,
            iteration_limit=spec.params["iteration_limit"],
            l2=spec.params["l2"], seed=seed)
        metadata = dict(metadata or {})
        metadata["best_epoch"] = trace.best_epoch
        metadata["stopped_epoch"] = trace.stopped_epoch
    else:  # pragma: no cover - registry is closed
        raise ValueError(f"unknown family {spec.family!r}")

    meta = {"seed": seed, "n_train": int(train_matrix.features.shape[0])}
    meta.update(metadata or {})
    return TrainedModel(spec, train_matrix.feature_set, classes, stats, params, meta)


_PREDICTORS = {
    "tree": predict_tree,
    "knn": predict_knn,
    "naive_bayes": predict_gaussian_nb,
    "neural_net": predict_nn,
}


def predict(model: TrainedModel, features) -> np.ndarray:
    """Label vector for raw (unstandardized) features.

    Accepts a FeatureMatrix (feature_set must match the model) or a bare
    2-D array with the model's column count.
    """
    if isinstance(features, FeatureMatrix):
        if features.feature_set != model.feature_set:
            raise FeatureSetMismatch(
                f"model expects {model.feature_set.value!r} features, "
                f"matrix holds {features.feature_set.value!r}")
        X = features.features
    else:
        X = np.asarray(features, dtype=np.float64)
        expected = len(FEATURE_COLUMNS[model.feature_set])
        if X.ndim != 2 or X.shape[1] != expected:
            raise FeatureSetMismatch(
                f"model expects {expected} feature columns, got array of shape {X.shape}")
    if X.shape[0] == 0:
        return np.empty(0, dtype=np.int64)
    idx = _PREDICTORS[model.spec.family](model.params, model.stats.apply(X))
    return model.classes[idx]


def _encode_params(family: str, params: dict) -> dict:
    out = {}
    for key, value in params.items():
        if isinstance(value, np.ndarray):
            out[key] = value.tolist()
        elif isinstance(value, tuple):
            out[key] = list(value)
        else:
            out[key] = value
    return out


def _decode_params(family: str, raw: dict) -> dict:
    if family == "tree":
        return {
            "feature": np.asarray(raw["feature"], dtype=np.int64),
            "threshold": np.asarray(raw["threshold"], dtype=np.float64),
            "left": np.asarray(raw["left"], dtype=np.int64),
            "right": np.asarray(raw["right"], dtype=np.int64),
            "value": np.asarray(raw["value"], dtype=np.int64),
        }
    if family == "knn":
        return {
            "train_X": np.asarray(raw["train_X"], dtype=np.float64).reshape(
                len(raw["train_X"]), -1),
            "train_y": np.asarray(raw["train_y"], dtype=np.int64),
            "n_classes": int(raw["n_classes"]),
            "k": int(raw["k"]),
            "metric": raw["metric"],
            "weights": raw["weights"],
        }
    if family == "naive_bayes":
        return {
            "priors": np.asarray(raw["priors"], dtype=np.float64),
            "means": np.asarray(raw["means"], dtype=np.float64),
            "variances": np.asarray(raw["variances"], dtype=np.float64),
        }
    if family == "neural_net":
        return {
            "flat": np.asarray(raw["flat"], dtype=np.float64),
            "layer_sizes": tuple(int(v) for v in raw["layer_sizes"]),
        }
    raise CorruptFile(f"unknown model family {family!r}")


def save_model(model: TrainedModel, path) -> None:
    """Write the model as a single JSON document (floats round-trip exactly)."""
    doc = {
        "magic": MODEL_MAGIC,
        "format_version": MODEL_FORMAT_VERSION,
        "method": model.spec.method,
        "feature_set": model.feature_set.value,
        "classes": [int(c) for c in model.classes],
        "stats": {"mean": model.stats.mean.tolist(), "std": model.stats.std.tolist()},
        "params": _encode_params(model.spec.family, model.params),
        "metadata": model.metadata,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")


def load_model(path) -> TrainedModel:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise CorruptFile(f"{path}: not a valid model file ({exc})") from exc
    if not isinstance(doc, dict) or doc.get("magic") != MODEL_MAGIC:
        raise CorruptFile(f"{path}: missing model magic")
    version = doc.get("format_version")
    if version != MODEL_FORMAT_VERSION:
        raise VersionMismatch(
            f"{path}: format version {version!r}, expected {MODEL_FORMAT_VERSION}")
    try:
        spec = classifier_spec(doc["method"])
        feature_set = FeatureSet(doc["feature_set"])
        classes = np.asarray(doc["classes"], dtype=np.int64)
        stats = StandardizationStats(
            mean=np.asarray(doc["stats"]["mean"], dtype=np.float64),
            std=np.asarray(doc["stats"]["std"], dtype=np.float64))
        params = _decode_params(spec.family, doc["params"])
        metadata = doc.get("metadata", {})
    except (KeyError, ValueError, TypeError) as exc:
        raise CorruptFile(f"{path}: malformed model document ({exc})") from exc
    return TrainedModel(spec, feature_set, classes, stats, params, metadata)


__all__ = [
    "ClassifierSpec",
    "METHODS",
    "MODEL_FORMAT_VERSION",
    "MODEL_MAGIC",
    "SPECS",
    "TrainedModel",
    "classifier_spec",
    "load_model",
    "nn_gradient",
    "nn_loss",
    "predict",
    "save_model",
    "train",
]
