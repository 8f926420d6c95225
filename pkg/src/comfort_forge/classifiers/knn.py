"""k-nearest-neighbour voting with three distance metrics.

Everything is deterministic: neighbour ranking uses a stable argsort so
equal distances resolve to the lowest training index, and vote ties go to
the smallest class index. Distances are computed in chunks of query rows
to bound peak memory on large grids.
"""

import numpy as np

_CHUNK_ROWS = 2048


def _euclidean(queries: np.ndarray, train: np.ndarray) -> np.ndarray:
    diff = queries[:, None, :] - train[None, :, :]
    return np.sqrt(np.sum(diff * diff, axis=2))


def _cubic(queries: np.ndarray, train: np.ndarray) -> np.ndarray:
    diff = np.abs(queries[:, None, :] - train[None, :, :])
    return np.cbrt(np.sum(diff**3, axis=2))


def _cosine(queries: np.ndarray, train: np.ndarray) -> np.ndarray:
    # A zero-norm vector has no direction; its similarity to anything is
    # taken as 0, i.e. distance 1.
    q_norm = np.linalg.norm(queries, axis=1)
    t_norm = np.linalg.norm(train, axis=1)
    dots = queries @ train.T
    denom = q_norm[:, None] * t_norm[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        sim = np.where(denom > 0.0, dots / np.where(denom > 0.0, denom, 1.0), 0.0)
    return 1.0 - sim

_METRICS = {"euclidean": _euclidean, "cubic": _cubic, "cosine": _cosine}


def fit_knn(X: np.ndarray, y_idx: np.ndarray, n_classes: int, k: int,
            metric: str, weights: str) -> dict:
    return {
        "train_X": X,
        "train_y": y_idx,
        "n_classes": n_classes,
        "k": k,
        "metric": metric,
        "weights": weights,
    }


def predict_knn(params: dict, X: np.ndarray) -> np.ndarray:
    train_X = params["train_X"]
    train_y = params["train_y"]
    n_classes = params["n_classes"]
    k = min(params["k"], train_X.shape[0])
    metric = _METRICS[params["metric"]]
    squared_inverse = params["weights"] == "squared_inverse"

    out = np.empty(X.shape[0], dtype=np.int64)
    for start in range(0, X.shape[0], _CHUNK_ROWS):
        chunk = X[start:start + _CHUNK_ROWS]
        dist = metric(chunk, train_X)
        order = np.argsort(dist, axis=1, kind="stable")[:, :k]
        neighbour_labels = train_y[order]
        if squared_inverse:
            d = np.take_along_axis(dist, order, axis=1)
            zero = d == 0.0
            with np.errstate(divide="ignore"):
                w = 1.0 / (d * d)
            # An exact hit outvotes everything else; restrict the vote to
            # the coincident neighbours when any distance is zero.
            has_zero = zero.any(axis=1)
            w[has_zero] = zero[has_zero].astype(np.float64)
            w[~np.isfinite(w)] = 0.0
        else:
            w = np.ones_like(neighbour_labels, dtype=np.float64)
        votes = np.zeros((chunk.shape[0], n_classes))
        for c in range(n_classes):
            votes[:, c] = np.sum(w * (neighbour_labels == c), axis=1)
        out[start:start + chunk.shape[0]] = np.argmax(votes, axis=1)
    return out
