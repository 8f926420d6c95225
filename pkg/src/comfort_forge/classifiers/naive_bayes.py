"""Gaussian naive Bayes over continuous features."""

import numpy as np

_VAR_FLOOR_SCALE = 1e-9


def fit_gaussian_nb(X: np.ndarray, y_idx: np.ndarray, n_classes: int) -> dict:
    n, d = X.shape
    priors = np.bincount(y_idx, minlength=n_classes) / n
    means = np.zeros((n_classes, d))
    variances = np.zeros((n_classes, d))
    for c in range(n_classes):
        rows = X[y_idx == c]
        if rows.shape[0] > 0:
            means[c] = rows.mean(axis=0)
            variances[c] = rows.var(axis=0)
    # A constant feature within a class would make the density a delta
    # spike; floor variances relative to the data's overall spread.
    floor = _VAR_FLOOR_SCALE * max(float(X.var(axis=0).max()), 1.0)
    variances = np.maximum(variances, floor)
    return {"priors": priors, "means": means, "variances": variances}


def predict_gaussian_nb(params: dict, X: np.ndarray) -> np.ndarray:
    priors = params["priors"]
    means = params["means"]
    variances = params["variances"]
    with np.errstate(divide="ignore"):
        log_prior = np.log(priors)  # -inf for empty classes is correct
    # log p(x|c) summed over independent per-feature Gaussians.
    diff = X[:, None, :] - means[None, :, :]
    log_like = -0.5 * np.sum(
        np.log(2.0 * np.pi * variances)[None, :, :] + diff * diff / variances[None, :, :],
        axis=2,
    )
    return np.argmax(log_prior[None, :] + log_like, axis=1)
