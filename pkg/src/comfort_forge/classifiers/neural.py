"""Fully connected ReLU networks with a softmax output.

Parameters live in one flat float64 vector (weights then bias per layer,
in order) so the loss gradient can be checked against finite differences
and the whole model serialises as a single array. Training is plain
mini-batch gradient descent with early stopping on validation accuracy.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import NonFiniteLoss

BATCH_SIZE = 128
LEARNING_RATE = 0.01
# Validation accuracy moves in coarse steps (1/n_val), so a short patience
# would stop mid-climb under plain gradient descent.
PATIENCE = 100


def layer_dims(layer_sizes) -> list:
    """(fan_in, fan_out) per weight matrix for the full stack."""
    return [(layer_sizes[i], layer_sizes[i + 1]) for i in range(len(layer_sizes) - 1)]


def param_count(layer_sizes) -> int:
    return sum(fan_in * fan_out + fan_out for fan_in, fan_out in layer_dims(layer_sizes))


def unpack_params(flat: np.ndarray, layer_sizes) -> list:
    """Split the flat vector into [(W, b), ...] views (no copies)."""
    out = []
    offset = 0
    for fan_in, fan_out in layer_dims(layer_sizes):
        W = flat[offset:offset + fan_in * fan_out].reshape(fan_in, fan_out)
        offset += fan_in * fan_out
        b = flat[offset:offset + fan_out]
        offset += fan_out
        out.append((W, b))
    return out


def init_params(layer_sizes, rng: np.random.Generator) -> np.ndarray:
    """He-scaled random weights, zero biases."""
    flat = np.zeros(param_count(layer_sizes))
    layers = unpack_params(flat, layer_sizes)
    for W, _ in layers:
        W[:] = rng.normal(0.0, np.sqrt(2.0 / W.shape[0]), size=W.shape)
    return flat


def _forward(flat, X, layer_sizes):
    """Pre-activations and activations per layer; returns (zs, activations)."""
    layers = unpack_params(flat, layer_sizes)
    activations = [X]
    zs = []
    a = X
    for i, (W, b) in enumerate(layers):
        z = a @ W + b
        zs.append(z)
        if i < len(layers) - 1:
            a = np.maximum(z, 0.0)
        else:
            a = z  # logits; softmax applied by the caller
        activations.append(a)
    return zs, activations


def _softmax(logits: np.ndarray) -> np.ndarray:
    shifted = logits - logits.max(axis=1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=1, keepdims=True)


def nn_loss(flat: np.ndarray, X: np.ndarray, y_idx: np.ndarray,
            layer_sizes, l2: float = 0.0) -> float:
    """Mean softmax cross-entropy plus (l2/2)*||weights||^2 (biases excluded)."""
    _, activations = _forward(flat, X, layer_sizes)
    probs = _softmax(activations[-1])
    n = X.shape[0]
    eps = np.finfo(np.float64).tiny
    loss = -float(np.mean(np.log(probs[np.arange(n), y_idx] + eps)))
    if l2 > 0.0:
        loss += 0.5 * l2 * sum(float(np.sum(W * W)) for W, _ in unpack_params(flat, layer_sizes))
    return loss


def nn_gradient(flat: np.ndarray, X: np.ndarray, y_idx: np.ndarray,
                layer_sizes, l2: float = 0.0) -> np.ndarray:
    """Analytic gradient of :func:`nn_loss` w.r.t. the flat parameter vector."""
    layers = unpack_params(flat, layer_sizes)
    zs, activations = _forward(flat, X, layer_sizes)
    n = X.shape[0]
    probs = _softmax(activations[-1])
    delta = probs
    delta[np.arange(n), y_idx] -= 1.0
    delta /= n

    grad = np.zeros_like(flat)
    grad_layers = unpack_params(grad, layer_sizes)
    for i in range(len(layers) - 1, -1, -1):
        W, _ = layers[i]
        gW, gb = grad_layers[i]
        gW[:] = activations[i].T @ delta
        gb[:] = delta.sum(axis=0)
        if l2 > 0.0:
            gW += l2 * W
        if i > 0:
            delta = (delta @ W.T) * (zs[i - 1] > 0.0)
    return grad


def predict_nn(params: dict, X: np.ndarray) -> np.ndarray:
    _, activations = _forward(params["flat"], X, params["layer_sizes"])
    return np.argmax(activations[-1], axis=1)


@dataclass
class TrainingTrace:
    """Per-epoch loss/accuracy curves plus where early stopping landed."""

    train_loss: list
    val_accuracy: list
    best_epoch: int
    stopped_epoch: int


def fit_nn(X, y_idx, n_classes, hidden, *, val_X=None, val_y=None,
           iteration_limit=1000, l2=0.0, seed=0):
    """Train one network; returns (params dict, TrainingTrace).

    One iteration is one pass over the training set in shuffled batches.
    When validation data is supplied, training stops after PATIENCE epochs
    without a new best validation accuracy and the best parameters are
    restored; ties keep the earliest epoch.
    """
    layer_sizes = (X.shape[1],) + tuple(hidden) + (n_classes,)
    rng = np.random.default_rng(seed)
    flat = init_params(layer_sizes, rng)

    best_flat = flat.copy()
    best_acc = -1.0
    best_epoch = 0
    train_loss = []
    val_accuracy = []
    n = X.shape[0]
    epoch = 0
    for epoch in range(1, iteration_limit + 1):
        order = rng.permutation(n)
        for start in range(0, n, BATCH_SIZE):
            batch = order[start:start + BATCH_SIZE]
            grad = nn_gradient(flat, X[batch], y_idx[batch], layer_sizes, l2)
            flat -= LEARNING_RATE * grad
        loss = nn_loss(flat, X, y_idx, layer_sizes, l2)
        if not np.isfinite(loss):
            raise NonFiniteLoss(f"training loss became {loss!r} at iteration {epoch}")
        train_loss.append(loss)
        if val_X is not None and val_X.shape[0] > 0:
            _, activations = _forward(flat, val_X, layer_sizes)
            acc = float(np.mean(np.argmax(activations[-1], axis=1) == val_y))
            val_accuracy.append(acc)
            if acc > best_acc:
                best_acc = acc
                best_flat = flat.copy()
                best_epoch = epoch
            elif epoch - best_epoch >= PATIENCE:
                break
        else:
            best_flat = flat
            best_epoch = epoch

    params = {"flat": np.asarray(best_flat, dtype=np.float64), "layer_sizes": layer_sizes}
    trace = TrainingTrace(train_loss, val_accuracy, best_epoch, epoch)
    return params, trace
