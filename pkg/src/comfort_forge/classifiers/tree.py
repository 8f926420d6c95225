"""Binary classification tree grown best-first by Gini gain.

The budget is a maximum number of splits (branch nodes), not a depth:
candidate leaves queue by the best weighted impurity decrease they could
achieve and the best one splits next, so a tree allowed s1 <= s2 splits
is always a prefix of the bigger tree. Tie-breaks are fixed (lowest
feature index, then lowest threshold, then creation order) to keep
training deterministic.
"""

import heapq

import numpy as np

_NO_GAIN = -1.0


def _gini(counts: np.ndarray, n: int) -> float:
    if n == 0:
        return 0.0
    p = counts / n
    return 1.0 - float(np.sum(p * p))


def _best_split(X, y_idx, n_classes):
    """Best (gain, feature, threshold) over all features of one node.

    Gain is the unweighted impurity decrease within the node; thresholds
    are midpoints between consecutive distinct sorted values. Ties prefer
    the lowest feature index, then the lowest threshold.
    """
    n = X.shape[0]
    total_counts = np.bincount(y_idx, minlength=n_classes)
    parent = _gini(total_counts, n)
    best = (_NO_GAIN, -1, 0.0)
    for feature in range(X.shape[1]):
        col = X[:, feature]
        order = np.argsort(col, kind="stable")
        sorted_vals = col[order]
        sorted_y = y_idx[order]
        boundaries = np.flatnonzero(sorted_vals[:-1] != sorted_vals[1:])
        if boundaries.size == 0:
            continue
        one_hot = np.zeros((n, n_classes))
        one_hot[np.arange(n), sorted_y] = 1.0
        cum = np.cumsum(one_hot, axis=0)
        left_counts = cum[boundaries]
        right_counts = total_counts - left_counts
        n_left = (boundaries + 1).astype(np.float64)
        n_right = n - n_left
        gini_left = 1.0 - np.sum((left_counts / n_left[:, None]) ** 2, axis=1)
        gini_right = 1.0 - np.sum((right_counts / n_right[:, None]) ** 2, axis=1)
        child = (n_left / n) * gini_left + (n_right / n) * gini_right
        gains = parent - child
        pos = int(np.argmax(gains))  # first max -> lowest threshold on ties
        gain = float(gains[pos])
        if gain > best[0]:
            i = boundaries[pos]
            threshold = float((sorted_vals[i] + sorted_vals[i + 1]) / 2.0)
            best = (gain, feature, threshold)
    return best


def fit_tree(X: np.ndarray, y_idx: np.ndarray, n_classes: int, max_splits: int) -> dict:
    """Grow the tree and return its flat node arrays.

    Nodes: ``feature[i] == -1`` marks a leaf predicting ``value[i]`` (class
    index); otherwise rows with column value <= ``threshold[i]`` descend to
    ``left[i]``, the rest to ``right[i]``.
    """
    n_total = X.shape[0]
    feature, threshold, left, right, value = [], [], [], [], []

    def majority(indices) -> int:
        counts = np.bincount(y_idx[indices], minlength=n_classes)
        return int(np.argmax(counts))  # first max -> smallest class index

    def new_node(indices) -> int:
        node = len(feature)
        feature.append(-1)
        threshold.append(0.0)
        left.append(-1)
        right.append(-1)
        value.append(majority(indices))
        return node

    root_indices = np.arange(n_total)
    root = new_node(root_indices)
    heap = []
    counter = 0

    def consider(node, indices):
        nonlocal counter
        gain, feat, thresh = _best_split(X[indices], y_idx[indices], n_classes)
        if gain > 0.0:
            # Weight by node size so gains are comparable across leaves.
            weighted = gain * (indices.size / n_total)
            heapq.heappush(heap, (-weighted, feat, thresh, counter, node, indices))
            counter += 1

    consider(root, root_indices)
    splits_done = 0
    while heap and splits_done < max_splits:
        _, feat, thresh, _, node, indices = heapq.heappop(heap)
        mask = X[indices, feat] <= thresh
        left_idx, right_idx = indices[mask], indices[~mask]
        feature[node] = feat
        threshold[node] = thresh
        left[node] = new_node(left_idx)
        right[node] = new_node(right_idx)
        splits_done += 1
        consider(left[node], left_idx)
        consider(right[node], right_idx)

    return {
        "feature": np.asarray(feature, dtype=np.int64),
        "threshold": np.asarray(threshold, dtype=np.float64),
        "left": np.asarray(left, dtype=np.int64),
        "right": np.asarray(right, dtype=np.int64),
        "value": np.asarray(value, dtype=np.int64),
    }


def predict_tree(params: dict, X: np.ndarray) -> np.ndarray:
    """Class indices for each row, traversing all rows level by level."""
    feature = params["feature"]
    threshold = params["threshold"]
    left = params["left"]
    right = params["right"]
    value = params["value"]
    node = np.zeros(X.shape[0], dtype=np.int64)
    while True:
        internal = feature[node] >= 0
        if not internal.any():
            break
        rows = np.flatnonzero(internal)
        cur = node[rows]
        go_left = X[rows, feature[cur]] <= threshold[cur]
        node[rows] = np.where(go_left, left[cur], right[cur])
    return value[node]
