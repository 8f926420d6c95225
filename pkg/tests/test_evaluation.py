"""Accuracy, precision/recall, and confusion-matrix bookkeeping."""

import numpy as np
import pytest

from comfort_forge import (
    EvalMode,
    FeatureMatrix,
    FeatureSet,
    classifier_spec,
    confusion_matrix,
    evaluate,
    predict,
    train,
)
from comfort_forge.errors import EmptyEvaluationSet


def _matrix(features, labels=None):
    features = np.asarray(features, dtype=np.float64)
    if labels is not None:
        labels = np.asarray(labels, dtype=np.int64)
    return FeatureMatrix(features=features, labels=labels,
                         feature_set=FeatureSet.FOUR_PARAM_NO_AGE)


def _separable_data(rng, n_per_class):
    rows, ys = [], []
    for label, center in ((-1, -8.0), (0, 0.0), (1, 8.0)):
        rows.append(rng.normal(center, 0.5, size=(n_per_class, 4)))
        ys.append(np.full(n_per_class, label))
    return _matrix(np.vstack(rows), np.concatenate(ys))


def test_perfect_predictor_scores_100():
    rng = np.random.default_rng(0)
    data = _separable_data(rng, 30)
    model = train(classifier_spec("fine_knn"), data)
    report = evaluate(model, data, EvalMode.HOLDOUT_TEST, "train-as-test")
    assert report.accuracy == 100.0
    assert report.n_rows == 90
    assert np.array_equal(report.confusion, np.diag([30, 30, 30]))
    assert all(v == 100.0 for v in report.precision.values())
    assert all(v == 100.0 for v in report.recall.values())
    assert report.method == "fine_knn"
    assert report.mode is EvalMode.HOLDOUT_TEST


def test_constant_predictor_on_balanced_set():
    # Identical features leave a tree nothing to split on, so it becomes
    # a constant majority-vote predictor.
    features = np.ones((10, 4))
    labels = np.array([0] * 4 + [-1] * 3 + [1] * 3)
    model = train(classifier_spec("fine_tree"), _matrix(features, labels))
    balanced = _matrix(np.ones((30, 4)), np.array([-1, 0, 1] * 10))
    assert predict(model, balanced).tolist() == [0] * 30

    report = evaluate(model, balanced, EvalMode.HOLDOUT_TEST)
    assert report.accuracy == pytest.approx(100.0 / 3.0)
    # everything lands in the predicted-0 column
    assert report.confusion[:, 1].tolist() == [10, 10, 10]
    assert report.precision[0] == pytest.approx(100.0 / 3.0)
    assert report.recall[0] == 100.0
    # classes never predicted score 0 precision by convention
    assert report.precision[-1] == 0.0 and report.precision[1] == 0.0


def test_confusion_matrix_shape_and_totals():
    truth = np.array([-1, -1, 0, 0, 0, 1])
    predicted = np.array([-1, 0, 0, 1, 0, 1])
    matrix = confusion_matrix(truth, predicted)
    assert matrix.shape == (3, 3)
    assert matrix.sum() == 6
    assert matrix.sum(axis=1).tolist() == [2, 3, 1]  # row sums = truth counts
    assert matrix.tolist() == [[1, 1, 0], [0, 2, 1], [0, 0, 1]]


def test_report_arithmetic_matches_hand_computation():
    rng = np.random.default_rng(3)
    train_data = _separable_data(rng, 40)
    noisy = _matrix(rng.normal(0.0, 6.0, size=(120, 4)),
                    rng.integers(-1, 2, size=120))
    model = train(classifier_spec("medium_knn"), train_data)
    report = evaluate(model, noisy, EvalMode.ALL_ORIGINAL_DATA, "none")

    predicted = predict(model, noisy)
    matrix = confusion_matrix(noisy.labels, predicted)
    assert np.array_equal(report.confusion, matrix)
    assert report.accuracy == pytest.approx(100.0 * np.trace(matrix) / 120)
    for i, label in enumerate((-1, 0, 1)):
        col, row = matrix[:, i].sum(), matrix[i, :].sum()
        want_p = 100.0 * matrix[i, i] / col if col else 0.0
        want_r = 100.0 * matrix[i, i] / row if row else 0.0
        assert report.precision[label] == pytest.approx(want_p)
        assert report.recall[label] == pytest.approx(want_r)


def test_empty_evaluation_sets_raise():
    rng = np.random.default_rng(0)
    data = _separable_data(rng, 10)
    model = train(classifier_spec("fine_tree"), data)
    with pytest.raises(EmptyEvaluationSet):
        evaluate(model, _matrix(np.empty((0, 4)), np.empty(0)),
                 EvalMode.HOLDOUT_TEST)
    with pytest.raises(EmptyEvaluationSet):
        evaluate(model, _matrix(np.ones((5, 4))), EvalMode.HOLDOUT_TEST)


def test_report_serialization():
    rng = np.random.default_rng(0)
    data = _separable_data(rng, 10)
    model = train(classifier_spec("gaussian_nb"), data)
    report = evaluate(model, data, EvalMode.HOLDOUT_TEST, "70/15/15 seed 0")
    doc = report.to_dict()
    assert doc["mode"] == "holdout_test"
    assert doc["class_order"] == [-1, 0, 1]
    assert set(doc["precision"]) == {"warmer", "no change", "cooler"}
    assert doc["split_scheme"] == "70/15/15 seed 0"
    assert np.asarray(doc["confusion"]).shape == (3, 3)
