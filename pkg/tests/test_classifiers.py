"""The 15 shallow classifiers: specs, sanity properties, persistence."""

import numpy as np
import pytest

from comfort_forge import (
    METHODS,
    SPECS,
    FeatureMatrix,
    FeatureSet,
    TrainedModel,
    classifier_spec,
    load_model,
    predict,
    save_model,
    train,
)
from comfort_forge.classifiers.knn import fit_knn, predict_knn
from comfort_forge.classifiers.tree import fit_tree, predict_tree
from comfort_forge.errors import (
    CorruptFile,
    FeatureSetMismatch,
    SingleClassTrainingSet,
    VersionMismatch,
)
import oracles


def _matrix(features, labels=None, feature_set=FeatureSet.FOUR_PARAM_NO_AGE):
    features = np.asarray(features, dtype=np.float64)
    if labels is not None:
        labels = np.asarray(labels, dtype=np.int64)
    return FeatureMatrix(features=features, labels=labels, feature_set=feature_set)


def _blob_matrix(rng, n_per_class, means, labels, scale=1.0):
    rows, ys = [], []
    for mean, label in zip(means, labels):
        rows.append(rng.normal(mean, scale, size=(n_per_class, len(mean))))
        ys.append(np.full(n_per_class, label))
    return _matrix(np.vstack(rows), np.concatenate(ys),
                   feature_set=FeatureSet.FIVE_PARAM)


MEANS_5D = (
    (0.0, 0.0, 0.0, 0.0, 0.0),
    (8.0, 8.0, 0.0, 0.0, 0.0),
    (0.0, 0.0, 8.0, 8.0, 0.0),
)


def test_spec_table():
    assert len(METHODS) == 15
    assert METHODS == tuple(SPECS)
    families = {spec.family for spec in SPECS.values()}
    assert families == {"tree", "knn", "naive_bayes", "neural_net"}
    assert SPECS["fine_tree"].params["max_splits"] == 100
    assert SPECS["medium_tree"].params["max_splits"] == 20
    assert SPECS["coarse_tree"].params["max_splits"] == 4
    assert SPECS["fine_knn"].params["k"] == 1
    assert SPECS["medium_knn"].params["k"] == 10
    assert SPECS["coarse_knn"].params["k"] == 100
    assert SPECS["cosine_knn"].params["metric"] == "cosine"
    assert SPECS["cubic_knn"].params["metric"] == "cubic"
    assert SPECS["weighted_knn"].params["weights"] == "squared_inverse"
    assert SPECS["narrow_nn"].params["hidden"] == (10,)
    assert SPECS["medium_nn"].params["hidden"] == (25,)
    assert SPECS["wide_nn"].params["hidden"] == (100,)
    assert SPECS["bilayered_nn"].params["hidden"] == (10, 10)
    assert SPECS["trilayered_nn"].params["hidden"] == (10, 10, 10)
    # distance- and gradient-based families standardize; trees and NB do not
    for name, spec in SPECS.items():
        assert spec.standardize == (spec.family in ("knn", "neural_net")), name
    assert SPECS["wide_nn"].display_name == "Wide Neural Network"
    assert SPECS["gaussian_nb"].display_name == "Gaussian Naive Bayes"
    with pytest.raises(KeyError):
        classifier_spec("extra_trees")


def test_knn_k1_is_perfect_on_conflict_free_data():
    rng = np.random.default_rng(42)
    features = rng.uniform(0.0, 1.0, size=(300, 4))
    labels = rng.integers(-1, 2, size=300)
    data = _matrix(features, labels)
    model = train(classifier_spec("fine_knn"), data)
    assert np.array_equal(predict(model, data), data.labels)


def test_gaussian_nb_matches_closed_form_bayes_on_separated_blobs():
    rng = np.random.default_rng(1)
    train_data = _blob_matrix(rng, 200, MEANS_5D, (-1, 0, 1))
    test_data = _blob_matrix(rng, 100, MEANS_5D, (-1, 0, 1))
    model = train(classifier_spec("gaussian_nb"), train_data)
    got = predict(model, test_data)
    accuracy = np.mean(got == test_data.labels)
    assert accuracy >= 0.99
    want = oracles.gaussian_bayes_predict(
        test_data.features,
        means=np.asarray(MEANS_5D),
        variances=np.ones((3, 5)),
        priors=np.full(3, 1.0 / 3.0),
        labels=np.asarray((-1, 0, 1)),
    )
    assert np.mean(got == want) >= 0.99


def test_tree_training_accuracy_is_monotone_in_max_splits():
    rng = np.random.default_rng(5)
    features = rng.uniform(0.0, 1.0, size=(600, 4))
    labels = (np.sin(6.0 * features[:, 0]) + features[:, 1] > 0.8).astype(int)
    data = _matrix(features, labels)
    accuracies = []
    for method in ("coarse_tree", "medium_tree", "fine_tree"):
        model = train(classifier_spec(method), data)
        accuracies.append(float(np.mean(predict(model, data) == data.labels)))
    assert accuracies[0] <= accuracies[1] <= accuracies[2]
    assert accuracies[2] > accuracies[0]  # the extra splits buy something


def test_tree_split_tie_breaks_on_lowest_feature_then_threshold():
    # Both columns separate the classes perfectly; feature 0 must win.
    X = np.array([[0.0, 0.0], [1.0, 1.0], [0.0, 0.0], [1.0, 1.0]])
    y = np.array([0, 1, 0, 1])
    params = fit_tree(X, y, n_classes=2, max_splits=1)
    assert params["feature"][0] == 0
    assert params["threshold"][0] == 0.5


def test_knn_vote_tie_prefers_lowest_class_index():
    # Probe equidistant from five class-0 and five class-1 points.
    X = np.array([[-1.0]] * 5 + [[1.0]] * 5)
    y = np.array([0] * 5 + [1] * 5)
    model = fit_knn(X, y, n_classes=2, k=10, metric="euclidean",
                    weights="equal")
    assert predict_knn(model, np.array([[0.0]]))[0] == 0


def test_weighted_knn_exact_hit_dominates():
    X = np.array([[0.0, 0.0]] + [[0.1, 0.0]] * 9)
    y = np.array([1] + [0] * 9)
    model = fit_knn(X, y, n_classes=2, k=10, metric="euclidean",
                    weights="squared_inverse")
    # probe sits exactly on the single class-1 point
    assert predict_knn(model, np.array([[0.0, 0.0]]))[0] == 1


def test_cosine_knn_handles_zero_vectors():
    X = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    y = np.array([0, 1, 1])
    model = fit_knn(X, y, n_classes=2, k=1, metric="cosine", weights="equal")
    out = predict_knn(model, np.array([[0.0, 0.0], [2.0, 0.0]]))
    assert out.shape == (2,)
    assert out[1] == 1


def test_knn_standardization_makes_column_scale_irrelevant():
    rng = np.random.default_rng(9)
    features = rng.normal(0.0, 1.0, size=(150, 4))
    labels = (features[:, 0] + features[:, 1] > 0).astype(int)
    probes = rng.normal(0.0, 1.0, size=(40, 4))

    scale = np.array([1.0, 1000.0, 0.001, 1.0])
    plain = train(classifier_spec("medium_knn"), _matrix(features, labels))
    scaled = train(classifier_spec("medium_knn"),
                   _matrix(features * scale, labels))
    assert np.array_equal(predict(plain, probes),
                          predict(scaled, probes * scale))


def test_classes_map_back_to_original_labels():
    X = np.array([[0.0, 0.0, 0.0, 0.0],
                  [1.0, 2.0, 1.0, 3.0],
                  [2.0, 1.0, 3.0, 1.0]])
    data = _matrix(X, np.array([-1, 0, 1]))
    model = train(classifier_spec("fine_knn"), data)
    assert model.classes.tolist() == [-1, 0, 1]
    assert predict(model, X).tolist() == [-1, 0, 1]
    # subset of classes also maps back
    two = train(classifier_spec("fine_knn"), _matrix(X[:2], np.array([-1, 1])))
    assert two.classes.tolist() == [-1, 1]
    assert predict(two, X[:2]).tolist() == [-1, 1]


def test_single_class_training_set_raises():
    data = _matrix(np.array([[0.0], [1.0]]), np.array([1, 1]))
    with pytest.raises(SingleClassTrainingSet):
        train(classifier_spec("fine_tree"), data)


def test_feature_set_mismatch():
    rng = np.random.default_rng(0)
    data = _matrix(rng.normal(size=(30, 4)), rng.integers(0, 2, 30),
                   feature_set=FeatureSet.FOUR_PARAM_NO_AGE)
    model = train(classifier_spec("fine_tree"), data)
    five = _matrix(rng.normal(size=(5, 5)), feature_set=FeatureSet.FIVE_PARAM)
    with pytest.raises(FeatureSetMismatch):
        predict(model, five)
    with pytest.raises(FeatureSetMismatch):
        predict(model, rng.normal(size=(5, 3)))  # bare array, wrong width


def test_predict_handles_empty_and_leaves_input_unchanged():
    rng = np.random.default_rng(0)
    data = _matrix(rng.normal(size=(30, 4)), rng.integers(-1, 2, 30))
    model = train(classifier_spec("medium_knn"), data)
    out = predict(model, np.empty((0, 4)))
    assert out.shape == (0,) and out.dtype == np.int64

    probes = rng.normal(size=(10, 4))
    copy = probes.copy()
    predict(model, probes)
    assert np.array_equal(probes, copy)


def test_train_metadata():
    rng = np.random.default_rng(0)
    data = _matrix(rng.normal(size=(40, 4)), rng.integers(-1, 2, 40))
    model = train(classifier_spec("fine_tree"), data, seed=17,
                  metadata={"note": "probe"})
    assert model.metadata["seed"] == 17
    assert model.metadata["n_train"] == 40
    assert model.metadata["note"] == "probe"


@pytest.mark.parametrize("method", ["fine_tree", "weighted_knn", "cosine_knn",
                                    "gaussian_nb", "narrow_nn"])
def test_save_load_round_trip(tmp_path, method):
    rng = np.random.default_rng(3)
    data = _blob_matrix(rng, 40, MEANS_5D, (-1, 0, 1))
    val = _blob_matrix(rng, 10, MEANS_5D, (-1, 0, 1))
    model = train(classifier_spec(method), data, val_matrix=val, seed=0)
    probes = rng.normal(2.0, 4.0, size=(60, 5))
    before = predict(model, probes)

    path = tmp_path / f"{method}.json"
    save_model(model, path)
    loaded = load_model(path)
    assert isinstance(loaded, TrainedModel)
    assert loaded.spec.method == method
    assert np.array_equal(loaded.classes, model.classes)
    assert np.array_equal(predict(loaded, probes), before)

    # single line of JSON, stable on re-save
    text = path.read_text()
    assert text.count("\n") == 1 and text.endswith("\n")
    save_model(loaded, tmp_path / "again.json")
    assert (tmp_path / "again.json").read_text() == text


def test_load_rejects_corrupt_files(tmp_path):
    rng = np.random.default_rng(3)
    data = _matrix(rng.normal(size=(30, 4)), rng.integers(-1, 2, 30))
    model = train(classifier_spec("fine_tree"), data)
    path = tmp_path / "model.json"
    save_model(model, path)
    text = path.read_text()

    truncated = tmp_path / "truncated.json"
    truncated.write_text(text[: len(text) // 2])
    with pytest.raises(CorruptFile):
        load_model(truncated)

    not_ours = tmp_path / "other.json"
    not_ours.write_text('{"magic": "something-else", "format_version": 1}\n')
    with pytest.raises(CorruptFile):
        load_model(not_ours)

    garbage = tmp_path / "garbage.json"
    garbage.write_bytes(b"\xff\xfe\x00 not json")
    with pytest.raises(CorruptFile):
        load_model(garbage)


def test_load_rejects_future_version(tmp_path):
    rng = np.random.default_rng(3)
    data = _matrix(rng.normal(size=(30, 4)), rng.integers(-1, 2, 30))
    path = tmp_path / "model.json"
    save_model(train(classifier_spec("fine_tree"), data), path)
    bumped = path.read_text().replace('"format_version":1', '"format_version":2')
    assert bumped != path.read_text()
    path.write_text(bumped)
    with pytest.raises(VersionMismatch):
        load_model(path)
