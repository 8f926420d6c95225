"""Feature assembly, standardization, and the seeded three-way split."""

import numpy as np
import pytest

from comfort_forge import (
    FEATURE_COLUMNS,
    FeatureMatrix,
    FeatureSet,
    Preference,
    RecordSet,
    StandardizationStats,
    assemble_features,
    filter_dataset,
    split,
    standardize,
)
from comfort_forge.errors import DegenerateSplit, EmptyMatrix, ZeroVarianceColumn
from conftest import full_record


def _matrix(features, labels=None, feature_set=FeatureSet.FOUR_PARAM_NO_AGE):
    features = np.asarray(features, dtype=np.float64)
    if labels is not None:
        labels = np.asarray(labels, dtype=np.int64)
    return FeatureMatrix(features=features, labels=labels, feature_set=feature_set)


def test_assemble_column_order():
    record = full_record(21.0, 50.0, 0.7, 1.2, 30.0, Preference.NO_CHANGE)
    m = assemble_features(RecordSet(records=(record,)), FeatureSet.FIVE_PARAM)
    assert m.columns == ("air_temperature", "relative_humidity",
                         "clothing_insulation", "metabolic_rate", "age")
    assert m.features.tolist() == [[21.0, 50.0, 0.7, 1.2, 30.0]]
    assert m.labels.tolist() == [0]


def test_assemble_drop_rules():
    rows = (
        full_record(21.0, 50.0, 0.7, 1.2, 30.0, Preference.NO_CHANGE),
        full_record(22.0, 50.0, 0.7, 1.2, None, Preference.COOLER),  # no age
        full_record(23.0, 50.0, 0.7, 1.2, 40.0, None),               # no label
        full_record(None, 50.0, 0.7, 1.2, 40.0, Preference.WARMER),  # no temp
    )
    record_set = RecordSet(records=rows)

    five = assemble_features(record_set, FeatureSet.FIVE_PARAM)
    assert len(five) == 1 and five.dropped_rows == 3

    four = assemble_features(record_set, FeatureSet.FOUR_PARAM_NO_AGE)
    assert len(four) == 2 and four.dropped_rows == 2
    assert four.features.shape[1] == 4
    assert four.labels.tolist() == [0, 1]


def test_assemble_raises_on_empty():
    record = full_record(21.0, 50.0, 0.7, 1.2, 30.0, None)
    with pytest.raises(EmptyMatrix):
        assemble_features(RecordSet(records=(record,)), FeatureSet.FIVE_PARAM)


def test_fixture_assemble_counts(survey_records):
    filtered, _ = filter_dataset(survey_records, "fixture")
    five = assemble_features(filtered, FeatureSet.FIVE_PARAM)
    assert (len(five), five.dropped_rows) == (84, 3)
    four = assemble_features(filtered, FeatureSet.FOUR_PARAM_NO_AGE)
    assert (len(four), four.dropped_rows) == (86, 1)


def test_standardize_simple_column():
    m = _matrix([[1.0, 10.0], [2.0, 20.0], [3.0, 30.0]])
    out, stats = standardize(m)
    assert out.features[:, 0].tolist() == [-1.0, 0.0, 1.0]
    assert stats.mean.tolist() == [2.0, 20.0]
    assert stats.std.tolist() == [1.0, 10.0]


def test_standardize_zero_variance_column():
    m = _matrix([[1.0, 5.0], [2.0, 5.0], [3.0, 5.0]])
    with pytest.raises(ZeroVarianceColumn):
        standardize(m)


def test_standardize_reapplies_training_stats():
    rng = np.random.default_rng(0)
    train = _matrix(rng.normal(5.0, 2.0, size=(200, 3)))
    test = _matrix(rng.normal(7.0, 2.0, size=(50, 3)))  # shifted
    train_std, stats = standardize(train)
    assert np.allclose(train_std.features.mean(axis=0), 0.0, atol=1e-12)
    assert np.allclose(train_std.features.std(axis=0, ddof=1), 1.0, atol=1e-12)

    test_std, stats_back = standardize(test, stats)
    assert stats_back is stats
    # The shift survives: test means land near +1 sigma, not at zero.
    assert test_std.features.mean(axis=0).min() > 0.5


def test_standardize_stats_width_mismatch():
    m = _matrix([[1.0, 2.0], [3.0, 4.0]])
    with pytest.raises(ValueError):
        standardize(m, StandardizationStats.identity(5))


def test_identity_stats_are_a_no_op():
    m = _matrix([[1.0, 2.0], [3.0, 4.0]])
    out, _ = standardize(m, StandardizationStats.identity(2))
    assert np.array_equal(out.features, m.features)


def test_split_sizes():
    m = _matrix(np.arange(400.0).reshape(100, 4), labels=np.zeros(100))
    train, val, test = split(m, (0.7, 0.15, 0.15), seed=0)
    assert (len(train), len(val), len(test)) == (70, 15, 15)

    all_train, no_val, no_test = split(m, (1.0, 0.0, 0.0), seed=0)
    assert (len(all_train), len(no_val), len(no_test)) == (100, 0, 0)


def test_split_is_a_partition_and_keeps_pairing():
    features = np.arange(100.0).reshape(100, 1)
    labels = (np.arange(100) % 3) - 1
    m = _matrix(features, labels=labels)
    parts = split(m, (0.7, 0.15, 0.15), seed=7)
    seen = np.concatenate([p.features[:, 0] for p in parts])
    assert sorted(seen.tolist()) == features[:, 0].tolist()
    for part in parts:
        for x, y in zip(part.features[:, 0], part.labels):
            assert y == (int(x) % 3) - 1


def test_split_is_seed_deterministic():
    m = _matrix(np.arange(200.0).reshape(50, 4), labels=np.arange(50))
    a = split(m, (0.7, 0.15, 0.15), seed=11)
    b = split(m, (0.7, 0.15, 0.15), seed=11)
    c = split(m, (0.7, 0.15, 0.15), seed=12)
    for x, y in zip(a, b):
        assert np.array_equal(x.features, y.features)
        assert np.array_equal(x.labels, y.labels)
    assert not np.array_equal(a[0].features, c[0].features)


def test_split_unlabeled_matrix_keeps_labels_none():
    m = _matrix(np.arange(40.0).reshape(10, 4))
    for part in split(m, (0.7, 0.15, 0.15), seed=0):
        assert part.labels is None


def test_degenerate_splits():
    m = _matrix(np.arange(12.0).reshape(3, 4), labels=np.zeros(3))
    with pytest.raises(DegenerateSplit):
        split(m, (0.5, 0.3, 0.3), seed=0)  # sums past 1
    with pytest.raises(DegenerateSplit):
        split(m, (0.34, 0.33, 0.33), seed=0)  # floors to an empty split


def test_feature_column_tables():
    assert FEATURE_COLUMNS[FeatureSet.FIVE_PARAM][-1] == "age"
    assert "age" not in FEATURE_COLUMNS[FeatureSet.FOUR_PARAM_NO_AGE]
