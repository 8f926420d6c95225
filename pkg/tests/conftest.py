import os

import numpy as np
import pytest

from comfort_forge import (
    ComfortRecord,
    FeatureMatrix,
    FeatureSet,
    Preference,
    RecordSet,
    classifier_spec,
    load_dataset,
    parse_mapping,
    train,
)

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")
SURVEY_CSV = os.path.join(FIXTURES, "survey_100.csv")
SURVEY_MAPPING = os.path.join(FIXTURES, "survey.mapping")

# Real public database CSVs are looked up in COMFORT_FORGE_CACHE under
# fixed names; the integration tests skip cleanly when they are absent.
REAL_RP884 = "ashrae_rp884.csv"
REAL_DB2 = "ashrae_db2.csv"
REAL_RP884_MAPPING = "rp884.mapping"  # user-confirmed copy of the template


def real_data_paths():
    cache = os.environ.get("COMFORT_FORGE_CACHE")
    if not cache:
        return None
    rp884 = os.path.join(cache, REAL_RP884)
    db2 = os.path.join(cache, REAL_DB2)
    mapping = os.path.join(cache, REAL_RP884_MAPPING)
    if os.path.exists(rp884) and os.path.exists(db2) and os.path.exists(mapping):
        return {"rp884": rp884, "db2": db2, "rp884_mapping": mapping}
    return None


requires_real_data = pytest.mark.skipif(
    real_data_paths() is None,
    reason="public survey CSVs not found in COMFORT_FORGE_CACHE",
)


def vote_record(a=None, s=None, p=None, c=None, **features) -> ComfortRecord:
    """Record with just the subjective votes (and optional feature kwargs)."""
    return ComfortRecord(
        thermal_acceptability=a,
        thermal_sensation=s,
        thermal_preference=p,
        thermal_comfort=c,
        **features,
    )


def full_record(temp, rh, clo, met, age, preference: Preference, **votes) -> ComfortRecord:
    """Record with the five features and a class vote, ready for training."""
    return ComfortRecord(
        air_temperature=temp,
        relative_humidity=rh,
        clothing_insulation=clo,
        metabolic_rate=met,
        age=age,
        thermal_preference=preference,
        **votes,
    )


@pytest.fixture(scope="session")
def survey():
    """The 100-row fixture: (record_set, load_report)."""
    mapping = parse_mapping(SURVEY_MAPPING)
    return load_dataset(SURVEY_CSV, mapping)


@pytest.fixture(scope="session")
def survey_records(survey) -> RecordSet:
    return survey[0]


def temperature_tree_model():
    """Tree on temperature alone: warmer below 18, cooler above 26."""
    temps = np.array([10.0, 12.0, 14.0, 16.0, 20.0, 22.0, 24.0,
                      28.0, 30.0, 32.0])
    labels = np.array([-1, -1, -1, -1, 0, 0, 0, 1, 1, 1])
    rng = np.random.default_rng(0)
    features = np.column_stack([
        temps,
        rng.uniform(30.0, 70.0, temps.size),
        np.full(temps.size, 0.7),
        np.full(temps.size, 1.2),
        np.full(temps.size, 30.0),
    ])
    data = FeatureMatrix(features=features, labels=labels,
                         feature_set=FeatureSet.FIVE_PARAM)
    return train(classifier_spec("fine_tree"), data)
