"""Thermal comfort pipeline: survey data in, validated comfort maps out.

The package turns the two public ASHRAE thermal comfort databases into
3-class training data (warmer / no change / cooler), cleans it with five
vote-consistency rules, optionally balances the minority classes with
grid-generated synthetic rows, trains a battery of fifteen shallow
classifiers, and validates the result on psychrometric charts instead of
trusting holdout accuracy alone.
"""

from .augment import (
    DEFAULT_ROW_CAP,
    AugmentationRanges,
    GridAxis,
    balance_subsample,
    generate_augmentation,
    grid_count,
    grid_values,
)
from .charts import ChartDocument, parametric_sweep, points_from_records, render_chart
from .classifiers import (
    METHODS,
    SPECS,
    ClassifierSpec,
    TrainedModel,
    classifier_spec,
    load_model,
    nn_gradient,
    nn_loss,
    predict,
    save_model,
    train,
)
from .config import DatasetConfig, PipelineConfig, config_from_dict, config_to_dict
from .errors import ComfortForgeError
from .evaluation import EvalMode, EvalReport, confusion_matrix, evaluate
from .features import (
    FEATURE_COLUMNS,
    FeatureMatrix,
    FeatureSet,
    StandardizationStats,
    assemble_features,
    split,
    standardize,
)
from .filtering import RULE_IDS, FilterReport, Verdict, evaluate_rule, filter_dataset
from .ingest import (
    LoadReport,
    MissingReport,
    file_fingerprint,
    load_dataset,
    missing_data_report,
    round_half_up_pct,
)
from .mappings import ColumnMapping, load_bundled_mapping, parse_mapping
from .psychro import (
    GridSpec,
    PsychroPoint,
    classify_grid,
    comfort_band,
    generate_grid,
    humidity_ratio,
    saturation_pressure,
)
from .records import (
    CLASS_LABELS,
    CLASS_NAMES,
    RECORD_FIELDS,
    ComfortRecord,
    Preference,
    RecordSet,
    Source,
    derive_label,
    read_records_csv,
    write_records_csv,
)

__version__ = "1.0.0"

__all__ = [
    "AugmentationRanges",
    "CLASS_LABELS",
    "CLASS_NAMES",
    "ChartDocument",
    "ClassifierSpec",
    "ColumnMapping",
    "ComfortForgeError",
    "ComfortRecord",
    "DEFAULT_ROW_CAP",
    "DatasetConfig",
    "EvalMode",
    "EvalReport",
    "FEATURE_COLUMNS",
    "FeatureMatrix",
    "FeatureSet",
    "FilterReport",
    "GridAxis",
    "GridSpec",
    "LoadReport",
    "METHODS",
    "MissingReport",
    "PipelineConfig",
    "Preference",
    "PsychroPoint",
    "RECORD_FIELDS",
    "RULE_IDS",
    "RecordSet",
    "Source",
    "SPECS",
    "StandardizationStats",
    "TrainedModel",
    "Verdict",
    "assemble_features",
    "balance_subsample",
    "classifier_spec",
    "classify_grid",
    "comfort_band",
    "config_from_dict",
    "config_to_dict",
    "confusion_matrix",
    "derive_label",
    "evaluate",
    "evaluate_rule",
    "file_fingerprint",
    "filter_dataset",
    "generate_augmentation",
    "generate_grid",
    "grid_count",
    "grid_values",
    "humidity_ratio",
    "load_bundled_mapping",
    "load_dataset",
    "load_model",
    "missing_data_report",
    "nn_gradient",
    "nn_loss",
    "parametric_sweep",
    "parse_mapping",
    "points_from_records",
    "predict",
    "read_records_csv",
    "render_chart",
    "round_half_up_pct",
    "saturation_pressure",
    "save_model",
    "split",
    "standardize",
    "train",
    "write_records_csv",
]
