"""Run configuration: one JSON document drives every pipeline command.

The effective config (defaults merged with file and flag overrides) is
written next to a run's outputs so a run can be reproduced from its
artifacts alone.
"""

from dataclasses import asdict, dataclass, field, replace

from .classifiers import METHODS
from .errors import ConfigInvalid

DEFAULT_SPLIT = (0.7, 0.15, 0.15)
DEFAULT_GRID = (10.0, 40.0, 0.25, 0.0, 100.0, 1.0)
DEFAULT_AUGMENT_STEPS = {"clo": 0.5, "met": 1.0, "temp": 2.0, "rh": 10.0, "age": 15.0}

FEATURE_SET_IDS = ("five", "four")


@dataclass(frozen=True)
class DatasetConfig:
    """One survey CSV plus the column mapping used to read it."""

    path: str
    mapping: str          # bundled mapping name or path to a .mapping file
    name: str = ""        # display name in reports; defaults to the path

    def display_name(self) -> str:
        return self.name or self.path


@dataclass(frozen=True)
class PipelineConfig:
    datasets: tuple = ()
    apply_filter: bool = True
    feature_set: str = "five"
    methods: tuple = METHODS
    split_fractions: tuple = DEFAULT_SPLIT
    seed: int = 0
    augment_ratio: float = 1.0          # multiplier on the per-class deficit
    augment_steps: dict = field(default_factory=lambda: dict(DEFAULT_AUGMENT_STEPS))
    grid: tuple = DEFAULT_GRID          # tmin, tmax, tstep, rhmin, rhmax, rhstep
    fixed: dict = field(default_factory=dict)  # clo/met/age; absent -> training medians
    out_dir: str = "out"

    def validate(self) -> None:
        if self.feature_set not in FEATURE_SET_IDS:
            raise ConfigInvalid(
                f"feature_set must be one of {FEATURE_SET_IDS}, got {self.feature_set!r}")
        unknown = [m for m in self.methods if m not in METHODS]
        if unknown:
            raise ConfigInvalid(f"unknown methods: {', '.join(unknown)}")
        if not self.methods:
            raise ConfigInvalid("methods list is empty")
        if len(self.split_fractions) != 3:
            raise ConfigInvalid("split_fractions must be (train, val, test)")
        if any(f < 0 for f in self.split_fractions):
            raise ConfigInvalid("split fractions must be nonnegative")
        if abs(sum(self.split_fractions) - 1.0) > 1e-9:
            raise ConfigInvalid("split fractions must sum to 1")
        if self.augment_ratio < 0:
            raise ConfigInvalid("augment_ratio must be nonnegative")
        for key in DEFAULT_AUGMENT_STEPS:
            step = self.augment_steps.get(key)
            if step is None or not step > 0:
                raise ConfigInvalid(f"augment step {key!r} must be positive")
        extra = set(self.augment_steps) - set(DEFAULT_AUGMENT_STEPS)
        if extra:
            raise ConfigInvalid(f"unknown augment step keys: {sorted(extra)}")
        if len(self.grid) != 6:
            raise ConfigInvalid("grid must be (tmin, tmax, tstep, rhmin, rhmax, rhstep)")
        tmin, tmax, tstep, rhmin, rhmax, rhstep = self.grid
        if not (tmax >= tmin and tstep > 0 and rhmax >= rhmin and rhstep > 0):
            raise ConfigInvalid("grid ranges must be ordered with positive steps")
        extra = set(self.fixed) - {"clo", "met", "age"}
        if extra:
            raise ConfigInvalid(f"unknown fixed value keys: {sorted(extra)}")
        for dataset in self.datasets:
            if not dataset.path:
                raise ConfigInvalid("dataset path must be nonempty")
            if not dataset.mapping:
                raise ConfigInvalid("dataset mapping must be nonempty")


def config_to_dict(config: PipelineConfig) -> dict:
    doc = asdict(config)
    doc["datasets"] = [asdict(d) for d in config.datasets]
    doc["methods"] = list(config.methods)
    doc["split_fractions"] = list(config.split_fractions)
    doc["grid"] = list(config.grid)
    return doc


def config_from_dict(doc: dict) -> PipelineConfig:
    if not isinstance(doc, dict):
        raise ConfigInvalid("config document must be a JSON object")
    known = {f for f in PipelineConfig.__dataclass_fields__}
    unknown = set(doc) - known
    if unknown:
        raise ConfigInvalid(f"unknown config keys: {sorted(unknown)}")
    kwargs = dict(doc)
    try:
        if "datasets" in kwargs:
            kwargs["datasets"] = tuple(
                DatasetConfig(**entry) for entry in kwargs["datasets"])
        for key in ("methods", "split_fractions", "grid"):
            if key in kwargs:
                kwargs[key] = tuple(kwargs[key])
        config = PipelineConfig(**kwargs)
    except (TypeError, ValueError) as exc:
        raise ConfigInvalid(f"malformed config: {exc}") from exc
    config.validate()
    return config


def merge_overrides(config: PipelineConfig, **overrides) -> PipelineConfig:
    """A new config with the non-None overrides applied, revalidated."""
    changes = {k: v for k, v in overrides.items() if v is not None}
    merged = replace(config, **changes) if changes else config
    merged.validate()
    return merged
