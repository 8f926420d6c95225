"""Exception hierarchy for the comfort-forge pipeline."""


class ComfortForgeError(Exception):
    """Base class for all pipeline errors."""


class MappingColumnAbsent(ComfortForgeError):
    """A column named in a mapping is not present in the CSV header."""

    def __init__(self, name: str):
        super().__init__(f"mapped column not found in header: {name!r}")
        self.name = name


class MappingInvalid(ComfortForgeError):
    """A mapping file could not be parsed."""


class InvalidRuleId(ComfortForgeError):
    """Consistency rule ids are 1 through 5."""


class InvalidAxis(ComfortForgeError):
    """Grid axis with non-positive step or start beyond end."""


class GridTooLarge(ComfortForgeError):
    """Requested grid exceeds the configured row cap."""


class TargetExceedsPopulation(ComfortForgeError):
    """Subsample target larger than the population."""


class EmptyMatrix(ComfortForgeError):
    """No rows survived feature assembly."""


class ZeroVarianceColumn(ComfortForgeError):
    """A feature column is constant; standardization is undefined."""

    def __init__(self, column: int):
        super().__init__(f"column {column} has zero variance")
        self.column = column


class DegenerateSplit(ComfortForgeError):
    """A split partition would be empty despite a positive fraction."""


class SingleClassTrainingSet(ComfortForgeError):
    """Training labels contain a single class."""


class NonFiniteLoss(ComfortForgeError):
    """Training loss became NaN or infinite."""


class FeatureSetMismatch(ComfortForgeError):
    """Feature matrix does not match the model's feature set."""


class EmptyEvaluationSet(ComfortForgeError):
    """Evaluation requested on zero rows."""


class VersionMismatch(ComfortForgeError):
    """Model file written by an incompatible format version."""


class CorruptFile(ComfortForgeError):
    """Model file is truncated or not a model file at all."""


class OutOfSupportedRange(ComfortForgeError):
    """Psychrometric input outside the supported temperature range."""


class SaturationExceedsTotalPressure(ComfortForgeError):
    """Vapor pressure at or above total pressure; humidity ratio undefined."""


class EmptyPointSet(ComfortForgeError):
    """Chart rendering requested with no points."""


class EmptyValueList(ComfortForgeError):
    """Parametric sweep requested with no values."""


class ConfigInvalid(ComfortForgeError):
    """Pipeline configuration failed validation."""


class MissingArtifact(ComfortForgeError):
    """A command needs an upstream artifact that does not exist."""

    def __init__(self, path: str):
        super().__init__(f"missing artifact: {path}")
        self.path = path
