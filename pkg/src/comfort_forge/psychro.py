"""Psychrometric conversion and validation grids.

Saturation pressure uses the Arden Buck over-water fit, valid here for
-20..70 degC; humidity ratio follows W = 0.62198 * p_w / (P - p_w) at a
default total pressure of one standard atmosphere. Grids pair a swept
temperature x relative-humidity plane with fixed clothing, metabolic
rate, and (in five-parameter mode) age columns.
"""

from dataclasses import dataclass

import numpy as np

from .augment import DEFAULT_ROW_CAP, GridAxis, grid_count, grid_values
from .classifiers import TrainedModel, predict
from .errors import GridTooLarge, OutOfSupportedRange, SaturationExceedsTotalPressure
from .features import FEATURE_COLUMNS, FeatureMatrix, FeatureSet

STANDARD_PRESSURE_KPA = 101.325
MIN_TEMP_C = -20.0
MAX_TEMP_C = 70.0

# Constants documented on every humidity-ratio chart footer.
BUCK_FORMULA = "psat(T) = 0.61121*exp((18.678 - T/234.5)*(T/(257.14 + T))) kPa"
RATIO_FORMULA = "W = 0.62198*pw/(P - pw), pw = (rh/100)*psat(T)"


def saturation_pressure(temp_c):
    """Saturation vapor pressure over water in kPa (scalar or array)."""
    t = np.asarray(temp_c, dtype=np.float64)
    if np.any(t < MIN_TEMP_C) or np.any(t > MAX_TEMP_C):
        raise OutOfSupportedRange(
            f"temperature outside supported {MIN_TEMP_C}..{MAX_TEMP_C} degC range")
    p = 0.61121 * np.exp((18.678 - t / 234.5) * (t / (257.14 + t)))
    return float(p) if np.isscalar(temp_c) else p


def humidity_ratio(temp_c, rh, pressure_kpa: float = STANDARD_PRESSURE_KPA):
    """kg water per kg dry air at the given state (scalar or array)."""
    r = np.asarray(rh, dtype=np.float64)
    if np.any(r < 0.0) or np.any(r > 100.0):
        raise ValueError("relative humidity must be within 0..100")
    p_w = (r / 100.0) * saturation_pressure(np.asarray(temp_c, dtype=np.float64))
    if np.any(p_w >= pressure_kpa):
        raise SaturationExceedsTotalPressure(
            f"vapor pressure reaches total pressure {pressure_kpa} kPa")
    w = 0.62198 * p_w / (pressure_kpa - p_w)
    scalar = np.isscalar(temp_c) and np.isscalar(rh)
    return float(w) if scalar else w


@dataclass(frozen=True)
class GridSpec:
    """A temp x rh probe plane with fixed values for the other features."""

    clo: float
    met: float
    age: float | None = None
    temp: GridAxis = GridAxis(10.0, 40.0, 0.25)
    rh: GridAxis = GridAxis(0.0, 100.0, 1.0)
    feature_set: FeatureSet = FeatureSet.FIVE_PARAM

    def validate(self) -> None:
        self.temp.validate()
        self.rh.validate()
        fixed = [self.clo, self.met]
        if self.feature_set is FeatureSet.FIVE_PARAM:
            if self.age is None:
                raise ValueError("five-parameter grids need a fixed age value")
            fixed.append(self.age)
        if not all(np.isfinite(v) for v in fixed):
            raise ValueError("fixed clo/met/age values must be finite")


def generate_grid(spec: GridSpec, row_cap: int = DEFAULT_ROW_CAP) -> FeatureMatrix:
    """Cartesian temp (outer) x rh (inner) plane as an unlabeled matrix."""
    spec.validate()
    n_temp = grid_count(spec.temp)
    n_rh = grid_count(spec.rh)
    total = n_temp * n_rh
    if total > row_cap:
        raise GridTooLarge(f"grid would hold {total} rows, cap is {row_cap}")
    temps = grid_values(spec.temp)
    rhs = grid_values(spec.rh)
    columns = [
        np.repeat(temps, n_rh),
        np.tile(rhs, n_temp),
        np.full(total, float(spec.clo)),
        np.full(total, float(spec.met)),
    ]
    if spec.feature_set is FeatureSet.FIVE_PARAM:
        columns.append(np.full(total, float(spec.age)))
    assert len(columns) == len(FEATURE_COLUMNS[spec.feature_set])
    return FeatureMatrix(
        features=np.column_stack(columns),
        labels=None,
        feature_set=spec.feature_set,
        dropped_rows=0,
    )


@dataclass(frozen=True)
class PsychroPoint:
    """One probed state with its psychrometric y-coordinate and verdict."""

    temp_c: float
    rh: float
    ratio: float  # kg water / kg dry air
    label: int


def classify_grid(model: TrainedModel, spec: GridSpec,
                  pressure_kpa: float = STANDARD_PRESSURE_KPA,
                  row_cap: int = DEFAULT_ROW_CAP) -> list:
    """Predict over the grid and convert every row to a PsychroPoint."""
    grid = generate_grid(spec, row_cap=row_cap)
    labels = predict(model, grid)
    temps = grid.features[:, 0]
    rhs = grid.features[:, 1]
    ratios = humidity_ratio(temps, rhs, pressure_kpa)
    return [
        PsychroPoint(float(t), float(r), float(w), int(lab))
        for t, r, w, lab in zip(temps, rhs, ratios, labels)
    ]


def comfort_band(model: TrainedModel, rh: float, spec: GridSpec):
    """(t_min, t_max) predicted "no change" along the temp axis at fixed rh.

    Returns None when no temperature is comfortable. Endpoints are grid
    values: the scan never interpolates below the axis step.
    """
    spec.validate()
    if not (spec.rh.start <= rh <= spec.rh.end):
        raise ValueError(f"rh={rh} outside grid range {spec.rh.start}..{spec.rh.end}")
    temps = grid_values(spec.temp)
    columns = [temps, np.full(temps.size, float(rh)),
               np.full(temps.size, float(spec.clo)), np.full(temps.size, float(spec.met))]
    if spec.feature_set is FeatureSet.FIVE_PARAM:
        columns.append(np.full(temps.size, float(spec.age)))
    labels = predict(model, np.column_stack(columns))
    comfortable = temps[labels == 0]
    if comfortable.size == 0:
        return None
    return float(comfortable.min()), float(comfortable.max())
