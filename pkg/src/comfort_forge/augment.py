"""Semantic grid augmentation for the two temperature-direction classes.

Synthetic rows are generated only in the temperature regions each class
semantically owns: at or below 10 degrees C for "warmer", at or above
40 degrees C for "cooler". The band in between, where the real survey
data lives, is structurally untouchable, so augmentation can never
contradict a measured record. The "no change" class is never augmented.
"""

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import GridTooLarge, InvalidAxis, TargetExceedsPopulation
from .records import ComfortRecord, Preference, Provenance, RecordSet, Source

# Enumeration tolerance: index-based values (start + k*step) keep binary
# representation error from dropping the final grid point.
_EPS = 1e-9

WARMER_TEMP_CEILING = 10.0
COOLER_TEMP_FLOOR = 40.0


@dataclass(frozen=True)
class GridAxis:
    """Inclusive [start, end] swept by a fixed positive step."""

    start: float
    end: float
    step: float

    def validate(self) -> None:
        if not (self.step > 0):
            raise InvalidAxis(f"step must be > 0, got {self.step}")
        if self.start > self.end:
            raise InvalidAxis(f"start {self.start} beyond end {self.end}")


def grid_count(axis: GridAxis) -> int:
    """Number of values start + k*step that fit within end (+ tolerance)."""
    axis.validate()
    return math.floor((axis.end - axis.start) / axis.step + _EPS) + 1


def grid_values(axis: GridAxis) -> np.ndarray:
    """The enumerated axis values, computed by index, never by running sum."""
    n = grid_count(axis)
    return axis.start + axis.step * np.arange(n, dtype=np.float64)


@dataclass(frozen=True)
class AugmentationRanges:
    """Per-dimension grids; the two temperature axes are class-specific."""

    clo: GridAxis = GridAxis(0.0, 2.89, 0.5)
    met: GridAxis = GridAxis(0.65, 6.83, 1.0)
    temp_cooler: GridAxis = GridAxis(40.0, 63.2, 2.0)
    temp_warmer: GridAxis = GridAxis(0.0, 10.0, 2.0)
    rh: GridAxis = GridAxis(0.4, 100.0, 10.0)
    age: GridAxis = GridAxis(6.0, 99.0, 15.0)

    def validate(self) -> None:
        for axis in (self.clo, self.met, self.temp_cooler, self.temp_warmer,
                     self.rh, self.age):
            axis.validate()
        # Non-overlap with the real data's temperature band is structural.
        if self.temp_warmer.end > WARMER_TEMP_CEILING:
            raise InvalidAxis(
                f"warmer grid must stay at or below {WARMER_TEMP_CEILING} C")
        if self.temp_cooler.start < COOLER_TEMP_FLOOR:
            raise InvalidAxis(
                f"cooler grid must start at or above {COOLER_TEMP_FLOOR} C")

    def temp_axis(self, preference: Preference) -> GridAxis:
        if preference is Preference.WARMER:
            return self.temp_warmer
        if preference is Preference.COOLER:
            return self.temp_cooler
        raise ValueError("only the warmer and cooler classes are augmented")

    def with_steps(self, clo=None, met=None, temp=None, rh=None, age=None) -> "AugmentationRanges":
        """Copy with per-axis step overrides (None keeps the default)."""
        def restep(axis: GridAxis, step):
            return axis if step is None else replace(axis, step=float(step))
        return AugmentationRanges(
            clo=restep(self.clo, clo),
            met=restep(self.met, met),
            temp_cooler=restep(self.temp_cooler, temp),
            temp_warmer=restep(self.temp_warmer, temp),
            rh=restep(self.rh, rh),
            age=restep(self.age, age),
        )


DEFAULT_ROW_CAP = 5_000_000


def generate_augmentation(
    ranges: AugmentationRanges,
    preference: Preference,
    row_cap: int = DEFAULT_ROW_CAP,
) -> RecordSet:
    """Cartesian grid of synthetic rows for one class.

    Nesting order is clo (outermost), met, temperature, relative humidity,
    age (innermost). Every row carries the class as its preference vote and
    no sensation/acceptability/comfort votes at all. Deterministic: a pure
    function of its arguments.
    """
    ranges.validate()
    temp_axis = ranges.temp_axis(preference)
    axes = (ranges.clo, ranges.met, temp_axis, ranges.rh, ranges.age)
    counts = [grid_count(axis) for axis in axes]
    total = math.prod(counts)
    if total > row_cap:
        raise GridTooLarge(f"grid would have {total} rows (cap {row_cap})")

    clo_v, met_v, temp_v, rh_v, age_v = (grid_values(axis) for axis in axes)
    records = []
    for clo in clo_v:
        for met in met_v:
            for temp in temp_v:
                for rh in rh_v:
                    for age in age_v:
                        records.append(ComfortRecord(
                            air_temperature=float(temp),
                            relative_humidity=float(rh),
                            clothing_insulation=float(clo),
                            metabolic_rate=float(met),
                            age=float(age),
                            thermal_preference=preference,
                            source=Source.AUGMENTED,
                        ))
    provenance = Provenance(mapping_id=f"augmented:{preference.value}")
    return RecordSet(records=tuple(records), provenance=provenance)


def balance_subsample(record_set: RecordSet, target_count: int, seed: int) -> RecordSet:
    """Uniform without-replacement subsample keeping original row order."""
    n = len(record_set)
    if target_count > n:
        raise TargetExceedsPopulation(f"target {target_count} > population {n}")
    rng = np.random.default_rng(seed)
    indices = np.sort(rng.choice(n, size=target_count, replace=False))
    return record_set.with_records(record_set[i] for i in indices)
