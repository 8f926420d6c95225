"""Survey record schema, label derivation, and the canonical CSV round trip.

One ComfortRecord holds the measured indoor environment plus the occupant's
subjective votes for a single survey entry. Missing values are ``None``
everywhere; nothing is ever clamped or imputed at this layer.
"""

import csv
import enum
import io
from dataclasses import dataclass, field, fields, replace


class Preference(enum.Enum):
    """Desired temperature change reported by the occupant."""

    WARMER = "warmer"
    NO_CHANGE = "no change"
    COOLER = "cooler"


class Source(enum.Enum):
    RP884 = "RP884"
    DATABASE_II = "DatabaseII"
    AUGMENTED = "Augmented"


# Training target: -1 wants it warmer, 0 is satisfied, +1 wants it cooler.
LABEL_BY_PREFERENCE = {
    Preference.WARMER: -1,
    Preference.NO_CHANGE: 0,
    Preference.COOLER: 1,
}
CLASS_NAMES = {-1: "warmer", 0: "no change", 1: "cooler"}
CLASS_LABELS = (-1, 0, 1)


@dataclass(frozen=True, slots=True)
class ComfortRecord:
    """A single survey entry; every field other than ``source`` may be missing."""

    air_temperature: float | None = None      # degrees C
    relative_humidity: float | None = None    # percent, 0..100
    clothing_insulation: float | None = None  # clo
    metabolic_rate: float | None = None       # met
    age: float | None = None                  # years
    thermal_sensation: float | None = None    # -3..+3
    thermal_acceptability: float | None = None  # exactly 0 or 1
    thermal_preference: Preference | None = None
    thermal_comfort: float | None = None      # 1 (very uncomfortable)..6
    source: Source = Source.RP884
    extras: tuple[tuple[str, str], ...] = ()  # unmodeled columns, passed through

    def violations(self) -> list[str]:
        """Range violations that make this row unloadable (never clamped)."""
        out = []
        s = self.thermal_sensation
        if s is not None and not -3.0 <= s <= 3.0:
            out.append(f"thermal_sensation {s} outside [-3, 3]")
        rh = self.relative_humidity
        if rh is not None and not 0.0 <= rh <= 100.0:
            out.append(f"relative_humidity {rh} outside [0, 100]")
        c = self.thermal_comfort
        if c is not None and not 1.0 <= c <= 6.0:
            out.append(f"thermal_comfort {c} outside [1, 6]")
        a = self.thermal_acceptability
        if a is not None and a not in (0.0, 1.0):
            out.append(f"thermal_acceptability {a} not exactly 0 or 1")
        return out


# Data fields in canonical CSV column order (source comes after these).
RECORD_FIELDS = (
    "air_temperature",
    "relative_humidity",
    "clothing_insulation",
    "metabolic_rate",
    "age",
    "thermal_sensation",
    "thermal_acceptability",
    "thermal_preference",
    "thermal_comfort",
)

NUMERIC_FIELDS = tuple(f for f in RECORD_FIELDS if f != "thermal_preference")


def derive_label(record: ComfortRecord) -> int | None:
    """Map the preference vote to the 3-class training label, or None."""
    if record.thermal_preference is None:
        return None
    return LABEL_BY_PREFERENCE[record.thermal_preference]


@dataclass(frozen=True, slots=True)
class Provenance:
    """Where a record set came from; ``loaded_at`` stays out of artifacts."""

    path: str = ""
    mapping_id: str = ""
    loaded_at: str = ""
    fingerprint: str = ""


@dataclass(frozen=True)
class RecordSet:
    """Ordered, immutable collection of records in source-file order."""

    records: tuple[ComfortRecord, ...]
    provenance: Provenance = field(default_factory=Provenance)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __getitem__(self, i):
        return self.records[i]

    def label_counts(self) -> dict[int, int]:
        counts = {-1: 0, 0: 0, 1: 0}
        for r in self.records:
            label = derive_label(r)
            if label is not None:
                counts[label] += 1
        return counts

    def with_records(self, records) -> "RecordSet":
        return replace(self, records=tuple(records))


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, Preference):
        return value.value
    if isinstance(value, Source):
        return value.value
    return repr(float(value))


def write_records_csv(record_set: RecordSet, path) -> None:
    """Serialize to the canonical schema; floats use repr so the round trip
    is bit-identical."""
    with open(path, "w", newline="") as fh:
        fh.write(records_to_csv(record_set))


def records_to_csv(record_set: RecordSet) -> str:
    extra_keys = sorted({k for r in record_set for k, _ in r.extras})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(RECORD_FIELDS) + ["source"] + extra_keys)
    for r in record_set:
        row = [_format_cell(getattr(r, f)) for f in RECORD_FIELDS]
        row.append(r.source.value)
        extras = dict(r.extras)
        row.extend(extras.get(k, "") for k in extra_keys)
        writer.writerow(row)
    return buf.getvalue()


def read_records_csv(path) -> RecordSet:
    """Read a canonical CSV written by :func:`write_records_csv`."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            return RecordSet(records=(), provenance=Provenance(path=str(path)))
        index = {name: i for i, name in enumerate(header)}
        known = set(RECORD_FIELDS) | {"source"}
        extra_cols = [name for name in header if name not in known]
        records = []
        for row in reader:
            kwargs = {}
            for name in RECORD_FIELDS:
                i = index.get(name)
                cell = row[i].strip() if i is not None and i < len(row) else ""
                if cell == "":
                    kwargs[name] = None
                elif name == "thermal_preference":
                    kwargs[name] = Preference(cell)
                else:
                    kwargs[name] = float(cell)
            src = row[index["source"]] if "source" in index else Source.RP884.value
            kwargs["source"] = Source(src)
            extras = tuple(
                (name, row[index[name]])
                for name in extra_cols
                if index[name] < len(row) and row[index[name]] != ""
            )
            records.append(ComfortRecord(extras=extras, **kwargs))
    return RecordSet(records=tuple(records), provenance=Provenance(path=str(path)))
