"""Load foreign survey CSVs into record sets and report missing data.

Loading never clamps: cells that fail to parse (or match an NA token)
become missing, while rows whose votes violate the schema ranges are
rejected whole, each with a diagnostic.
"""

import csv
import datetime
import hashlib
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path

from .errors import MappingColumnAbsent
from .mappings import ColumnMapping
from .records import (
    NUMERIC_FIELDS,
    RECORD_FIELDS,
    ComfortRecord,
    Provenance,
    RecordSet,
)


@dataclass(frozen=True)
class RowDiagnostic:
    """One per-row problem; ``row`` is the 1-based data-row number."""

    row: int
    kind: str  # "rejected" | "unparseable" | "unknown_preference"
    detail: str


@dataclass
class LoadReport:
    """What happened during a load: counts plus collected diagnostics."""

    path: str
    mapping_id: str
    total_rows: int = 0
    loaded_rows: int = 0
    rejected_rows: int = 0
    missing_counts: dict[str, int] = field(default_factory=dict)
    diagnostics: list[RowDiagnostic] = field(default_factory=list)


def file_fingerprint(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def load_dataset(path, mapping: ColumnMapping) -> tuple[RecordSet, LoadReport]:
    """Parse one CSV into a RecordSet using ``mapping``.

    Returns the records (source-file order) and a LoadReport with row
    counts, per-field missing counts, and all diagnostics. Raises
    FileNotFoundError for a missing file and MappingColumnAbsent when the
    mapping names a column the header does not have.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(str(path))
    report = LoadReport(path=str(path), mapping_id=mapping.mapping_id)
    report.missing_counts = {name: 0 for name in RECORD_FIELDS}
    na_tokens = set(mapping.na_tokens)

    with open(path, newline="", encoding="utf-8-sig", errors="replace") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            header = []
        header = [h.strip() for h in header]
        index = {}
        for record_field, column in mapping.columns.items():
            if column not in header:
                raise MappingColumnAbsent(column)
            index[record_field] = header.index(column)
        mapped_positions = set(index.values())
        extra_cols = [
            (i, name) for i, name in enumerate(header)
            if i not in mapped_positions and name
        ]

        records = []
        for row_no, row in enumerate(reader, start=1):
            report.total_rows += 1
            kwargs = {}
            row_missing = []
            for record_field in RECORD_FIELDS:
                pos = index.get(record_field)
                cell = row[pos].strip() if pos is not None and pos < len(row) else ""
                if pos is None or cell in na_tokens:
                    kwargs[record_field] = None
                    row_missing.append(record_field)
                elif record_field == "thermal_preference":
                    pref = mapping.normalize_preference(cell)
                    if pref is None:
                        report.diagnostics.append(RowDiagnostic(
                            row_no, "unknown_preference",
                            f"thermal_preference {cell!r} not a known class"))
                        row_missing.append(record_field)
                    kwargs[record_field] = pref
                else:
                    try:
                        kwargs[record_field] = float(cell)
                    except ValueError:
                        report.diagnostics.append(RowDiagnostic(
                            row_no, "unparseable",
                            f"{record_field} cell {cell!r} is not numeric"))
                        kwargs[record_field] = None
                        row_missing.append(record_field)
            extras = tuple(
                (name, row[i].strip()) for i, name in extra_cols
                if i < len(row) and row[i].strip() not in na_tokens
            )
            record = ComfortRecord(source=mapping.source, extras=extras, **kwargs)
            problems = record.violations()
            if problems:
                report.rejected_rows += 1
                report.diagnostics.append(
                    RowDiagnostic(row_no, "rejected", "; ".join(problems)))
                continue
            for name in row_missing:
                report.missing_counts[name] += 1
            records.append(record)

    report.loaded_rows = len(records)
    provenance = Provenance(
        path=str(path),
        mapping_id=mapping.mapping_id,
        loaded_at=datetime.datetime.now(datetime.timezone.utc).isoformat(),
        fingerprint=file_fingerprint(path),
    )
    return RecordSet(records=tuple(records), provenance=provenance), report


def round_half_up_pct(count: int, total: int) -> float:
    """Percentage at 2 decimals, ties away from zero; 0 when total is 0."""
    if total == 0:
        return 0.0
    ratio = Decimal(count) * 100 / Decimal(total)
    return float(ratio.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


@dataclass
class MissingReport:
    """Per-field missing counts and percentages over a record set."""

    total_rows: int
    missing_counts: dict[str, int]
    missing_percentages: dict[str, float]
    dataset_name: str = ""


def missing_data_report(record_set: RecordSet, dataset_name: str = "") -> MissingReport:
    """Count missing values per field; percentages are round-half-up 2 dp."""
    total = len(record_set)
    counts = {name: 0 for name in RECORD_FIELDS}
    for record in record_set:
        for name in RECORD_FIELDS:
            if getattr(record, name) is None:
                counts[name] += 1
    percentages = {name: round_half_up_pct(counts[name], total) for name in counts}
    return MissingReport(
        total_rows=total,
        missing_counts=counts,
        missing_percentages=percentages,
        dataset_name=dataset_name,
    )


__all__ = [
    "LoadReport",
    "MissingReport",
    "RowDiagnostic",
    "file_fingerprint",
    "load_dataset",
    "missing_data_report",
    "round_half_up_pct",
    "NUMERIC_FIELDS",
]
