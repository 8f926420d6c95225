"""Column mappings: how a foreign survey CSV maps onto the record schema.

Mapping files are flat ``key = value`` text (``#`` starts a comment):

    source = DatabaseII
    column.air_temperature = Air temperature (C)
    column.thermal_preference = Thermal preference
    na_token = NA            # repeatable; the empty cell is always missing
    preference.want warmer = warmer   # optional raw-string -> class table

Keys split on the first ``=``; values keep their internal spaces. Fields
without a ``column.`` entry load as missing. Preference cells first go
through the mapping's ``preference.`` table (trimmed, exact match), then
through case-insensitive matching of the three canonical names; anything
else is a diagnostic and loads as missing.
"""

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import MappingInvalid
from .records import RECORD_FIELDS, Preference, Source

DEFAULT_NA_TOKENS = ("", "NA", "na")

_CANONICAL_PREFERENCE = {p.value: p for p in Preference}


@dataclass(frozen=True)
class ColumnMapping:
    """Per-field source-column names plus value-normalization rules."""

    mapping_id: str
    source: Source
    columns: dict[str, str] = field(default_factory=dict)
    na_tokens: tuple[str, ...] = DEFAULT_NA_TOKENS
    preference_values: dict[str, Preference] = field(default_factory=dict)

    def normalize_preference(self, raw: str) -> Preference | None:
        """Resolve a raw preference cell; None means no match (diagnostic)."""
        trimmed = raw.strip()
        if trimmed in self.preference_values:
            return self.preference_values[trimmed]
        return _CANONICAL_PREFERENCE.get(trimmed.casefold())


def parse_mapping(path) -> ColumnMapping:
    """Parse a mapping file; raises MappingInvalid on bad keys or values."""
    path = Path(path)
    columns: dict[str, str] = {}
    na_tokens: list[str] = [""]
    preference_values: dict[str, Preference] = {}
    source = None
    for lineno, raw_line in enumerate(path.read_text().splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise MappingInvalid(f"{path}:{lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key == "source":
            try:
                source = Source(value)
            except ValueError:
                raise MappingInvalid(f"{path}:{lineno}: unknown source {value!r}") from None
        elif key == "na_token":
            na_tokens.append(value)
        elif key.startswith("column."):
            record_field = key[len("column."):]
            if record_field not in RECORD_FIELDS:
                raise MappingInvalid(f"{path}:{lineno}: unknown field {record_field!r}")
            if record_field in columns:
                raise MappingInvalid(f"{path}:{lineno}: field {record_field!r} mapped twice")
            columns[record_field] = value
        elif key.startswith("preference."):
            raw = key[len("preference."):].strip()
            try:
                preference_values[raw] = Preference(value.casefold())
            except ValueError:
                raise MappingInvalid(f"{path}:{lineno}: unknown class {value!r}") from None
        else:
            raise MappingInvalid(f"{path}:{lineno}: unknown key {key!r}")
    if source is None:
        raise MappingInvalid(f"{path}: missing required 'source' key")
    if not columns:
        raise MappingInvalid(f"{path}: no column.* entries")
    return ColumnMapping(
        mapping_id=path.stem,
        source=source,
        columns=columns,
        na_tokens=tuple(dict.fromkeys(na_tokens + list(DEFAULT_NA_TOKENS))),
        preference_values=preference_values,
    )


def bundled_mapping_path(name: str) -> Path:
    """Path of a mapping shipped with the package (e.g. ``database_ii``)."""
    return Path(str(resources.files("comfort_forge").joinpath("data", f"{name}.mapping")))


def load_bundled_mapping(name: str) -> ColumnMapping:
    return parse_mapping(bundled_mapping_path(name))
