"""Five-rule consistency filter over subjective vote fields.

Each rule compares two vote fields and marks a record consistent,
inconsistent, or not applicable (when any field the rule reads is
missing). A record is retained only when no rule finds it inconsistent;
not-applicable never filters. Acceptability takes part only when it is
exactly 0 or 1, and the comfort-vote comparisons against 1 and 6 are
exact numeric equality, so fractional comfort votes never trigger
rules 4 and 5.
"""

import enum
from dataclasses import dataclass, field

from .errors import InvalidRuleId
from .ingest import round_half_up_pct
from .records import ComfortRecord, Preference, RecordSet

RULE_IDS = (1, 2, 3, 4, 5)

# Which fields each rule reads (missing any of them -> NOT_APPLICABLE).
RULE_FIELDS = {
    1: ("thermal_acceptability", "thermal_preference"),
    2: ("thermal_acceptability", "thermal_sensation"),
    3: ("thermal_sensation", "thermal_preference"),
    4: ("thermal_comfort", "thermal_preference"),
    5: ("thermal_comfort", "thermal_sensation"),
}


class Verdict(enum.Enum):
    CONSISTENT = "consistent"
    INCONSISTENT = "inconsistent"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class RuleVerdict:
    rule_id: int
    outcome: Verdict


def _acceptability_usable(a: float) -> bool:
    # Only exact 0/1 votes participate; anything else skips the rule.
    return a == 0.0 or a == 1.0


def evaluate_rule(rule_id: int, record: ComfortRecord) -> RuleVerdict:
    """Evaluate one consistency rule against one record."""
    if rule_id not in RULE_IDS:
        raise InvalidRuleId(f"rule_id must be 1..5, got {rule_id!r}")
    values = [getattr(record, name) for name in RULE_FIELDS[rule_id]]
    if any(v is None for v in values):
        return RuleVerdict(rule_id, Verdict.NOT_APPLICABLE)

    a = record.thermal_acceptability
    p = record.thermal_preference
    s = record.thermal_sensation
    c = record.thermal_comfort

    if rule_id == 1:
        if not _acceptability_usable(a):
            return RuleVerdict(rule_id, Verdict.NOT_APPLICABLE)
        ok = (a == 1.0 and p is Preference.NO_CHANGE) or (
            a == 0.0 and p in (Preference.COOLER, Preference.WARMER))
        return RuleVerdict(rule_id, Verdict.CONSISTENT if ok else Verdict.INCONSISTENT)

    if rule_id == 2:
        if not _acceptability_usable(a):
            return RuleVerdict(rule_id, Verdict.NOT_APPLICABLE)
        bad = (a == 1.0 and abs(s) > 2.0) or (a == 0.0 and abs(s) <= 1.0)
        return RuleVerdict(rule_id, Verdict.INCONSISTENT if bad else Verdict.CONSISTENT)

    if rule_id == 3:
        ok = (
            (p is Preference.WARMER and s < -2.0)
            or (p is Preference.COOLER and s > 2.0)
            or (p is Preference.NO_CHANGE and abs(s) <= 1.0)
            or (1.0 < s < 2.0 and p in (Preference.COOLER, Preference.NO_CHANGE))
            or (-2.0 < s < -1.0 and p in (Preference.WARMER, Preference.NO_CHANGE))
        )
        return RuleVerdict(rule_id, Verdict.CONSISTENT if ok else Verdict.INCONSISTENT)

    if rule_id == 4:
        bad = (c == 1.0 and p is Preference.NO_CHANGE) or (
            c == 6.0 and p in (Preference.COOLER, Preference.WARMER))
        return RuleVerdict(rule_id, Verdict.INCONSISTENT if bad else Verdict.CONSISTENT)

    # rule 5
    bad = (c == 1.0 and abs(s) <= 2.0) or (c == 6.0 and abs(s) > 2.0)
    return RuleVerdict(rule_id, Verdict.INCONSISTENT if bad else Verdict.CONSISTENT)


@dataclass
class FilterReport:
    """Aggregate outcome of filtering one record set.

    Per-rule counts count rows, so a row inconsistent under two rules
    increments both rule counters but the filtered total once; per-rule
    counts may therefore sum past the filtered total.
    """

    dataset_name: str
    total_rows: int
    rule_counts: dict[int, int] = field(default_factory=dict)
    rule_percentages: dict[int, float] = field(default_factory=dict)
    retained_rows: int = 0
    filtered_rows: int = 0
    filtered_percentage: float = 0.0


def filter_dataset(record_set: RecordSet, dataset_name: str = "") -> tuple[RecordSet, FilterReport]:
    """Keep every record no rule marks inconsistent, preserving order."""
    report = FilterReport(dataset_name=dataset_name, total_rows=len(record_set))
    report.rule_counts = {rule_id: 0 for rule_id in RULE_IDS}
    retained = []
    for record in record_set:
        keep = True
        for rule_id in RULE_IDS:
            if evaluate_rule(rule_id, record).outcome is Verdict.INCONSISTENT:
                report.rule_counts[rule_id] += 1
                keep = False
        if keep:
            retained.append(record)
    report.retained_rows = len(retained)
    report.filtered_rows = report.total_rows - report.retained_rows
    report.rule_percentages = {
        rule_id: round_half_up_pct(count, report.total_rows)
        for rule_id, count in report.rule_counts.items()
    }
    report.filtered_percentage = round_half_up_pct(report.filtered_rows, report.total_rows)
    return record_set.with_records(retained), report
