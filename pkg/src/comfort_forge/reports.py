"""Deterministic table emitters: CSV and JSON views of run results.

Three table shapes cover the pipeline's reporting needs: missing data per
dominant parameter (datasets as rows, count and percent per parameter),
consistency filtering (datasets as rows, count and percent per rule, with
a retained/filtered summary), and method accuracy (methods as rows, one
column per dataset variant). Multi-dataset tables end with a TOTAL row
whose percentages are recomputed from the summed counts, never averaged.
"""

import csv
import io
import json

from .classifiers import METHODS, SPECS
from .filtering import RULE_IDS, FilterReport
from .ingest import MissingReport, round_half_up_pct

DOMINANT_PARAMETERS = (
    ("air_temperature", "Temperature"),
    ("relative_humidity", "Humidity"),
    ("clothing_insulation", "Clothing"),
    ("age", "Age"),
    ("metabolic_rate", "Metabolic Rate"),
)

DATASETS = ("rp884", "db2", "combined")
DATASET_DISPLAY = {
    "rp884": "ASHRAE RP-884",
    "db2": "ASHRAE Global Thermal Comfort Database II",
    "combined": "ASHRAE RP-884 and Database II combined",
}
FEATURE_SET_IDS = ("five", "four")
VARIANT_KINDS = ("raw", "filtered", "filtered_all")


def variant_id(dataset: str, feature_set: str, kind: str) -> str:
    return f"{dataset}_{feature_set}_{kind}"


def variant_display(dataset: str, feature_set: str, kind: str) -> str:
    name = DATASET_DISPLAY[dataset]
    if feature_set == "four":
        name += " without age"
    if kind == "filtered":
        return f"Filtered {name}"
    if kind == "filtered_all":
        return f"Filtered {name} Tested with All Data"
    return name


ALL_VARIANTS = tuple(
    variant_id(d, f, k)
    for d in DATASETS for f in FEATURE_SET_IDS for k in VARIANT_KINDS
)
VARIANT_DISPLAY = {
    variant_id(d, f, k): variant_display(d, f, k)
    for d in DATASETS for f in FEATURE_SET_IDS for k in VARIANT_KINDS
}


def dumps_json(obj) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_json(obj, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_json(obj))


def _csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _pct(value: float) -> str:
    return f"{value:.2f}"


def missing_data_rows(reports) -> list:
    """Header plus one row per dataset, then TOTAL when several datasets."""
    reports = list(reports)
    header = ["Dataset Name", "Number of Entry"]
    for _, display in DOMINANT_PARAMETERS:
        header += [display, f"{display} in %"]
    rows = [header]
    totals = {field: 0 for field, _ in DOMINANT_PARAMETERS}
    grand_total = 0
    for report in reports:
        row = [report.dataset_name, str(report.total_rows)]
        grand_total += report.total_rows
        for field, _ in DOMINANT_PARAMETERS:
            count = report.missing_counts.get(field, 0)
            totals[field] += count
            row += [str(count), _pct(report.missing_percentages.get(field, 0.0))]
        rows.append(row)
    if len(reports) > 1:
        row = ["TOTAL", str(grand_total)]
        for field, _ in DOMINANT_PARAMETERS:
            row += [str(totals[field]), _pct(round_half_up_pct(totals[field], grand_total))]
        rows.append(row)
    return rows


def missing_data_csv(reports) -> str:
    return _csv_text(missing_data_rows(list(reports)))


def missing_data_json(reports) -> dict:
    return {
        "table": "missing_data",
        "parameters": [display for _, display in DOMINANT_PARAMETERS],
        "datasets": [
            {
                "name": r.dataset_name,
                "total_rows": r.total_rows,
                "missing": {
                    display: {
                        "count": r.missing_counts.get(field, 0),
                        "percent": r.missing_percentages.get(field, 0.0),
                    }
                    for field, display in DOMINANT_PARAMETERS
                },
            }
            for r in reports
        ],
    }


def filter_rows(reports) -> list:
    """Rule-count table plus a retained/filtered summary block."""
    header = ["Dataset Name", "Number of Entry"]
    for rule in RULE_IDS:
        header += [f"Inconsistency {rule}", f"% Inconsistency {rule}"]
    rows = [header]
    reports = list(reports)
    rule_totals = {rule: 0 for rule in RULE_IDS}
    grand_total = 0
    retained_total = 0
    filtered_total = 0
    for report in reports:
        row = [report.dataset_name, str(report.total_rows)]
        grand_total += report.total_rows
        retained_total += report.retained_rows
        filtered_total += report.filtered_rows
        for rule in RULE_IDS:
            count = report.rule_counts.get(rule, 0)
            rule_totals[rule] += count
            row += [str(count), _pct(report.rule_percentages.get(rule, 0.0))]
        rows.append(row)
    if len(reports) > 1:
        row = ["TOTAL", str(grand_total)]
        for rule in RULE_IDS:
            row += [str(rule_totals[rule]), _pct(round_half_up_pct(rule_totals[rule], grand_total))]
        rows.append(row)
    rows.append([])
    rows.append(["Dataset Name", "Retained", "Filtered", "Filtered %"])
    for report in reports:
        rows.append([report.dataset_name, str(report.retained_rows),
                     str(report.filtered_rows), _pct(report.filtered_percentage)])
    if len(reports) > 1:
        rows.append(["TOTAL", str(retained_total), str(filtered_total),
                     _pct(round_half_up_pct(filtered_total, grand_total))])
    return rows


def filter_csv(reports) -> str:
    return _csv_text(filter_rows(reports))


def filter_json(reports) -> dict:
    return {
        "table": "consistency_filter",
        "datasets": [
            {
                "name": r.dataset_name,
                "total_rows": r.total_rows,
                "rules": {
                    str(rule): {
                        "count": r.rule_counts.get(rule, 0),
                        "percent": r.rule_percentages.get(rule, 0.0),
                    }
                    for rule in RULE_IDS
                },
                "retained_rows": r.retained_rows,
                "filtered_rows": r.filtered_rows,
                "filtered_percent": r.filtered_percentage,
            }
            for r in reports
        ],
    }


def method_accuracy_rows(accuracies, variants=ALL_VARIANTS) -> list:
    """Methods as rows, dataset variants as columns; blanks for absent cells.

    ``accuracies`` maps method id -> {variant id -> accuracy percent}.
    """
    header = ["Classification Method"] + [VARIANT_DISPLAY.get(v, v) for v in variants]
    rows = [header]
    for method in METHODS:
        per_method = accuracies.get(method, {})
        row = [SPECS[method].display_name]
        for variant in variants:
            value = per_method.get(variant)
            row.append("" if value is None else _pct(value))
        rows.append(row)
    return rows


def method_accuracy_csv(accuracies, variants=ALL_VARIANTS) -> str:
    return _csv_text(method_accuracy_rows(accuracies, variants))
