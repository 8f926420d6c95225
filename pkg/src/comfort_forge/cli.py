"""Pipeline commands behind one executable.

Every command reads its configuration (file plus flag overrides), writes
its artifacts under the configured output directory, echoes the effective
config next to them, and prints a JSON summary to stdout. Failures print
a machine-readable JSON error to stderr and exit nonzero. Intermediate
data always travels through files, so each stage can be rerun, checked,
or swapped out; artifacts carry content fingerprints instead of
timestamps and rerunning a command with identical inputs produces
byte-identical outputs.
"""

import argparse
import csv
import json
import os
import re
import sys

import numpy as np

from .augment import AugmentationRanges, GridAxis, balance_subsample, generate_augmentation
from .charts import parametric_sweep, points_from_records, render_chart
from .classifiers import METHODS, SPECS, load_model, predict, save_model
from .classifiers import train as train_classifier
from .config import (
    DatasetConfig,
    PipelineConfig,
    config_from_dict,
    config_to_dict,
    merge_overrides,
)
from .errors import ComfortForgeError, ConfigInvalid, MissingArtifact
from .evaluation import EvalMode, evaluate
from .features import FEATURE_COLUMNS, FeatureSet, assemble_features, split
from .filtering import filter_dataset
from .ingest import file_fingerprint, load_dataset, missing_data_report
from .mappings import load_bundled_mapping, parse_mapping
from .psychro import GridSpec, classify_grid, comfort_band
from .records import Preference, RecordSet, read_records_csv, write_records_csv
from .reports import (
    filter_csv,
    filter_json,
    method_accuracy_csv,
    missing_data_csv,
    missing_data_json,
    variant_id,
    write_json,
)

CACHE_ENV = "COMFORT_FORGE_CACHE"

_DIAGNOSTIC_LIMIT = 20  # per dataset, keeps ingest reports bounded


def _slug(name: str) -> str:
    slug = re.sub(r"[^a-z0-9]+", "_", name.lower()).strip("_")
    return slug or "dataset"


def resolve_input_path(path: str) -> str:
    """The path itself, or the same path inside COMFORT_FORGE_CACHE."""
    if os.path.exists(path):
        return path
    tried = [path]
    cache = os.environ.get(CACHE_ENV)
    if cache and not os.path.isabs(path):
        candidate = os.path.join(cache, path)
        if os.path.exists(candidate):
            return candidate
        tried.append(candidate)
    raise MissingArtifact(f"input not found, tried: {', '.join(tried)}")


def _load_mapping(spec: str):
    if spec.endswith(".mapping") or os.sep in spec:
        return parse_mapping(resolve_input_path(spec))
    return load_bundled_mapping(spec)


def _out(config: PipelineConfig, name: str) -> str:
    return os.path.join(config.out_dir, name)


def _require(path: str) -> str:
    if not os.path.exists(path):
        raise MissingArtifact(f"required artifact missing: {path} (run the upstream command)")
    return path


def _records_path(config, dataset) -> str:
    return _out(config, f"records_{_slug(dataset.display_name())}.csv")


def _filtered_path(config, dataset) -> str:
    return _out(config, f"filtered_{_slug(dataset.display_name())}.csv")


_AUGMENTED = "augmented.csv"


def _write_effective_config(config: PipelineConfig) -> None:
    os.makedirs(config.out_dir, exist_ok=True)
    write_json(config_to_dict(config), _out(config, "effective_config.json"))


def _dataset_key(config: PipelineConfig) -> str:
    if len(config.datasets) > 1:
        return "combined"
    return _slug(config.datasets[0].display_name())


# ---------------------------------------------------------------- commands

def cmd_ingest(config: PipelineConfig, args) -> dict:
    if not config.datasets:
        raise ConfigInvalid("no datasets configured; supply --config with a datasets list")
    entries = []
    artifacts = []
    for dataset in config.datasets:
        mapping = _load_mapping(dataset.mapping)
        source_path = resolve_input_path(dataset.path)
        record_set, report = load_dataset(source_path, mapping)
        out_path = _records_path(config, dataset)
        os.makedirs(config.out_dir, exist_ok=True)
        write_records_csv(record_set, out_path)
        missing = missing_data_report(record_set, dataset.display_name())
        kinds = {}
        for diag in report.diagnostics:
            kinds[diag.kind] = kinds.get(diag.kind, 0) + 1
        entries.append({
            "name": dataset.display_name(),
            "source_path": dataset.path,
            "source_fingerprint": file_fingerprint(source_path),
            "mapping_id": report.mapping_id,
            "total_rows": report.total_rows,
            "loaded_rows": report.loaded_rows,
            "rejected_rows": report.rejected_rows,
            "diagnostic_counts": kinds,
            "diagnostics": [
                {"row": d.row, "kind": d.kind, "detail": d.detail}
                for d in report.diagnostics[:_DIAGNOSTIC_LIMIT]
            ],
            "missing": {
                field: {
                    "count": missing.missing_counts[field],
                    "percent": missing.missing_percentages[field],
                }
                for field in sorted(missing.missing_counts)
            },
            "artifact": os.path.basename(out_path),
            "artifact_fingerprint": file_fingerprint(out_path),
        })
        artifacts.append(out_path)
    report_path = _out(config, "ingest_report.json")
    write_json({"datasets": entries}, report_path)
    artifacts.append(report_path)
    _write_effective_config(config)
    return {
        "command": "ingest",
        "artifacts": [os.path.basename(a) for a in artifacts],
        "datasets": [
            {"name": e["name"], "loaded_rows": e["loaded_rows"],
             "rejected_rows": e["rejected_rows"]}
            for e in entries
        ],
    }


def cmd_filter(config: PipelineConfig, args) -> dict:
    if not config.datasets:
        raise ConfigInvalid("no datasets configured")
    reports = []
    artifacts = []
    for dataset in config.datasets:
        record_set = read_records_csv(_require(_records_path(config, dataset)))
        retained, report = filter_dataset(record_set, dataset.display_name())
        out_path = _filtered_path(config, dataset)
        write_records_csv(retained, out_path)
        reports.append(report)
        artifacts.append(out_path)
    json_path = _out(config, "filter_report.json")
    write_json(filter_json(reports), json_path)
    csv_path = _out(config, "filter_report.csv")
    with open(csv_path, "w", encoding="utf-8") as fh:
        fh.write(filter_csv(reports))
    artifacts += [json_path, csv_path]
    _write_effective_config(config)
    return {
        "command": "filter",
        "artifacts": [os.path.basename(a) for a in artifacts],
        "datasets": [
            {"name": r.dataset_name, "retained_rows": r.retained_rows,
             "filtered_rows": r.filtered_rows,
             "filtered_percent": r.filtered_percentage}
            for r in reports
        ],
    }


def _read_stage_records(config: PipelineConfig):
    """Per-dataset record sets from the filtered (or raw) artifacts."""
    sets = []
    for dataset in config.datasets:
        path = _filtered_path(config, dataset) if config.apply_filter else _records_path(config, dataset)
        sets.append(read_records_csv(_require(path)))
    return sets


def _combined(sets) -> RecordSet:
    records = tuple(r for s in sets for r in s)
    return RecordSet(records=records)


def cmd_augment(config: PipelineConfig, args) -> dict:
    if not config.datasets:
        raise ConfigInvalid("no datasets configured")
    combined = _combined(_read_stage_records(config))
    counts = combined.label_counts()
    ranges = AugmentationRanges().with_steps(**config.augment_steps)
    generated = []
    per_class = []
    for preference, label in ((Preference.WARMER, -1), (Preference.COOLER, 1)):
        deficit = max(0, counts[0] - counts[label])
        requested = int(deficit * config.augment_ratio)
        pool = generate_augmentation(ranges, preference)
        # The grid is finite; when the deficit exceeds it the whole grid is
        # used and the shortfall is reported rather than silently ignored.
        used = min(requested, len(pool))
        sample = balance_subsample(pool, used, config.seed)
        generated.extend(sample)
        per_class.append({
            "class": preference.value,
            "deficit": deficit,
            "requested_rows": requested,
            "pool_rows": len(pool),
            "used_rows": used,
            "shortfall": requested - used,
        })
    augmented = RecordSet(records=tuple(generated))
    out_path = _out(config, _AUGMENTED)
    os.makedirs(config.out_dir, exist_ok=True)
    write_records_csv(augmented, out_path)
    report_path = _out(config, "augment_report.json")
    write_json({
        "label_counts": {str(k): v for k, v in counts.items()},
        "augment_ratio": config.augment_ratio,
        "steps": config.augment_steps,
        "classes": per_class,
        "augmented_rows": len(augmented),
        "artifact": _AUGMENTED,
        "artifact_fingerprint": file_fingerprint(out_path),
    }, report_path)
    _write_effective_config(config)
    return {
        "command": "augment",
        "artifacts": [_AUGMENTED, "augment_report.json"],
        "augmented_rows": len(augmented),
        "classes": per_class,
    }


def _feature_set(config: PipelineConfig) -> FeatureSet:
    return FeatureSet.FIVE_PARAM if config.feature_set == "five" else FeatureSet.FOUR_PARAM_NO_AGE


def _assemble_run_data(config: PipelineConfig) -> dict:
    """Everything train and evaluate share: matrices, split, medians."""
    original_sets = _read_stage_records(config)
    original = _combined(original_sets)
    inputs = {}
    for dataset in config.datasets:
        path = _filtered_path(config, dataset) if config.apply_filter else _records_path(config, dataset)
        inputs[os.path.basename(path)] = file_fingerprint(path)
    aug_path = _out(config, _AUGMENTED)
    augmented_rows = 0
    all_records = original
    if os.path.exists(aug_path):
        aug_set = read_records_csv(aug_path)
        augmented_rows = len(aug_set)
        all_records = RecordSet(records=original.records + aug_set.records)
        inputs[_AUGMENTED] = file_fingerprint(aug_path)
    feature_set = _feature_set(config)
    matrix = assemble_features(all_records, feature_set)
    train_m, val_m, test_m = split(matrix, config.split_fractions, config.seed)
    original_matrix = assemble_features(original, feature_set)
    medians = {
        name: float(np.median(original_matrix.features[:, i]))
        for i, name in enumerate(FEATURE_COLUMNS[feature_set])
    }
    fixed_defaults = {"clo": medians["clothing_insulation"], "met": medians["metabolic_rate"]}
    if feature_set is FeatureSet.FIVE_PARAM:
        fixed_defaults["age"] = medians["age"]
    return {
        "matrix": matrix,
        "train": train_m,
        "val": val_m,
        "test": test_m,
        "original_sets": original_sets,
        "augmented_rows": augmented_rows,
        "inputs": inputs,
        "fixed_defaults": fixed_defaults,
        "feature_set": feature_set,
    }


def _split_scheme(config: PipelineConfig) -> str:
    t, v, s = config.split_fractions
    return f"shuffled {t:g}/{v:g}/{s:g} split, seed {config.seed}"


def cmd_train(config: PipelineConfig, args) -> dict:
    if not config.datasets:
        raise ConfigInvalid("no datasets configured")
    data = _assemble_run_data(config)
    methods_out = {}
    artifacts = []
    for method in config.methods:
        metadata = {
            "split_fractions": list(config.split_fractions),
            "split_scheme": _split_scheme(config),
            "inputs": data["inputs"],
            "fixed_defaults": data["fixed_defaults"],
            "augmented_rows": data["augmented_rows"],
            "dropped_rows": data["matrix"].dropped_rows,
        }
        model = train_classifier(method, data["train"], data["val"],
                                 seed=config.seed, metadata=metadata)
        model_path = _out(config, f"model_{method}.json")
        save_model(model, model_path)
        train_truth = data["train"].labels
        train_acc = 100.0 * float(np.mean(predict(model, data["train"]) == train_truth))
        methods_out[method] = {
            "model": os.path.basename(model_path),
            "model_fingerprint": file_fingerprint(model_path),
            "train_accuracy": train_acc,
        }
        artifacts.append(model_path)
    report_path = _out(config, "train_report.json")
    write_json({
        "methods": methods_out,
        "inputs": data["inputs"],
        "split": {
            "fractions": list(config.split_fractions),
            "seed": config.seed,
            "train_rows": len(data["train"]),
            "val_rows": len(data["val"]),
            "test_rows": len(data["test"]),
        },
        "augmented_rows": data["augmented_rows"],
        "fixed_defaults": data["fixed_defaults"],
        "feature_set": config.feature_set,
    }, report_path)
    artifacts.append(report_path)
    _write_effective_config(config)
    return {
        "command": "train",
        "artifacts": [os.path.basename(a) for a in artifacts],
        "methods": {
            m: {"train_accuracy": v["train_accuracy"]} for m, v in methods_out.items()
        },
    }


def cmd_evaluate(config: PipelineConfig, args) -> dict:
    if not config.datasets:
        raise ConfigInvalid("no datasets configured")
    data = _assemble_run_data(config)
    ds_key = _dataset_key(config)
    kind = "filtered" if config.apply_filter else "raw"
    prefix = "aug_" if data["augmented_rows"] else ""
    holdout_variant = prefix + variant_id(ds_key, config.feature_set, kind)
    all_data_variant = prefix + variant_id(ds_key, config.feature_set, "filtered_all")

    all_original_matrix = None
    if config.apply_filter:
        raw_sets = [read_records_csv(_require(_records_path(config, d)))
                    for d in config.datasets]
        all_original_matrix = assemble_features(_combined(raw_sets), data["feature_set"])

    methods_out = {}
    cells = {}
    for method in config.methods:
        model = load_model(_require(_out(config, f"model_{method}.json")))
        entry = {"holdout": None, "all_original": None}
        cells[method] = {}
        if len(data["test"]) > 0:
            report = evaluate(model, data["test"], EvalMode.HOLDOUT_TEST,
                              split_scheme=_split_scheme(config))
            entry["holdout"] = report.to_dict()
            cells[method][holdout_variant] = report.accuracy
        if all_original_matrix is not None:
            report = evaluate(model, all_original_matrix, EvalMode.ALL_ORIGINAL_DATA)
            entry["all_original"] = report.to_dict()
            cells[method][all_data_variant] = report.accuracy
        methods_out[method] = entry
    report_path = _out(config, "eval_report.json")
    write_json({
        "dataset_key": ds_key,
        "feature_set": config.feature_set,
        "kind": kind,
        "augmented_rows": data["augmented_rows"],
        "inputs": data["inputs"],
        "methods": methods_out,
        "cells": cells,
    }, report_path)
    _write_effective_config(config)
    summary_cells = {
        m: {v: round(a, 2) for v, a in row.items()} for m, row in cells.items()
    }
    return {
        "command": "evaluate",
        "artifacts": ["eval_report.json"],
        "cells": summary_cells,
    }


def _grid_spec(config: PipelineConfig, model) -> GridSpec:
    tmin, tmax, tstep, rhmin, rhmax, rhstep = config.grid
    fixed = dict(model.metadata.get("fixed_defaults", {}))
    fixed.update(config.fixed)
    missing = [k for k in ("clo", "met") if fixed.get(k) is None]
    if model.feature_set is FeatureSet.FIVE_PARAM and fixed.get("age") is None:
        missing.append("age")
    if missing:
        raise ConfigInvalid(
            f"no fixed value available for {', '.join(missing)}; pass --fixed")
    return GridSpec(
        clo=float(fixed["clo"]),
        met=float(fixed["met"]),
        age=float(fixed["age"]) if fixed.get("age") is not None else None,
        temp=GridAxis(float(tmin), float(tmax), float(tstep)),
        rh=GridAxis(float(rhmin), float(rhmax), float(rhstep)),
        feature_set=model.feature_set,
    )


def _load_cli_model(config: PipelineConfig, args):
    path = getattr(args, "model", None) or _out(config, f"model_{config.methods[0]}.json")
    return load_model(_require(path))


def _read_overlay(path: str) -> list:
    """Polygon vertices from a two-column CSV; a non-numeric header is skipped."""
    vertices = []
    with open(resolve_input_path(path), newline="", encoding="utf-8") as fh:
        for row in csv.reader(fh):
            if not row or not row[0].strip():
                continue
            try:
                vertices.append((float(row[0]), float(row[1])))
            except (ValueError, IndexError):
                if vertices:
                    raise ConfigInvalid(f"overlay {path}: bad vertex row {row!r}") from None
    if len(vertices) < 3:
        raise ConfigInvalid(f"overlay {path}: a polygon needs at least 3 vertices")
    return vertices


def cmd_chart(config: PipelineConfig, args) -> dict:
    model = _load_cli_model(config, args)
    spec = _grid_spec(config, model)
    overlays = [_read_overlay(p) for p in (args.overlay or [])]
    points = classify_grid(model, spec)
    title = f"{SPECS[model.spec.method].display_name} comfort map"
    chart = render_chart(points, overlays=overlays, title=title)
    name = f"chart_{model.spec.method}.svg"
    os.makedirs(config.out_dir, exist_ok=True)
    with open(_out(config, name), "wb") as fh:
        fh.write(chart.svg)
    band = None
    if spec.rh.start <= 50.0 <= spec.rh.end:
        band = comfort_band(model, 50.0, spec)
    _write_effective_config(config)
    return {
        "command": "chart",
        "artifacts": [name],
        "classes_present": list(chart.legend),
        "grid_points": len(points),
        "comfort_band_rh50": list(band) if band else None,
    }


def cmd_sweep(config: PipelineConfig, args) -> dict:
    model = _load_cli_model(config, args)
    spec = _grid_spec(config, model)
    try:
        values = [float(v) for v in args.values.split(",") if v.strip()]
    except ValueError as exc:
        raise ConfigInvalid(f"bad --values list: {args.values!r}") from exc
    charts = parametric_sweep(model, args.param, values, spec, out_dir=config.out_dir)
    _write_effective_config(config)
    return {
        "command": "sweep",
        "artifacts": [c.filename for c in charts] + [f"sweep_{args.param}_band_rh50.csv"],
        "param": args.param,
        "values": values,
    }


def cmd_report(config: PipelineConfig, args) -> dict:
    if not config.datasets:
        raise ConfigInvalid("no datasets configured")
    artifacts = []
    missing_reports = []
    filter_reports = []
    os.makedirs(config.out_dir, exist_ok=True)
    for dataset in config.datasets:
        name = dataset.display_name()
        record_set = read_records_csv(_require(_records_path(config, dataset)))
        missing_reports.append(missing_data_report(record_set, name))
        _, freport = filter_dataset(record_set, name)
        filter_reports.append(freport)
        points, skipped = points_from_records(record_set)
        if points:
            chart = render_chart(points, rh_on_y=True, title=f"{name} survey map")
            map_name = f"map_{_slug(name)}.svg"
            with open(_out(config, map_name), "wb") as fh:
                fh.write(chart.svg)
            artifacts.append(map_name)
        filtered_path = _filtered_path(config, dataset)
        if os.path.exists(filtered_path):
            filtered_set = read_records_csv(filtered_path)
            points, _ = points_from_records(filtered_set)
            if points:
                chart = render_chart(points, rh_on_y=True,
                                     title=f"{name} survey map (consistent rows)")
                map_name = f"map_filtered_{_slug(name)}.svg"
                with open(_out(config, map_name), "wb") as fh:
                    fh.write(chart.svg)
                artifacts.append(map_name)

    with open(_out(config, "missing_data.csv"), "w", encoding="utf-8") as fh:
        fh.write(missing_data_csv(missing_reports))
    write_json(missing_data_json(missing_reports), _out(config, "missing_data.json"))
    with open(_out(config, "filter_table.csv"), "w", encoding="utf-8") as fh:
        fh.write(filter_csv(filter_reports))
    artifacts = ["missing_data.csv", "missing_data.json", "filter_table.csv"] + artifacts

    eval_path = _out(config, "eval_report.json")
    if os.path.exists(eval_path):
        with open(eval_path, encoding="utf-8") as fh:
            eval_doc = json.load(fh)
        cells = eval_doc.get("cells", {})
        variants = sorted({v for row in cells.values() for v in row})
        if variants:
            with open(_out(config, "method_accuracy.csv"), "w", encoding="utf-8") as fh:
                fh.write(method_accuracy_csv(cells, variants))
            artifacts.append("method_accuracy.csv")
    _write_effective_config(config)
    return {"command": "report", "artifacts": artifacts}


# ------------------------------------------------------------------ wiring

_COMMANDS = {
    "ingest": cmd_ingest,
    "filter": cmd_filter,
    "augment": cmd_augment,
    "train": cmd_train,
    "evaluate": cmd_evaluate,
    "chart": cmd_chart,
    "sweep": cmd_sweep,
    "report": cmd_report,
}


def _parse_grid(text: str) -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 6:
        raise ConfigInvalid('--grid needs "tmin,tmax,tstep,rhmin,rhmax,rhstep"')
    try:
        return tuple(float(p) for p in parts)
    except ValueError as exc:
        raise ConfigInvalid(f"bad --grid value: {text!r}") from exc


def _parse_fixed(text: str) -> dict:
    out = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ConfigInvalid(f'bad --fixed entry {part!r}; expected key=value')
        key, _, value = part.partition("=")
        key = key.strip()
        if key not in ("clo", "met", "age"):
            raise ConfigInvalid(f"--fixed keys must be clo/met/age, got {key!r}")
        try:
            out[key] = float(value)
        except ValueError as exc:
            raise ConfigInvalid(f"bad --fixed value for {key}: {value!r}") from exc
    return out


def _effective_config(args) -> PipelineConfig:
    if args.config:
        try:
            with open(resolve_input_path(args.config), encoding="utf-8") as fh:
                doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigInvalid(f"config is not valid JSON: {exc}") from exc
        config = config_from_dict(doc)
    else:
        config = PipelineConfig()
    overrides = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.feature_set is not None:
        overrides["feature_set"] = args.feature_set
    if args.no_filter:
        overrides["apply_filter"] = False
    if args.augment_ratio is not None:
        overrides["augment_ratio"] = args.augment_ratio
    if args.grid is not None:
        overrides["grid"] = _parse_grid(args.grid)
    if args.fixed is not None:
        overrides["fixed"] = {**config.fixed, **_parse_fixed(args.fixed)}
    if args.out is not None:
        overrides["out_dir"] = args.out
    return merge_overrides(config, **overrides)


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON pipeline config file")
    parser.add_argument("--seed", type=int, help="random seed override")
    parser.add_argument("--feature-set", dest="feature_set", choices=("five", "four"),
                        help="feature columns: five (with age) or four")
    parser.add_argument("--no-filter", dest="no_filter", action="store_true",
                        help="use raw records instead of consistency-filtered ones")
    parser.add_argument("--augment-ratio", dest="augment_ratio", type=float,
                        help="multiplier on the per-class deficit")
    parser.add_argument("--grid", help='"tmin,tmax,tstep,rhmin,rhmax,rhstep"')
    parser.add_argument("--fixed", help='fixed grid values, e.g. "clo=0.5,met=1.2,age=27"')
    parser.add_argument("--out", help="output directory")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="comfort-forge",
        description="Thermal comfort pipeline: ingest, clean, augment, train, validate.")
    sub = parser.add_subparsers(dest="command", required=True)
    descriptions = {
        "ingest": "load survey CSVs into canonical record files",
        "filter": "apply the five consistency rules to ingested records",
        "augment": "generate semantic grid rows for the warmer/cooler classes",
        "train": "train the configured classifiers on the staged data",
        "evaluate": "score trained models on the holdout and the original data",
        "chart": "render a psychrometric class map for one trained model",
        "sweep": "render one chart per value of a fixed parameter",
        "report": "rebuild summary tables and survey maps from artifacts",
    }
    for name, func in _COMMANDS.items():
        p = sub.add_parser(name, help=descriptions[name])
        _add_common_flags(p)
        if name in ("chart", "sweep"):
            p.add_argument("--model", help="trained model file (default: first configured method)")
        if name == "chart":
            p.add_argument("--overlay", action="append",
                           help="CSV of polygon vertices (temp C, humidity ratio); repeatable")
        if name == "sweep":
            p.add_argument("--param", required=True, choices=("age", "clo", "met"))
            p.add_argument("--values", required=True,
                           help='comma-separated values, e.g. "30,75"')
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _effective_config(args)
        summary = args.func(config, args)
    except (ComfortForgeError, OSError) as exc:
        error = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(error, sort_keys=True), file=sys.stderr)
        return 2
    print(json.dumps(summary, sort_keys=True, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
