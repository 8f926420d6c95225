"""Class-colored comfort charts rendered to deterministic SVG.

The x axis is always dry-bulb temperature; the y axis is humidity ratio
for psychrometric maps or relative humidity for raw survey scatter maps.
Class colors are fixed (warmer = blue, no change = green, cooler = red),
the legend lists only classes actually present, and overlay polygons are
drawn unfilled beneath the points. Identical inputs produce identical
bytes: the SVG hash salt is pinned and no timestamp is written.
"""

import csv
import io
import os
from dataclasses import dataclass, replace

import matplotlib
from matplotlib.backends.backend_svg import FigureCanvasSVG
from matplotlib.figure import Figure
from matplotlib.patches import Polygon

from .classifiers import TrainedModel
from .errors import EmptyPointSet, EmptyValueList
from .features import FeatureSet
from .psychro import (
    BUCK_FORMULA,
    RATIO_FORMULA,
    STANDARD_PRESSURE_KPA,
    GridSpec,
    PsychroPoint,
    classify_grid,
    comfort_band,
    humidity_ratio,
)
from .records import CLASS_LABELS, CLASS_NAMES, RecordSet, derive_label

CLASS_COLORS = {-1: "blue", 0: "green", 1: "red"}

X_LABEL = "Dry-bulb temperature (\N{DEGREE SIGN}C)"
Y_LABEL_RATIO = "Humidity ratio (kg water / kg dry air)"
Y_LABEL_RH = "Relative humidity (%)"

_HASH_SALT = "comfort-forge"

SWEEP_PARAMS = ("age", "clo", "met")


@dataclass(frozen=True)
class ChartDocument:
    """Rendered SVG plus the metadata a caller may want to assert on."""

    svg: bytes
    x_label: str
    y_label: str
    legend: tuple    # display names of the classes present, fixed order
    overlay_count: int
    filename: str = ""


def _display_name(label: int) -> str:
    return CLASS_NAMES[label].capitalize()


def render_chart(points, overlays=None, rh_on_y: bool = False,
                 title: str = "", filename: str = "") -> ChartDocument:
    """Scatter the points by class; returns the finished document."""
    points = list(points)
    if not points:
        raise EmptyPointSet("nothing to chart")
    overlays = [list(p) for p in (overlays or [])]

    with matplotlib.rc_context({"svg.hashsalt": _HASH_SALT}):
        fig = Figure(figsize=(7.0, 5.0))
        FigureCanvasSVG(fig)
        ax = fig.add_subplot(111)
        for polygon in overlays:
            ax.add_patch(Polygon(polygon, closed=True, fill=False,
                                 edgecolor="black", linewidth=0.9, zorder=1))
        legend = []
        for label in CLASS_LABELS:
            xs = [p.temp_c for p in points if p.label == label]
            if not xs:
                continue
            ys = [(p.rh if rh_on_y else p.ratio) for p in points if p.label == label]
            ax.scatter(xs, ys, s=4, c=CLASS_COLORS[label], linewidths=0,
                       label=_display_name(label), zorder=2)
            legend.append(_display_name(label))
        y_label = Y_LABEL_RH if rh_on_y else Y_LABEL_RATIO
        ax.set_xlabel(X_LABEL)
        ax.set_ylabel(y_label)
        if title:
            ax.set_title(title)
        ax.legend(loc="upper left", fontsize=8)
        if not rh_on_y:
            fig.text(0.01, 0.005,
                     f"{BUCK_FORMULA}; {RATIO_FORMULA}; P = {STANDARD_PRESSURE_KPA} kPa",
                     fontsize=5, color="dimgray")
        buf = io.BytesIO()
        fig.savefig(buf, format="svg", metadata={"Date": None})

    return ChartDocument(
        svg=buf.getvalue(),
        x_label=X_LABEL,
        y_label=y_label,
        legend=tuple(legend),
        overlay_count=len(overlays),
        filename=filename,
    )


def points_from_records(record_set: RecordSet):
    """Survey rows as chartable points; returns (points, skipped_count).

    Rows lacking temperature, humidity, or a class vote cannot be placed
    and are counted rather than dropped silently.
    """
    points = []
    skipped = 0
    for record in record_set:
        label = derive_label(record)
        if record.air_temperature is None or record.relative_humidity is None or label is None:
            skipped += 1
            continue
        ratio = humidity_ratio(record.air_temperature, record.relative_humidity)
        points.append(PsychroPoint(record.air_temperature, record.relative_humidity,
                                   ratio, label))
    return points, skipped


def _format_value(value: float) -> str:
    return format(value, "g")


def parametric_sweep(model: TrainedModel, param: str, values,
                     base: GridSpec, out_dir=None):
    """One chart per value of a fixed parameter, plus an rh=50% band table.

    Returns the list of ChartDocument (filenames encode the value). When
    ``out_dir`` is given, every SVG and the band CSV are written there.
    """
    if param not in SWEEP_PARAMS:
        raise ValueError(f"sweep parameter must be one of {SWEEP_PARAMS}, got {param!r}")
    if param == "age" and base.feature_set is not FeatureSet.FIVE_PARAM:
        raise ValueError("age sweeps need the five-parameter feature set")
    values = list(values)
    if not values:
        raise EmptyValueList(f"no values supplied for {param} sweep")

    charts = []
    band_rows = []
    for value in values:
        spec = replace(base, **{param: float(value)})
        points = classify_grid(model, spec)
        name = f"sweep_{param}_{_format_value(float(value))}.svg"
        charts.append(render_chart(
            points, title=f"{param} = {_format_value(float(value))}", filename=name))
        band = comfort_band(model, 50.0, spec)
        band_rows.append((float(value), band))

    if out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
        for chart in charts:
            with open(os.path.join(out_dir, chart.filename), "wb") as fh:
                fh.write(chart.svg)
        csv_path = os.path.join(out_dir, f"sweep_{param}_band_rh50.csv")
        with open(csv_path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["rh", "t_min_c", "t_max_c", param])
            for value, band in band_rows:
                t_min = "" if band is None else repr(band[0])
                t_max = "" if band is None else repr(band[1])
                writer.writerow(["50", t_min, t_max, _format_value(value)])
    return charts
