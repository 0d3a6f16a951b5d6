"""File formats: prediction CSV ingestion, report emission, SVG charts.

The interchange format for predictions is a plain CSV with header
``id,label,p0,p1,...,p{K-1}`` and one row per sample; K is inferred from the
header. Reports go out as JSON (always carrying the configuration that
produced them) or, for retention curves, as two-column CSV. All writes go to
a temp file in the target directory and are renamed into place, so a failed
run never leaves a truncated output.

Reals are written with 17 significant digits, which round-trips float64
exactly.
"""

import csv
import json
import os
import tempfile
from dataclasses import asdict

import numpy as np

from .data import CostMatrix, EvalDataset, validate_dataset
from .errors import (
    GridMismatch,
    InvalidConfig,
    MalformedHeader,
    NonNumericField,
    RowArityMismatch,
)
from .hard import MetricReport
from .retention import BootstrapSummary, RetentionCurve

_FLOAT_FMT = "{:.17g}"


def _fmt(x: float) -> str:
    return _FLOAT_FMT.format(float(x))


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix="~")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _expected_header(k: int) -> list[str]:
    return ["id", "label"] + [f"p{i}" for i in range(k)]


def read_predictions(path: str, label_base: int = 0) -> EvalDataset:
    """Parse and validate a prediction CSV.

    ``label_base`` is 0 or 1 depending on how the file indexes classes;
    labels are shifted to 0-based internally. Errors carry 1-based line
    numbers.
    """
    if label_base not in (0, 1):
        raise InvalidConfig(f"label_base must be 0 or 1, got {label_base}")
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise MalformedHeader(f"{path}: empty file")
    header = [field.strip() for field in rows[0]]
    k = len(header) - 2
    if k < 2 or header != _expected_header(k):
        raise MalformedHeader(
            f"{path}: line 1: expected header 'id,label,p0,...', got {','.join(header)!r}"
        )

    ids = []
    labels = []
    probs = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != k + 2:
            raise RowArityMismatch(
                f"{path}: line {lineno}: expected {k + 2} fields, got {len(row)}"
            )
        ids.append(row[0])
        try:
            labels.append(int(row[1]))
        except ValueError:
            raise NonNumericField(
                f"{path}: line {lineno}: label {row[1]!r} is not an integer"
            ) from None
        try:
            probs.append([float(v) for v in row[2:]])
        except ValueError:
            raise NonNumericField(
                f"{path}: line {lineno}: non-numeric probability"
            ) from None

    labels = np.array(labels, dtype=np.int64) - label_base
    probs = np.array(probs, dtype=np.float64).reshape(len(ids), k)
    return validate_dataset(EvalDataset(k, tuple(ids), labels, probs))


def write_predictions(ds: EvalDataset, path: str) -> None:
    """Emit a dataset in the prediction CSV schema (0-based labels)."""
    lines = [",".join(_expected_header(ds.num_classes))]
    for i in range(len(ds)):
        fields = [ds.ids[i], str(int(ds.labels[i]))]
        fields += [_fmt(p) for p in ds.probs[i]]
        lines.append(",".join(fields))
    _atomic_write(path, "\n".join(lines) + "\n")


def read_cost_matrix(path: str) -> CostMatrix:
    """Parse a K x K cost CSV (no header) with full CostMatrix validation."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    rows = [row for row in rows if row]
    parsed = []
    width = None
    for lineno, row in enumerate(rows, start=1):
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise RowArityMismatch(
                f"{path}: line {lineno}: expected {width} fields, got {len(row)}"
            )
        try:
            parsed.append([float(v) for v in row])
        except ValueError:
            raise NonNumericField(f"{path}: line {lineno}: non-numeric cost") from None
    return CostMatrix.from_array(parsed)


def _report_payload(report, config):
    if isinstance(report, MetricReport):
        payload = {"type": "metric_report", **asdict(report)}
    elif isinstance(report, RetentionCurve):
        payload = {
            "type": "retention_curve",
            "rule": report.rule,
            "metric": report.metric,
            "fractions": list(report.fractions),
            "values": list(report.values),
            "aursc": report.aursc,
        }
    elif isinstance(report, BootstrapSummary):
        payload = {
            "type": "bootstrap_summary",
            "mean": report.mean,
            "std": report.std,
            "replicates": list(report.replicates),
            "seed": report.seed,
            "num_replicates": report.num_replicates,
        }
    elif isinstance(report, dict):
        payload = dict(report)
    else:
        raise InvalidConfig(f"cannot serialize report of type {type(report).__name__}")
    if config is not None:
        payload["config"] = config
    return payload


def write_report(report, path: str, fmt: str = "json", config: dict | None = None) -> None:
    """Write a report as JSON, or a retention curve as fraction,value CSV.

    JSON output should include ``config`` (the effective run parameters) so
    the file is enough to reproduce the computation.
    """
    if fmt == "json":
        payload = _report_payload(report, config)
        _atomic_write(path, json.dumps(payload, indent=2) + "\n")
    elif fmt == "csv":
        if not isinstance(report, RetentionCurve):
            raise InvalidConfig("csv format applies only to retention curves")
        lines = ["fraction,value"]
        lines += [
            f"{_fmt(f)},{_fmt(v)}"
            for f, v in zip(report.fractions, report.values)
        ]
        _atomic_write(path, "\n".join(lines) + "\n")
    else:
        raise InvalidConfig(f"unknown report format {fmt!r}")


def read_curve_csv(path: str) -> tuple[tuple, tuple]:
    """Read back a fraction,value curve CSV (round-trip convenience)."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows or [f.strip() for f in rows[0]] != ["fraction", "value"]:
        raise MalformedHeader(f"{path}: expected 'fraction,value' header")
    fractions = []
    values = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != 2:
            raise RowArityMismatch(
                f"{path}: line {lineno}: expected 2 fields, got {len(row)}"
            )
        try:
            fractions.append(float(row[0]))
            values.append(float(row[1]))
        except ValueError:
            raise NonNumericField(f"{path}: line {lineno}: non-numeric field") from None
    return tuple(fractions), tuple(values)


_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b")

_SVG_W, _SVG_H = 720, 460
_MARGIN_L, _MARGIN_R, _MARGIN_T, _MARGIN_B = 70, 150, 40, 60


def render_curve_svg(curves: list[RetentionCurve], path: str) -> None:
    """Standalone SVG line chart of retention curves on a shared grid.

    x runs from full retention (1.0, left) toward heavier removal (right);
    one polyline and one legend entry per rule.
    """
    if not curves:
        raise GridMismatch("no curves to render")
    fractions = curves[0].fractions
    metric = curves[0].metric
    for c in curves[1:]:
        if c.fractions != fractions:
            raise GridMismatch("curves are on different fraction grids")
        if c.metric != metric:
            raise GridMismatch("curves mix different metrics")

    f_hi, f_lo = fractions[0], fractions[-1]
    y_all = [v for c in curves for v in c.values]
    y_lo, y_hi = min(y_all), max(y_all)
    if y_hi == y_lo:
        y_lo -= 0.05
        y_hi += 0.05
    else:
        pad = 0.05 * (y_hi - y_lo)
        y_lo -= pad
        y_hi += pad

    plot_w = _SVG_W - _MARGIN_L - _MARGIN_R
    plot_h = _SVG_H - _MARGIN_T - _MARGIN_B

    def x_px(f: float) -> float:
        return _MARGIN_L + (f_hi - f) / (f_hi - f_lo) * plot_w

    def y_px(v: float) -> float:
        return _MARGIN_T + (y_hi - v) / (y_hi - y_lo) * plot_h

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_SVG_W}" height="{_SVG_H}" viewBox="0 0 {_SVG_W} {_SVG_H}">',
        '<rect width="100%" height="100%" fill="#ffffff"/>',
    ]

    x0, x1 = _MARGIN_L, _MARGIN_L + plot_w
    y0, y1 = _MARGIN_T, _MARGIN_T + plot_h
    # gridlines and y ticks
    for i in range(6):
        v = y_lo + (y_hi - y_lo) * i / 5
        y = y_px(v)
        parts.append(
            f'<line x1="{x0}" y1="{y:.2f}" x2="{x1}" y2="{y:.2f}" '
            f'stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x0 - 8}" y="{y + 4:.2f}" text-anchor="end" '
            f'font-size="12" font-family="sans-serif">{v:.3g}</text>'
        )
    # axes
    parts.append(
        f'<line x1="{x0}" y1="{y1}" x2="{x1}" y2="{y1}" stroke="#000" stroke-width="1.5"/>'
    )
    parts.append(
        f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="#000" stroke-width="1.5"/>'
    )
    # x ticks: at most ~10 labels
    step = max(1, len(fractions) // 10)
    for f in fractions[::step]:
        x = x_px(f)
        parts.append(
            f'<line x1="{x:.2f}" y1="{y1}" x2="{x:.2f}" y2="{y1 + 5}" '
            f'stroke="#000" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{y1 + 20}" text-anchor="middle" '
            f'font-size="12" font-family="sans-serif">{f:.2f}</text>'
        )
    parts.append(
        f'<text x="{(x0 + x1) / 2:.2f}" y="{_SVG_H - 15}" text-anchor="middle" '
        f'font-size="13" font-family="sans-serif">fraction retained</text>'
    )
    parts.append(
        f'<text x="18" y="{(y0 + y1) / 2:.2f}" text-anchor="middle" '
        f'font-size="13" font-family="sans-serif" '
        f'transform="rotate(-90 18 {(y0 + y1) / 2:.2f})">{metric}</text>'
    )

    for i, c in enumerate(curves):
        color = _COLORS[i % len(_COLORS)]
        points = " ".join(
            f"{x_px(f):.2f},{y_px(v):.2f}" for f, v in zip(c.fractions, c.values)
        )
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="2" points="{points}"/>'
        )
        ly = y0 + 14 + i * 20
        lx = x1 + 14
        parts.append(
            f'<line x1="{lx}" y1="{ly}" x2="{lx + 22}" y2="{ly}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{lx + 28}" y="{ly + 4}" font-size="12" '
            f'font-family="sans-serif">{c.rule}</text>'
        )

    parts.append("</svg>")
    _atomic_write(path, "\n".join(parts) + "\n")
