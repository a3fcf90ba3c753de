"""Report containers and trend classification shared by all theorem checkers.

Comparability statements come with unspecified constants, so nothing here
asserts a constant: reports carry index values, per-point samples, per-ring
maxima along a boundary ladder, and a verdict derived from the trend.

Trend verdicts combine an absolute-threshold test with a dyadic growth-rate
fit: values like (1-rho)^0.1 decay far too slowly to cross any fixed
threshold within float-representable radii, but their log2 slope per dyadic
ring (-0.1) is measured cleanly after a handful of rings.
"""

from __future__ import annotations

import csv
import io
import json
import math

import numpy as np

__all__ = ["CriterionReport", "band", "classify_ring_trend", "ring_slope"]


def band(values):
    """(min, max) of a sample set, as plain floats."""
    values = np.asarray(values, dtype=float)
    finite = values[np.isfinite(values)]
    if finite.size == 0:
        return (float("nan"), float("nan"))
    return (float(np.min(finite)), float(np.max(finite)))


def ring_slope(values, tail=5):
    """Mean log2 ratio of consecutive ring maxima over the trailing rings."""
    vals = [v for v in values if np.isfinite(v) and v > 0]
    if len(vals) < 2:
        return 0.0
    vals = vals[-(tail + 1) :]
    ratios = [math.log2(b / a) for a, b in zip(vals, vals[1:])]
    return float(np.mean(ratios))


def classify_ring_trend(
    values,
    vanish_rel=1e-3,
    vanish_abs=1e-12,
    slope_tol=0.04,
):
    """Classify per-ring maxima as finite / vanishing / divergent / inconclusive.

    * divergent: sustained positive dyadic slope;
    * vanishing: decreasing over the last three rings and either below the
      absolute threshold max(vanish_rel * max, vanish_abs) or with a sustained
      negative slope;
    * finite: bounded without decay to zero;
    * inconclusive: too little data or non-monotone noise near the tolerance.
    """
    vals = [float(v) for v in values]
    if any(not np.isfinite(v) for v in vals):
        return "divergent"
    if len(vals) < 3:
        return "inconclusive"
    vmax = max(vals)
    if vmax <= vanish_abs:
        return "vanishing"
    slope = ring_slope(vals)
    tail3 = vals[-3:]
    decreasing = tail3[0] >= tail3[1] >= tail3[2]
    if slope >= slope_tol:
        return "divergent"
    threshold = max(vanish_rel * vmax, vanish_abs)
    if decreasing and (vals[-1] <= threshold or slope <= -slope_tol):
        return "vanishing"
    if abs(slope) < slope_tol or decreasing:
        return "finite"
    return "inconclusive"


class CriterionReport:
    """Named index with samples, a boundary trend, and a verdict."""

    def __init__(self, name, parameters, index_value, per_point, ring_trend, verdict, extras=None):
        self.name = name
        self.parameters = dict(parameters)
        self.index_value = index_value
        self.per_point = list(per_point)
        self.ring_trend = [(float(r), float(v)) for r, v in ring_trend]
        self.verdict = verdict
        self.extras = dict(extras or {})

    def __repr__(self):
        return (
            f"CriterionReport({self.name!r}, index={self.index_value!r}, "
            f"verdict={self.verdict!r})"
        )

    def to_dict(self):
        def _num(x):
            if isinstance(x, complex):
                return [x.real, x.imag]
            if isinstance(x, (np.floating, np.integer)):
                return x.item()
            return x

        return {
            "name": self.name,
            "parameters": {k: _num(v) for k, v in self.parameters.items()},
            "index_value": _num(self.index_value)
            if np.isfinite(self.index_value)
            else "inf",
            "per_point": [
                [float(np.real(z)), float(np.imag(z)), _num(float(v))]
                for z, v in self.per_point
            ],
            "ring_trend": [[r, v] for r, v in self.ring_trend],
            "verdict": self.verdict,
            "extras": {k: _jsonable(v) for k, v in self.extras.items()},
        }

    def to_json(self, **kwargs):
        kwargs.setdefault("sort_keys", True)
        return json.dumps(self.to_dict(), **kwargs)

    def per_point_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["re", "im", "value"])
        for z, v in self.per_point:
            writer.writerow([float(np.real(z)), float(np.imag(z)), float(v)])
        return buf.getvalue()


def _jsonable(v):
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, (np.floating, np.integer)):
        v = v.item()
    if isinstance(v, np.ndarray):
        return v.tolist()
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, float) and not np.isfinite(v):
        return "inf" if v > 0 else ("-inf" if v < 0 else "nan")
    return v
