"""Report containers and the ring-trend classifier."""

import json

import numpy as np
import pytest

from bergman_lab import CriterionReport, band, classify_ring_trend, ring_slope


class TestBand:
    def test_plain(self):
        assert band([3.0, 1.0, 2.0]) == (1.0, 3.0)

    def test_ignores_nonfinite(self):
        assert band([1.0, np.inf, np.nan, 2.0]) == (1.0, 2.0)

    def test_empty(self):
        lo, hi = band([])
        assert np.isnan(lo) and np.isnan(hi)


class TestRingSlope:
    def test_geometric_decay(self):
        vals = [2.0**-k for k in range(8)]
        assert ring_slope(vals) == pytest.approx(-1.0)

    def test_flat(self):
        assert ring_slope([5.0] * 6) == pytest.approx(0.0)

    def test_short_input(self):
        assert ring_slope([1.0]) == 0.0


class TestClassifier:
    def test_flat_is_finite(self):
        assert classify_ring_trend([1.0, 1.0, 1.0, 1.0]) == "finite"

    def test_geometric_decay_is_vanishing(self):
        assert classify_ring_trend([2.0**-k for k in range(8)]) == "vanishing"

    def test_slow_decay_is_vanishing(self):
        # (1 - rho)^0.1 along dyadic rings: slope -0.1 is below -0.04
        vals = [(2.0**-k) ** 0.1 for k in range(1, 13)]
        assert classify_ring_trend(vals) == "vanishing"

    def test_slow_growth_is_divergent(self):
        vals = [(2.0**k) ** 0.1 for k in range(1, 13)]
        assert classify_ring_trend(vals) == "divergent"

    def test_infinity_is_divergent(self):
        assert classify_ring_trend([1.0, np.inf, 1.0]) == "divergent"

    def test_all_zero_is_vanishing(self):
        assert classify_ring_trend([0.0, 0.0, 0.0]) == "vanishing"

    def test_too_short_is_inconclusive(self):
        assert classify_ring_trend([1.0, 2.0]) == "inconclusive"


class TestCriterionReport:
    def _rep(self):
        return CriterionReport(
            name="demo",
            parameters={"p": 2.0},
            index_value=1.5,
            per_point=[(0.3 + 0.1j, 0.7)],
            ring_trend=[(0.5, 1.0), (0.75, 0.5)],
            verdict="finite",
            extras={"band": (0.1, 0.9), "arr": np.array([1.0, 2.0]), "inf": float("inf")},
        )

    def test_json_round_trip(self):
        d = json.loads(self._rep().to_json())
        assert d["name"] == "demo"
        assert d["verdict"] == "finite"
        assert d["ring_trend"] == [[0.5, 1.0], [0.75, 0.5]]
        assert d["extras"]["arr"] == [1.0, 2.0]
        assert d["extras"]["inf"] == "inf"

    def test_per_point_csv(self):
        lines = self._rep().per_point_csv().strip().splitlines()
        assert lines[0] == "re,im,value"
        re, im, v = map(float, lines[1].split(","))
        assert (re, im, v) == (0.3, 0.1, 0.7)

    def test_json_deterministic(self):
        assert self._rep().to_json() == self._rep().to_json()
