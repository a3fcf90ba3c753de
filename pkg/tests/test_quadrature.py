"""Disc quadrature: exactness, region rules, Carleson change of variables."""

import numpy as np
import pytest

from bergman_lab import CarlesonSet, EvaluationError, disc_rule, pseudo_disk, region_quadrature
from bergman_lab.quadrature import CarlesonRegion, EuclideanDisk, FullDisc


class TestDiscRule:
    def test_area(self):
        rule = disc_rule(16, 32)
        assert rule.integrate(lambda z: np.ones(z.shape)) == pytest.approx(np.pi, rel=1e-12)

    def test_polynomial_exactness(self):
        # int |z|^(2n) dA = pi / (n + 1); radial GL with k nodes is exact to t^(2k-1)
        rule = disc_rule(16, 32)
        for n in (1, 5, 12):
            val = rule.integrate(lambda z, n=n: np.abs(z) ** (2 * n))
            assert val == pytest.approx(np.pi / (n + 1), rel=1e-12)

    def test_angular_orthogonality(self):
        # int z^3 conj(z)^1 dA = 0 by angular symmetry
        rule = disc_rule(12, 32)
        val = rule.integrate(lambda z: z**3 * np.conj(z))
        assert abs(val) < 1e-14

    def test_truncated_radius(self):
        rule = disc_rule(16, 32, 0.5)
        assert rule.integrate(lambda z: np.ones(z.shape)) == pytest.approx(np.pi * 0.25, rel=1e-12)

    def test_nonfinite_integrand_names_node(self):
        rule = disc_rule(8, 16)
        with pytest.raises(EvaluationError):
            rule.integrate(lambda z: 1.0 / (np.abs(z) - np.abs(z)))


class TestRegionQuadrature:
    def test_euclidean_disk_area(self):
        q = region_quadrature(EuclideanDisk(0.2 + 0.1j, 0.3), 32)
        assert q.integrate(lambda z: np.ones(z.shape)) == pytest.approx(np.pi * 0.09, rel=1e-10)

    def test_pseudo_disk_area(self):
        d = pseudo_disk(0.5, 0.4)
        q = region_quadrature(d, 32)
        exact = np.pi * d.euclid_radius**2
        assert q.integrate(lambda z: np.ones(z.shape)) == pytest.approx(exact, rel=1e-10)

    def test_full_disc(self):
        q = region_quadrature(FullDisc(), 32)
        assert q.area == pytest.approx(np.pi, rel=1e-10)

    def test_carleson_area_grows_as_anchor_shrinks(self):
        # S(a) swallows more of the disc as the anchor moves inward
        areas = []
        for a in (0.7, 0.3, 1e-4):
            q = region_quadrature(CarlesonRegion(a + 0j), 64)
            areas.append(q.integrate(lambda z: np.ones(z.shape)))
        assert areas[0] < areas[1] < areas[2] < np.pi

    def test_carleson_nodes_inside_set(self):
        a = 0.6 + 0.2j
        q = region_quadrature(CarlesonRegion(a), 48)
        assert np.all(CarlesonSet(a).contains(q.nodes))

    def test_carleson_area_shrinks_near_boundary(self):
        # area(S(a)) ~ (1 - |a|)^2 up to constants
        areas = []
        for rho in (0.9, 0.95, 0.975):
            q = region_quadrature(CarlesonRegion(rho + 0j), 48)
            areas.append(q.integrate(lambda z: np.ones(z.shape)))
        ratios = [areas[i] / areas[i + 1] for i in range(2)]
        for r in ratios:
            assert 3.0 < r < 5.0  # quarters of (1-rho) give factor ~4
