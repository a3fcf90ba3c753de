"""Theorem checkers: boundedness/compactness/qlp indices and Carleson tests."""

import numpy as np
import pytest

from bergman_lab import (
    DomainError,
    boundary_ladder,
    boundedness_index,
    carleson_test,
    compactness_index,
    power_density,
    qlp_index,
    theorem_consistency_report,
    vanishing_carleson_test,
    weighted_area,
)


class TestBoundedness:
    def test_identity_measure(self, model_u1, u1, lattice_small):
        mu = weighted_area(u1)
        rep = boundedness_index(mu, u1, model_u1, 2.0, 2.0, 2.0, 0.3, lattice_small)
        assert rep.verdict == "finite"
        # p = q: the exponent vanishes and the quantity is the average = 1
        assert rep.index_value == pytest.approx(1.0, rel=1e-6)
        assert rep.extras["berezin_index"] == pytest.approx(1.0, rel=1e-6)

    def test_homogeneity(self, model_u1, u1, lattice_small):
        # scaling mu by c scales the index by c
        mu = power_density(1.0)
        a = boundedness_index(mu, u1, model_u1, 2.0, 2.0, 2.0, 0.3, lattice_small)
        b = boundedness_index(mu.scaled(2.5), u1, model_u1, 2.0, 2.0, 2.0, 0.3, lattice_small)
        assert b.index_value == pytest.approx(2.5 * a.index_value, rel=1e-9)

    def test_ladder_trend(self, model_u1, u1):
        lad = boundary_ladder(6, 8)
        rep = boundedness_index(weighted_area(u1), u1, model_u1, 2.0, 2.0, 2.0, 0.3, lad)
        assert rep.verdict == "finite"
        assert len(rep.ring_trend) == 6

    def test_requires_p_le_q(self, model_u1, u1, lattice_small):
        with pytest.raises(DomainError):
            boundedness_index(power_density(1.0), u1, model_u1, 4.0, 2.0, 2.0, 0.3, lattice_small)


class TestCompactness:
    def test_identity_measure_flat(self, model_u1, u1):
        lad = boundary_ladder(6, 8)
        rep = compactness_index(weighted_area(u1), u1, model_u1, 2.0, 2.0, 2.0, 0.3, lad)
        assert rep.verdict == "finite"
        vals = [v for _, v in rep.ring_trend]
        assert max(vals) == pytest.approx(1.0, rel=1e-5)

    def test_vanishing_density(self, model_u1, u1):
        # mu = (1-|z|^2) dA decays like (1-rho) per ring: compact
        lad = boundary_ladder(6, 8)
        rep = compactness_index(power_density(1.0), u1, model_u1, 2.0, 2.0, 2.0, 0.3, lad)
        assert rep.verdict == "vanishing"
        assert rep.extras["berezin_trend_verdict"] == "vanishing"


class TestQlp:
    def test_identity_measure_norm(self, u1):
        # mu^_r = 1: the L^4(dA) norm over |z| < r_max is (pi r_max^2)^(1/4)
        rep = qlp_index(weighted_area(u1), u1, None, 4.0, 2.0, 2.0, 0.3, reference="dA")
        from bergman_lab.config import DEFAULTS

        assert rep.verdict == "finite"
        assert rep.index_value == pytest.approx((np.pi * DEFAULTS.r_max**2) ** 0.25, rel=1e-6)

    def test_requires_q_below_p(self, u1):
        with pytest.raises(DomainError):
            qlp_index(power_density(1.0), u1, None, 2.0, 2.0, 2.0, 0.3)

    def test_unknown_reference(self, u1):
        with pytest.raises(DomainError):
            qlp_index(power_density(1.0), u1, None, 4.0, 2.0, 2.0, 0.3, reference="other")


class TestCarleson:
    def test_identity_measure_exact(self, u1, model_u1_small):
        # mu = u dA with p = q: (b) and (c) are both exactly 1 at every anchor
        rep = carleson_test(
            weighted_area(u1), u1, model_u1_small, 2.0, 2.0, 0.3, 2.0, 1.5, [0.3, 0.5, 0.6j]
        )
        assert rep.extras["index_b"] == pytest.approx(1.0, rel=1e-6)
        assert rep.extras["index_c"] == pytest.approx(1.0, rel=1e-6)
        assert rep.verdict == "finite"

    def test_s_floor(self, u1, model_u1_small):
        with pytest.raises(DomainError):
            carleson_test(
                power_density(1.0), u1, model_u1_small, 2.0, 2.0, 0.3, 1.0, 1.5, [0.3]
            )

    def test_matches_boundedness_index_p_eq_q(self, u1, model_u1, lattice_small):
        # with p = q the disk sub-index (c) is the boundedness quantity itself
        pts = lattice_small.points[:12]
        mu = power_density(1.0)
        rep_c = carleson_test(mu, u1, model_u1, 2.0, 2.0, 0.3, 2.0, 1.5, pts)
        rep_b = boundedness_index(mu, u1, model_u1, 2.0, 2.0, 2.0, 0.3, pts)
        assert rep_c.extras["index_c"] == pytest.approx(rep_b.index_value, rel=1e-9)

    def test_vanishing_trend(self, u1):
        lad = boundary_ladder(6, 8)
        rep = vanishing_carleson_test(power_density(0.5), u1, 2.0, 2.0, lad)
        assert rep.verdict == "vanishing"
        rep_id = vanishing_carleson_test(weighted_area(u1), u1, 2.0, 2.0, lad)
        assert rep_id.verdict == "finite"


class TestConsistency:
    def test_identity_p_le_q(self, model_u1, u1):
        rep = theorem_consistency_report(weighted_area(u1), u1, model_u1, 2.0, 2.0, 2.0, 0.3, 2.0)
        assert rep.extras["agreement"] is True
        assert rep.verdict == "finite"

    def test_vanishing_density_p_le_q(self, model_u1, u1):
        rep = theorem_consistency_report(power_density(1.0), u1, model_u1, 2.0, 2.0, 2.0, 0.3, 2.0)
        assert rep.extras["agreement"] is True
        assert rep.verdict == "vanishing"

    def test_q_below_p(self, model_u1, u1):
        rep = theorem_consistency_report(power_density(2.0), u1, model_u1, 4.0, 2.0, 2.0, 0.3, 2.0)
        assert rep.extras["agreement"] is True
        assert rep.verdict == "finite"
        assert "iv_average_lp_u_dA" in rep.extras["conditions"]
        assert "vi_vanishing_carleson" in rep.extras["conditions"]

    def test_carleson_not_applicable_small_q(self, model_u1, u1):
        rep = theorem_consistency_report(
            power_density(1.0), u1, model_u1, 0.8, 0.9, 2.0, 0.3, 4.0
        )
        assert rep.extras["conditions"]["iv_carleson_s"]["verdict"] == "not applicable"
