"""Berezin / t-Berezin / averaging transforms and comparability."""

import numpy as np
import pytest

from bergman_lab import (
    DomainError,
    atomic,
    average_function,
    average_profile,
    berezin,
    berezin_profile,
    comparability_report,
    kernel_diag,
    power_density,
    profile_lp_norm,
    pseudo_disk,
    standard,
    t_berezin,
    t_berezin_profile,
    weighted_area,
)


class TestBerezin:
    def test_normalization_u_dA(self, model_u1, lattice_small):
        # mu = u dA reproduces: Berezin transform is identically 1
        mu = weighted_area(model_u1.weight)
        vals = berezin_profile(mu, model_u1, lattice_small.points)
        assert np.max(np.abs(vals - 1.0)) < 1e-8

    def test_normalization_standard(self, model_std, lattice_small):
        mu = weighted_area(model_std.weight)
        vals = berezin_profile(mu, model_std, lattice_small.points)
        assert np.max(np.abs(vals - 1.0)) < 1e-6

    def test_point_mass_closed_form(self, model_u1):
        # mu = c delta_w: mu~(z) = c |K(z,w)|^2 / K(z,z)
        w, c, z = 0.4, 2.0, 0.2 + 0.1j
        mu = atomic([(w, c)])
        exact = c * abs(1.0 / (np.pi * (1.0 - w * z) ** 2)) ** 2 / kernel_diag(model_u1, z)
        assert berezin(mu, model_u1, z) == pytest.approx(exact, rel=1e-8)

    def test_positive_and_linear(self, model_u1_small):
        mu = atomic([(0.3, 1.0)])
        v1 = berezin(mu, model_u1_small, 0.1)
        v2 = berezin(mu.scaled(3.0), model_u1_small, 0.1)
        assert v1 > 0
        assert v2 == pytest.approx(3.0 * v1, rel=1e-12)


class TestTBerezin:
    def test_t2_matches_berezin(self, model_u1_small, disc_points):
        mu = power_density(1.0)
        a = t_berezin_profile(mu, model_u1_small, 2.0, disc_points)
        b = berezin_profile(mu, model_u1_small, disc_points)
        assert np.allclose(a, b, rtol=1e-8)

    def test_identity_measure_t4(self, model_u1):
        # mu = u dA: int |K_z|^t u dA = ||K_z||_t^t, so mu~_t = 1 for every t
        mu = weighted_area(model_u1.weight)
        for z in (0.0, 0.3, 0.5j):
            assert t_berezin(mu, model_u1, 4.0, z) == pytest.approx(1.0, rel=1e-6)

    def test_requires_positive_t(self, model_u1_small):
        with pytest.raises(DomainError):
            t_berezin(power_density(1.0), model_u1_small, 0.0, 0.1)


class TestAverageFunction:
    def test_identity_measure_is_one(self, u1):
        # mu = u dA gives mu^_r = 1 exactly
        mu = weighted_area(u1)
        for z in (0.0, 0.4, 0.3 - 0.5j):
            assert average_function(mu, u1, 0.3, z) == pytest.approx(1.0, rel=1e-9)

    def test_point_mass(self, u1):
        # atom inside Delta(z, r): average = c / (u-mass of the disk)
        from bergman_lab import mass

        mu = atomic([(0.2, 1.5)])
        d = pseudo_disk(0.2, 0.3)
        assert average_function(mu, u1, 0.3, 0.2) == pytest.approx(1.5 / mass(u1, d), rel=1e-9)
        assert average_function(mu, u1, 0.3, -0.6) == 0.0

    def test_invalid_radius(self, u1):
        with pytest.raises(DomainError):
            average_function(weighted_area(u1), u1, 1.0, 0.0)

    def test_profile_shape(self, u1, disc_points):
        vals = average_profile(weighted_area(u1), u1, 0.3, disc_points)
        assert vals.shape == (len(disc_points),)
        assert np.all(vals > 0)


class TestProfileLpNorm:
    def test_identity_measure_norm(self, u1):
        # mu^_r = 1 so the L^p(u dA) norm is pi^(1/p)
        norm, radii, partials = profile_lp_norm(weighted_area(u1), u1, 0.3, 2.0, r_max=0.9)
        assert norm == pytest.approx((np.pi * 0.81) ** 0.5, rel=1e-6)
        assert len(radii) == len(partials)
        assert np.all(np.diff(partials) >= -1e-14)

    def test_reference_dA(self, u1):
        ustd = standard(1.0)
        n_u, _, _ = profile_lp_norm(weighted_area(ustd), ustd, 0.3, 2.0, reference="u_dA", r_max=0.9)
        n_a, _, _ = profile_lp_norm(weighted_area(ustd), ustd, 0.3, 2.0, reference="dA", r_max=0.9)
        assert n_u != pytest.approx(n_a, rel=1e-3)


class TestComparability:
    def test_identity_measure_bands(self, model_u1_small, lattice_small):
        mu = weighted_area(model_u1_small.weight)
        rep = comparability_report(mu, model_u1_small, 2.0, 0.3, lattice_small)
        assert rep.verdict == "finite"
        # both transforms are exactly 1 for mu = u dA
        assert rep.extras["lp_ratio"] == pytest.approx(1.0, rel=1e-6)
        lo, hi = rep.extras["berezin_band"]
        assert lo == pytest.approx(1.0, rel=1e-6) and hi == pytest.approx(1.0, rel=1e-6)

    def test_power_density_comparable(self, model_u1_small, lattice_small):
        rep = comparability_report(power_density(1.0), model_u1_small, 2.0, 0.3, lattice_small)
        assert rep.verdict == "finite"
        assert 0 < rep.extras["lower_band"]
        assert rep.extras["lp_ratio"] < 10.0
