"""Toeplitz matrices: spectra, trace identity, apply consistency, Schatten."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bergman_lab import (
    DomainError,
    Spectrum,
    apply_toeplitz,
    assemble,
    atomic,
    boundary_ladder,
    essential_norm_estimate,
    h_function,
    kernel_diag,
    matrix_apply,
    pairing_check,
    power_density,
    schatten_integral,
    schatten_membership,
    schatten_membership_report,
    spectrum,
    standard,
    trace_identity_check,
    weighted_area,
)


class TestMatrix:
    def test_identity_measure(self, model_u1_small, u1):
        T = assemble(weighted_area(u1), model_u1_small)
        assert np.max(np.abs(T.entries - np.eye(T.size))) < 1e-10
        assert T.operator_norm() == pytest.approx(1.0, rel=1e-10)

    def test_rank_one_point_mass(self, model_u1_small):
        # mu = 2 delta_0: single eigenvalue 2 K_N(0,0) = 2/pi
        T = assemble(atomic([(0.0, 2.0)]), model_u1_small)
        lam = T.eigenvalues()
        assert lam[0] == pytest.approx(2.0 / np.pi, rel=1e-12)
        assert np.max(lam[1:]) < 1e-14

    def test_rank_one_off_center(self, model_u1_small):
        z0, c = 0.4 + 0.2j, 1.5
        T = assemble(atomic([(z0, c)]), model_u1_small)
        exact = c * kernel_diag(model_u1_small, z0)
        assert T.eigenvalues()[0] == pytest.approx(exact, rel=1e-10)

    def test_spectrum_csv(self, model_u1_small):
        sp = spectrum(assemble(atomic([(0.0, 2.0)]), model_u1_small))
        lines = sp.to_csv().strip().splitlines()
        assert lines[0] == "k,lambda"
        assert float(lines[1].split(",")[1]) == pytest.approx(2.0 / np.pi)

    def test_spectrum_requires_descending(self):
        with pytest.raises(DomainError):
            Spectrum((1.0, 2.0))

    def test_monotone_in_measure(self, model_u1_small):
        T1 = assemble(atomic([(0.3, 1.0)]), model_u1_small)
        T2 = assemble(atomic([(0.3, 1.0), (0.1j, 0.5)]), model_u1_small)
        # mu1 <= mu2 implies lambda_k(T1) <= lambda_k(T2) (Weyl monotonicity)
        assert np.all(T1.eigenvalues() <= T2.eigenvalues() + 1e-12)


class TestTraceIdentity:
    def test_atomic(self, model_u1_small):
        mu = atomic([(0.2, 1.0), (0.5j, 0.7)])
        T = assemble(mu, model_u1_small)
        assert trace_identity_check(T, mu, model_u1_small) < 1e-10

    def test_density(self, model_u1_small):
        mu = power_density(1.0)
        T = assemble(mu, model_u1_small)
        assert trace_identity_check(T, mu, model_u1_small) < 1e-8

    def test_standard_weight(self, model_std):
        mu = weighted_area(standard(1.0))
        T = assemble(mu, model_std)
        assert trace_identity_check(T, mu, model_std) < 1e-6


class TestApply:
    @given(
        coefs=st.lists(
            st.complex_numbers(max_magnitude=2.0, allow_infinity=False, allow_nan=False),
            min_size=1,
            max_size=5,
        ),
        k=st.integers(min_value=0, max_value=23),
    )
    @settings(max_examples=15, deadline=None)
    def test_direct_matches_matrix(self, coefs, k, model_u1_small, disc_points):
        mu = atomic([(0.3, 1.0), (0.2j, 0.5)])
        T = assemble(mu, model_u1_small)
        z = disc_points[k]
        a = apply_toeplitz(mu, model_u1_small, coefs, z)
        b = matrix_apply(T, coefs, z)
        assert a == pytest.approx(b, abs=1e-9 * (1 + abs(a)))

    def test_pairing(self, model_u1_small):
        mu = power_density(1.0)
        assert pairing_check(mu, model_u1_small, [1.0, 0.5j], [0.0, 1.0, -0.25]) < 1e-9

    def test_degree_cap(self, model_u1_small):
        with pytest.raises(DomainError):
            apply_toeplitz(power_density(1.0), model_u1_small, np.zeros(100), 0.1)


class TestEssentialNorm:
    def test_identity_measure_bounded(self, model_u1, u1):
        lad = boundary_ladder(8, 8)
        rep = essential_norm_estimate(
            weighted_area(u1), u1, 2.0, 2.0, 2.0, 0.3, lad, m=model_u1
        )
        assert rep.verdict == "bounded"
        assert rep.index_value == pytest.approx(1.0, rel=1e-5)

    def test_vanishing_density(self, model_u1, u1):
        lad = boundary_ladder(6, 8)
        rep = essential_norm_estimate(power_density(1.0), u1, 2.0, 2.0, 2.0, 0.3, lad, m=model_u1)
        assert rep.verdict == "vanishing"

    def test_q_less_p_short_circuit(self, u1):
        rep = essential_norm_estimate(power_density(2.0), u1, 4.0, 2.0, 2.0, 0.3, None)
        assert rep.verdict == "vanishing"
        assert rep.index_value == 0.0

    def test_invalid_exponents(self, u1):
        with pytest.raises(DomainError):
            essential_norm_estimate(power_density(1.0), u1, -1.0, 2.0, 2.0, 0.3, None)


class TestSchatten:
    def test_h_function_specs(self):
        name, f = h_function(("power", 2.0))
        assert name == "power(2)"
        assert f(3.0) == pytest.approx(9.0)
        _, g = h_function({"kind": "table", "x": [0.0, 1.0], "y": [0.0, 2.0]})
        assert g(0.5) == pytest.approx(1.0)
        with pytest.raises(DomainError):
            h_function(("power", 0.5))
        with pytest.raises(DomainError):
            h_function({"kind": "mystery"})

    def test_membership_rank_one(self, model_u1_small):
        # single eigenvalue lambda_1 = 2/pi, h = power(2): sum = (2/pi)^2
        T = assemble(atomic([(0.0, 2.0)]), model_u1_small)
        assert schatten_membership(T, ("power", 2.0)) == pytest.approx((2 / np.pi) ** 2, rel=1e-10)
        rep = schatten_membership_report(T, ("power", 2.0))
        assert rep.verdict == "finite"

    def test_membership_constant_scaling(self, model_u1_small):
        T = assemble(atomic([(0.0, 2.0)]), model_u1_small)
        s1 = schatten_membership(T, ("power", 2.0), C=1.0)
        s2 = schatten_membership(T, ("power", 2.0), C=3.0)
        assert s2 == pytest.approx(9.0 * s1, rel=1e-12)

    def test_integral_trend_finite(self, model_u1):
        rep = schatten_integral(power_density(2.0), model_u1, ("power", 2.0))
        assert rep.verdict in ("finite", "inconclusive")
        assert all(v > 0 for v in rep.extras["sweep_values"])

    def test_invalid_constant(self, model_u1_small):
        T = assemble(atomic([(0.0, 1.0)]), model_u1_small)
        with pytest.raises(DomainError):
            schatten_membership(T, ("power", 2.0), C=0.0)
