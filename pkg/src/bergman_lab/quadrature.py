"""Deterministic quadrature on the unit disc and its sub-regions.

Every area integral in the package goes through a DiscQuadrature: a list of
complex nodes and positive weights for one of three region kinds:

  * full_disc(r_max)            -- Gauss-Legendre in radius on [0, r_max],
                                   uniform (trapezoid) grid in angle;
  * euclidean_disk(c, rho)      -- the same polar rule recentered on the disk;
  * carleson_set(a)             -- the half-disc preimage of S(a) under the
                                   involution phi_a, mapped forward with the
                                   |phi_a'|^2 Jacobian baked into the weights.

The Carleson rule deserves a comment: S(a) is a Mobius image of the half-disc
H_a = {Re(conj(a) z) <= 0}, and on H_a the Jacobian (1-|a|^2)^2 / |1-conj(a)z|^4
is smooth and bounded by 1, so integrating in preimage coordinates converges
fast where naive indicator filtering of a disc rule would stall at the circline
boundary of S(a).

Rules are immutable and cached by region parameters; summation uses numpy's
pairwise reduction in a fixed node order, so repeated runs are bit-identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, EvaluationError, PrecisionError
from .geometry import CarlesonSet, PseudoDisk

__all__ = [
    "FullDisc",
    "EuclideanDisk",
    "CarlesonRegion",
    "DiscQuadrature",
    "integrate",
    "region_quadrature",
    "disc_rule",
]


@dataclass(frozen=True)
class FullDisc:
    r_max: float = 1.0


@dataclass(frozen=True)
class EuclideanDisk:
    center: complex
    radius: float


@dataclass(frozen=True)
class CarlesonRegion:
    anchor: complex


def as_region(region):
    """Normalize the region vocabulary accepted across the package."""
    if isinstance(region, (FullDisc, EuclideanDisk, CarlesonRegion)):
        return region
    if isinstance(region, PseudoDisk):
        return EuclideanDisk(region.euclid_center, region.euclid_radius)
    if isinstance(region, CarlesonSet):
        return CarlesonRegion(region.anchor)
    raise DomainError(f"unrecognized region {region!r}")


@dataclass(frozen=True, eq=False)
class DiscQuadrature:
    """An accepted quadrature rule: complex nodes, positive weights, region."""

    nodes: np.ndarray
    weights: np.ndarray
    region: object
    resolution: int

    def integrate(self, f):
        """Sum weights * f(nodes); f must accept a complex numpy array."""
        values = np.asarray(f(self.nodes))
        if values.shape != self.nodes.shape:
            values = np.broadcast_to(values, self.nodes.shape)
        if not np.all(np.isfinite(values)):
            bad = self.nodes[~np.isfinite(values)][0]
            raise EvaluationError(f"integrand not finite at node {bad}")
        total = np.sum(self.weights * values)
        if np.isrealobj(values):
            return float(np.real(total))
        return complex(total)

    @property
    def area(self):
        return float(np.sum(self.weights))


def integrate(q: DiscQuadrature, f):
    """Functional form of DiscQuadrature.integrate."""
    return q.integrate(f)


def _gauss_legendre(n, a, b):
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (b - a) * x + 0.5 * (a + b), 0.5 * (b - a) * w


@lru_cache(maxsize=256)
def _polar_rule(n_radial, n_angular, r_max):
    """Polar rule on the centered disk of radius r_max.

    Radial Gauss-Legendre (exact for polynomial r-degree <= 2 n_radial - 1
    including the r dr Jacobian), uniform trapezoid in angle (spectrally
    accurate for the periodic direction).
    """
    r, wr = _gauss_legendre(n_radial, 0.0, r_max)
    theta = 2.0 * np.pi * np.arange(n_angular) / n_angular
    wt = 2.0 * np.pi / n_angular
    nodes = (r[:, None] * np.exp(1j * theta)[None, :]).ravel()
    weights = (wr[:, None] * r[:, None] * wt * np.ones(n_angular)[None, :]).ravel()
    return nodes, weights


@lru_cache(maxsize=256)
def _carleson_rule(re_a, im_a, n_radial, n_angular, r_inner):
    """Quadrature for S(a) built in the phi_a preimage half-disc."""
    a = complex(re_a, im_a)
    if a == 0:
        return _polar_rule(n_radial, n_angular, r_inner)
    phase = np.angle(a)
    # half-disc {Re(conj(a) z) <= 0}: angles in [phase + pi/2, phase + 3 pi/2]
    r, wr = _gauss_legendre(n_radial, 0.0, r_inner)
    theta, wtheta = _gauss_legendre(n_angular, phase + 0.5 * np.pi, phase + 1.5 * np.pi)
    z = r[:, None] * np.exp(1j * theta)[None, :]
    w2 = (wr * r)[:, None] * wtheta[None, :]
    jac = ((1.0 - abs(a) ** 2) / np.abs(1.0 - np.conj(a) * z) ** 2) ** 2
    nodes = (a - z) / (1.0 - np.conj(a) * z)
    return nodes.ravel(), (w2 * jac).ravel()


def disc_rule(n_radial, n_angular, r_max=1.0):
    """Centered full-disc rule with explicit resolution (nodes stay interior)."""
    nodes, weights = _polar_rule(int(n_radial), int(n_angular), float(r_max))
    return DiscQuadrature(nodes, weights, FullDisc(float(r_max)), int(n_radial))


def _build(region, resolution):
    region = as_region(region)
    if isinstance(region, FullDisc):
        nodes, weights = _polar_rule(resolution, 4 * resolution, region.r_max)
    elif isinstance(region, EuclideanDisk):
        base_nodes, base_weights = _polar_rule(resolution, 4 * resolution, 1.0)
        nodes = region.center + region.radius * base_nodes
        weights = region.radius**2 * base_weights
    else:
        nodes, weights = _carleson_rule(
            region.anchor.real, region.anchor.imag, resolution, 2 * resolution, 0.995
        )
    return DiscQuadrature(nodes, weights, region, resolution)


def region_quadrature(region, resolution=48, tol=1e-6, max_resolution=1024):
    """Build a rule for the region, accepted only after a refinement test.

    The rule at the requested resolution is kept when doubling the resolution
    moves the constant-1 integral by less than tol (relative); otherwise the
    doubled rule is tried in turn, up to max_resolution.
    """
    if resolution < 4:
        raise DomainError("resolution must be at least 4")
    region = as_region(region)
    if isinstance(region, EuclideanDisk):
        c, rho = region.center, region.radius
        if abs(c) + rho > 1.0 + 1e-12:
            raise DomainError(f"euclidean disk ({c}, {rho}) leaves the unit disc")
    res = int(resolution)
    rule = _build(region, res)
    while True:
        finer = _build(region, 2 * res)
        if abs(finer.area - rule.area) <= tol * max(1.0, abs(finer.area)):
            return rule
        if 2 * res > max_resolution:
            raise PrecisionError(
                f"region {region} not resolved at resolution {res} "
                f"(area moved {abs(finer.area - rule.area):.3e})"
            )
        res *= 2
        rule = finer
