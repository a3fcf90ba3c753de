"""Weights on the disc and their Bekolle-Bonami / C_p constants.

A Weight is an evaluable positive function on the unit disc.  Four families
are provided:

  * constant()                u == c
  * standard(alpha)           u(z) = (1 - |z|^2)^alpha, alpha > -1
  * power_one_minus_z(gamma)  u(z) = |1 - z|^gamma   (non-radial probe family)
  * grid(...)                 bilinear interpolation of tabulated samples

The B_p constant takes joint averages over Carleson sets S(a); the C_p
constant takes the same averages over pseudohyperbolic disks Delta(z, r).
Suprema over the disc are replaced by maxima over a supplied anchor set plus
a boundary ladder, whose per-ring maxima expose divergence as a trend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .geometry import BoundaryLadder, pseudo_disk
from .quadrature import CarlesonRegion, as_region, region_quadrature

__all__ = [
    "Weight",
    "constant",
    "standard",
    "power_one_minus_z",
    "grid_weight",
    "weight_from_config",
    "mass",
    "WeightConstantReport",
    "bekolle_constant",
    "cp_constant",
]

_GRID_FLOOR = 1e-12


@dataclass(frozen=True, eq=False)
class Weight:
    """Positive weight u on the disc; call it on complex arrays."""

    kind: str
    params: dict
    fn: object
    is_radial: bool

    def __call__(self, z):
        return self.fn(np.asarray(z))

    def radial_profile(self, r):
        """u as a function of |z| (radial weights only)."""
        if not self.is_radial:
            raise DomainError(f"weight kind {self.kind!r} is not radial")
        return self.fn(np.asarray(r, dtype=complex))

    def config(self):
        return {"kind": self.kind, **self.params}


def constant(value=1.0):
    if value <= 0:
        raise DomainError("constant weight must be positive")
    v = float(value)
    return Weight("constant", {"value": v}, lambda z: np.full(np.shape(z), v), True)


def standard(alpha):
    """u(z) = (1 - |z|^2)^alpha; integrable on the disc for alpha > -1."""
    if alpha <= -1:
        raise DomainError("standard weight needs alpha > -1")
    a = float(alpha)
    return Weight(
        "standard", {"alpha": a}, lambda z: (1.0 - np.abs(z) ** 2) ** a, True
    )


def power_one_minus_z(gamma):
    """u(z) = |1 - z|^gamma, a non-radial weight pinched (or spiked) at z = 1."""
    g = float(gamma)
    return Weight(
        "power_one_minus_z", {"gamma": g}, lambda z: np.abs(1.0 - np.asarray(z)) ** g, False
    )


def grid_weight(samples, n):
    """Bilinear interpolation of an n x n sample grid on [-1, 1]^2.

    samples: array of shape (n, n) of positive values indexed [iy, ix];
    values are clamped below at 1e-12 to preserve positivity.
    """
    from scipy.interpolate import RegularGridInterpolator

    samples = np.asarray(samples, dtype=float)
    if samples.shape != (n, n):
        raise DomainError(f"grid weight expects shape ({n}, {n})")
    axis = np.linspace(-1.0, 1.0, n)
    interp = RegularGridInterpolator(
        (axis, axis), samples, method="linear", bounds_error=False, fill_value=None
    )

    def fn(z):
        z = np.asarray(z)
        pts = np.stack([np.imag(z).ravel(), np.real(z).ravel()], axis=-1)
        vals = interp(pts).reshape(np.shape(z))
        return np.maximum(vals, _GRID_FLOOR)

    return Weight("grid", {"n": int(n)}, fn, False)


def weight_from_config(cfg):
    """Build a weight from its JSON config dict."""
    kind = cfg.get("kind")
    if kind == "constant":
        return constant(cfg.get("value", 1.0))
    if kind == "standard":
        return standard(cfg["alpha"])
    if kind == "power_one_minus_z":
        return power_one_minus_z(cfg["gamma"])
    if kind == "grid":
        samples = np.loadtxt(cfg["file"], delimiter=",", usecols=2)
        n = int(cfg["n"])
        return grid_weight(samples.reshape(n, n), n)
    raise DomainError(f"unknown weight kind {kind!r}")


def mass(u: Weight, region, resolution=48):
    """u(E) = integral of u over the region.

    Constant weights over (Euclidean-realizable) disks integrate exactly as
    value * pi * R^2, skipping quadrature.
    """
    if u.kind == "constant":
        radius = getattr(region, "euclid_radius", getattr(region, "radius", None))
        if radius is not None:
            return float(u.params["value"]) * np.pi * float(radius) ** 2
    q = region_quadrature(region, resolution)
    return q.integrate(u)


@dataclass(frozen=True, eq=False)
class WeightConstantReport:
    """Joint-average constant report: max over anchors plus a boundary trend."""

    p: float
    value: float
    per_anchor: list  # (anchor, local value)
    trend: list  # (ring radius, ring max)
    kind: str = "bp"

    def is_divergent(self, growth=1.5):
        """Heuristic: per-ring maxima keep growing along the ladder."""
        vals = [v for _, v in self.trend if np.isfinite(v)]
        if len(vals) < 3:
            return False
        if not np.isfinite(self.value):
            return True
        ratios = [b / a for a, b in zip(vals, vals[1:]) if a > 0]
        return bool(ratios and np.prod(ratios[-3:]) > growth)


def _joint_average(u, p, region, resolution):
    """<u>_E * (<u^{-p'/p}>_E)^(p-1) over one region."""
    q = region_quadrature(region, resolution)
    area = q.area
    m1 = q.integrate(u)
    expo = -1.0 / (p - 1.0)  # -p'/p
    m2 = q.integrate(lambda z: np.asarray(u(z), dtype=float) ** expo)
    if not np.isfinite(m2) or m2 <= 0:
        return math.inf
    return (m1 / area) * (m2 / area) ** (p - 1.0)


def _anchors_and_rings(anchors, ladder):
    rings = []
    if ladder is not None:
        for j, rho in enumerate(ladder.radii):
            rings.append((rho, ladder.ring_points(j)))
    return list(anchors or []), rings


def _constant_report(region_of, u, p, anchors, ladder, resolution, kind):
    if p <= 1:
        raise DomainError("joint-average constants need p > 1")
    anchors, rings = _anchors_and_rings(anchors, ladder)
    if not anchors and not rings:
        raise DomainError("no anchors supplied")
    per_anchor = [(a, _joint_average(u, p, region_of(a), resolution)) for a in anchors]
    trend = []
    for rho, pts in rings:
        vals = [_joint_average(u, p, region_of(a), resolution) for a in pts]
        trend.append((rho, max(vals)))
        per_anchor.extend(zip(pts, vals))
    value = max(v for _, v in per_anchor)
    return WeightConstantReport(p=float(p), value=value, per_anchor=per_anchor, trend=trend, kind=kind)


def bekolle_constant(u, p, anchors=None, ladder: BoundaryLadder = None, resolution=48):
    """Estimate [u]_{B_p}: max over anchors a of the S(a) joint average.

    A non-integrable u^{-p'/p} shows up as +inf for that anchor (not an error).
    """
    return _constant_report(
        lambda a: CarlesonRegion(complex(a)), u, p, anchors, ladder, resolution, "bp"
    )


def cp_constant(u, p, r, centers=None, ladder: BoundaryLadder = None, resolution=32):
    """Estimate [u]_{C_p}: same joint average over pseudo disks Delta(z, r)."""
    if not (0.0 < r < 1.0):
        raise DomainError("C_p disk radius must lie in (0, 1)")
    return _constant_report(
        lambda a: pseudo_disk(complex(a), r), u, p, centers, ladder, resolution, "cp"
    )
