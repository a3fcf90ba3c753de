"""Theorem checkers: boundedness/compactness indices and Carleson tests.

Each checker evaluates one computable condition of the boundedness /
compactness / q<p equivalence theorems, or of the Carleson embedding lemma,
and returns a CriterionReport.  Comparability constants are never asserted:
verdicts come from boundary-ladder trends and the index value is the maximum
of the sampled quantity (the operator-norm surrogate).

Exponent conventions used throughout:

  * boundedness / compactness quantity: mu^_r(z) / u(Delta(z,r))^(1/p - 1/q)
    (and the t-Berezin analogue), for 0 < p <= q;
  * q < p: the L^(pq/(p-q)) norm of the averaging function;
  * "lambda-Carleson measure for A^s(u)" (embedding A^s(u) -> L^lambda(mu)
    bounded) is tested through mu(S(a)) <= C u(S(a))^(lambda/s); the
    s-parameterized condition of the equivalence theorems reduces to the
    s-independent exponent 1 + 1/p - 1/q.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError
from .geometry import BoundaryLadder, CarlesonSet, pseudo_disk
from .kernels import KernelModel
from .measures import DiscMeasure
from .reports import CriterionReport, band, classify_ring_trend, ring_slope
from .transforms import average_function, profile_lp_norm, t_berezin_profile
from .weights import Weight, mass

__all__ = [
    "boundedness_index",
    "compactness_index",
    "qlp_index",
    "carleson_test",
    "vanishing_carleson_test",
    "theorem_consistency_report",
]


def _grid_points(grid):
    pts = getattr(grid, "points", grid)
    if callable(pts):
        pts = pts()
    return np.asarray(pts, dtype=complex)


def _ladder_rings(grid):
    if isinstance(grid, BoundaryLadder):
        return [(grid.radii[j], grid.ring_points(j)) for j in range(len(grid.radii))]
    return None


def _disk_masses(u, r, points, resolution=32):
    return np.array(
        [mass(u, pseudo_disk(z, r), resolution=resolution) for z in points]
    )


def _bc_quantity(mu, u, m, p, q, t, r, points, use_berezin):
    """mu~_t or mu^_r over u(Delta)^(1/p - 1/q) at the given points."""
    expo = 1.0 / p - 1.0 / q
    ud = _disk_masses(u, r, points)
    if use_berezin:
        base = t_berezin_profile(mu, m, t, points)
    else:
        base = np.array([average_function(mu, u, r, z) for z in points])
    return base / ud**expo


def boundedness_index(mu, u, m, p, q, t, r, grid) -> CriterionReport:
    """Boundedness index: sup of the averaging and t-Berezin quantities.

    The reported index is the averaging-function supremum (the operator-norm
    surrogate); the t-Berezin supremum and their ratio sit in extras.  When
    the grid is a BoundaryLadder the per-ring maxima drive the verdict;
    verdicts are {finite, divergent, inconclusive} (a vanishing trend is
    bounded, hence finite).
    """
    if not (0 < p <= q):
        raise DomainError("boundedness_index requires 0 < p <= q")
    points = _grid_points(grid)
    av = _bc_quantity(mu, u, m, p, q, t, r, points, use_berezin=False)
    tb = _bc_quantity(mu, u, m, p, q, t, r, points, use_berezin=True)
    rings = _ladder_rings(grid)
    if rings is not None:
        offset = 0
        trend = []
        for rho, pts in rings:
            trend.append((rho, float(np.max(av[offset : offset + pts.size]))))
            offset += pts.size
        verdict = classify_ring_trend([v for _, v in trend])
        if verdict == "vanishing":
            verdict = "finite"
    else:
        trend = []
        verdict = "finite" if np.all(np.isfinite(av)) else "divergent"
    return CriterionReport(
        name="boundedness_index",
        parameters={"p": p, "q": q, "t": t, "r": r},
        index_value=float(np.max(av)),
        per_point=list(zip(points, av)),
        ring_trend=trend,
        verdict=verdict,
        extras={
            "berezin_index": float(np.max(tb)),
            "average_band": band(av),
            "berezin_band": band(tb),
        },
    )


def compactness_index(mu, u, m, p, q, t, r, ladder: BoundaryLadder) -> CriterionReport:
    """Compactness trend: the boundedness quantity along a boundary ladder."""
    if not (0 < p <= q):
        raise DomainError("compactness_index requires 0 < p <= q")
    rings_av, rings_tb, per_point = [], [], []
    for j in range(len(ladder.radii)):
        pts = ladder.ring_points(j)
        av = _bc_quantity(mu, u, m, p, q, t, r, pts, use_berezin=False)
        tb = _bc_quantity(mu, u, m, p, q, t, r, pts, use_berezin=True)
        rings_av.append(float(np.max(av)))
        rings_tb.append(float(np.max(tb)))
        per_point.extend(zip(pts, av))
    verdict = classify_ring_trend(rings_av)
    return CriterionReport(
        name="compactness_index",
        parameters={"p": p, "q": q, "t": t, "r": r},
        index_value=rings_av[-1],
        per_point=per_point,
        ring_trend=list(zip(ladder.radii, rings_av)),
        verdict=verdict,
        extras={
            "ring_max_average": rings_av,
            "ring_max_berezin": rings_tb,
            "berezin_trend_verdict": classify_ring_trend(rings_tb),
        },
    )


def qlp_index(mu, u, m, p, q, t, r, reference="u_dA") -> CriterionReport:
    """q < p criterion: || mu^_r ||_{L^{pq/(p-q)}} against the reference.

    The radial shell partials of the defining integral provide the growth
    trend; a flattening tail reads finite, a sustained positive dyadic slope
    reads divergent.
    """
    if not (0 < q < p):
        raise DomainError("qlp_index requires 0 < q < p")
    if reference not in ("u_dA", "dA"):
        raise DomainError(f"unknown reference measure {reference!r}")
    exponent = p * q / (p - q)
    norm, radii, partials = profile_lp_norm(mu, u, r, exponent, reference=reference)
    slope = ring_slope(partials[partials > 0], tail=8)
    if not np.isfinite(norm) or slope >= 0.04:
        verdict = "divergent"
    else:
        verdict = "finite"
    return CriterionReport(
        name="qlp_index",
        parameters={"p": p, "q": q, "t": t, "r": r, "reference": reference},
        index_value=norm,
        per_point=[],
        ring_trend=list(zip(radii, partials)),
        verdict=verdict,
        extras={"exponent": exponent, "tail_slope": slope},
    )


def carleson_test(mu, u, m, p, q, r, s, p0, anchors) -> CriterionReport:
    """Carleson embedding sub-indices (b), (c), (e) with their pairwise ratios.

    (b) max mu(S(a)) / u(S(a))^(q/p) over the anchors;
    (c) max mu(Delta(a,r)) / u(Delta(a,r))^(q/p);
    (e) max over anchors w of
        u(Delta(w,r))^(-q/p) * int ((1-|w|^2)/|1 - z conj(w)|)^(qs) dmu(z),
        the test-function form, requiring s >= 2 p0 / p.
    """
    if not (0 < p <= q):
        raise DomainError("carleson_test requires q >= p > 0")
    if s < 2.0 * p0 / p:
        raise DomainError("carleson_test requires s >= 2 p0 / p")
    points = _grid_points(anchors)
    qp = q / p
    idx_b, idx_c, idx_e = [], [], []
    for a in points:
        us = mass(u, CarlesonSet(complex(a)))
        idx_b.append(mu.region_mass(CarlesonSet(complex(a))) / us**qp)
        ud = mass(u, pseudo_disk(a, r), resolution=32)
        idx_c.append(mu.disk_mass(a, r) / ud**qp)
        w = complex(a)

        def g_integrand(z, w=w):
            z = np.asarray(z, dtype=complex)
            return ((1.0 - abs(w) ** 2) / np.abs(1.0 - z * np.conj(w))) ** (q * s)

        idx_e.append(mu.integrate(g_integrand) / ud**qp)
    idx_b, idx_c, idx_e = map(np.asarray, (idx_b, idx_c, idx_e))
    max_b, max_c, max_e = map(float, (idx_b.max(), idx_c.max(), idx_e.max()))
    finite = all(np.isfinite(v) for v in (max_b, max_c, max_e))
    return CriterionReport(
        name="carleson_test",
        parameters={"p": p, "q": q, "r": r, "s": s, "p0": p0},
        index_value=max_c,
        per_point=list(zip(points, idx_c)),
        ring_trend=[],
        verdict="finite" if finite else "divergent",
        extras={
            "index_b": max_b,
            "index_c": max_c,
            "index_e": max_e,
            "ratio_b_over_c": max_b / max_c if max_c > 0 else float("inf"),
            "ratio_e_over_c": max_e / max_c if max_c > 0 else float("inf"),
            "band_b": band(idx_b),
            "band_c": band(idx_c),
            "band_e": band(idx_e),
        },
    )


def vanishing_carleson_test(mu, u, p, q, ladder: BoundaryLadder) -> CriterionReport:
    """Ring trend of mu(S(a)) / u(S(a))^(q/p) over the ladder anchors."""
    if not (0 < p <= q):
        raise DomainError("vanishing_carleson_test requires q >= p > 0")
    qp = q / p
    per_point, rings = [], []
    for j in range(len(ladder.radii)):
        pts = ladder.ring_points(j)
        vals = []
        for a in pts:
            us = mass(u, CarlesonSet(complex(a)))
            vals.append(mu.region_mass(CarlesonSet(complex(a))) / us**qp)
        rings.append(float(np.max(vals)))
        per_point.extend(zip(pts, vals))
    return CriterionReport(
        name="vanishing_carleson_test",
        parameters={"p": p, "q": q},
        index_value=rings[-1],
        per_point=per_point,
        ring_trend=list(zip(ladder.radii, rings)),
        verdict=classify_ring_trend(rings),
        extras={"ring_max": rings},
    )


def _carleson_ladder_trend(mu, u, expo, ladder):
    """Per-ring maxima of mu(S(a)) / u(S(a))^expo on axis anchors."""
    rings = []
    for j in range(len(ladder.radii)):
        pts = ladder.ring_points(j)
        vals = [
            mu.region_mass(CarlesonSet(complex(a)))
            / mass(u, CarlesonSet(complex(a))) ** expo
            for a in pts
        ]
        rings.append(float(np.max(vals)))
    return rings


def theorem_consistency_report(mu, u, m, p, q, t, r, s, ladder=None) -> CriterionReport:
    """Run every equivalent condition of the applicable theorem and compare.

    For 0 < p <= q the conditions are the t-Berezin quantity (ii), the
    averaging quantity (iii), and the s-Carleson condition (iv) at the
    s-independent exponent 1 + 1/p - 1/q ("not applicable" when q <= 1,
    where the conjugate exponent is undefined).  Each condition contributes
    a boundedness verdict (finite vs divergent) and a compactness verdict
    (vanishing or not); all must agree or the report is inconclusive.

    For 0 < q < p the conditions are the L^{pq/(p-q)} norms of the averaging
    function against both reference measures and the (p + 1 - p/q)-Carleson
    trend; boundedness and compactness coincide in this regime.
    """
    from .geometry import boundary_ladder

    if ladder is None:
        # ladder depth matched to the kernel truncation: the model resolves
        # the boundary only while degree * (1 - rho) stays a few units large
        rings = int(min(12, max(4, round(1 + np.log2(m.degree / 8)))))
        ladder = boundary_ladder(rings, 8)
    conditions = {}
    if p <= q:
        rep_b = compactness_index(mu, u, m, p, q, t, r, ladder)
        rings_av = rep_b.extras["ring_max_average"]
        rings_tb = rep_b.extras["ring_max_berezin"]
        conditions["ii_berezin"] = {
            "trend": rings_tb,
            "verdict": classify_ring_trend(rings_tb),
            "last": rings_tb[-1],
        }
        conditions["iii_average"] = {
            "trend": rings_av,
            "verdict": classify_ring_trend(rings_av),
            "last": rings_av[-1],
        }
        if q > 1:
            expo = 1.0 + 1.0 / p - 1.0 / q
            rings_c = _carleson_ladder_trend(mu, u, expo, ladder)
            conditions["iv_carleson_s"] = {
                "trend": rings_c,
                "verdict": classify_ring_trend(rings_c),
                "last": rings_c[-1],
                "exponent": expo,
            }
        else:
            conditions["iv_carleson_s"] = {"verdict": "not applicable"}
        index = rep_b.index_value
    else:
        for ref in ("u_dA", "dA"):
            rep = qlp_index(mu, u, m, p, q, t, r, reference=ref)
            conditions[f"iv_average_lp_{ref}"] = {
                "verdict": rep.verdict,
                "norm": rep.index_value,
                "tail_slope": rep.extras["tail_slope"],
            }
        expo = 1.0 + 1.0 / p - 1.0 / q
        rings_c = _carleson_ladder_trend(mu, u, expo, ladder)
        trend_verdict = classify_ring_trend(rings_c)
        conditions["v_carleson"] = {
            "trend": rings_c,
            "verdict": "finite" if trend_verdict in ("finite", "vanishing") else trend_verdict,
            "last": rings_c[-1],
            "exponent": expo,
        }
        conditions["vi_vanishing_carleson"] = {
            "verdict": trend_verdict,
            "last": rings_c[-1],
        }
        index = conditions["iv_average_lp_u_dA"]["norm"]

    active = [c["verdict"] for c in conditions.values() if c["verdict"] != "not applicable"]
    bounded = [v in ("finite", "vanishing") for v in active]
    vanishing = [v == "vanishing" for v in active]
    if q < p:
        # bounded and compact coincide: only the bounded/unbounded class matters
        if all(bounded):
            agreement, overall = True, "finite"
        elif not any(bounded):
            agreement, overall = True, "divergent"
        else:
            agreement, overall = False, "inconclusive"
    elif all(bounded):
        if all(vanishing) or not any(vanishing):
            agreement = True
            overall = "vanishing" if all(vanishing) else "finite"
        else:
            agreement, overall = False, "inconclusive"
    elif not any(bounded):
        agreement, overall = True, "divergent"
    else:
        agreement, overall = False, "inconclusive"
    return CriterionReport(
        name="theorem_consistency",
        parameters={"p": p, "q": q, "t": t, "r": r, "s": s},
        index_value=index,
        per_point=[],
        ring_trend=[],
        verdict=overall,
        extras={"conditions": conditions, "agreement": agreement},
    )
