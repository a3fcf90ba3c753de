"""Boundary ladders separate bounded, compact, and unbounded symbols.

Three measures against the unweighted Bergman space:

  * mu = dA              -- the identity operator: the averaging quantity is
                            exactly 1 on every ring (bounded, not compact);
  * mu = (1-|z|^2) dA    -- a vanishing symbol: the quantity halves with each
                            dyadic ring (compact);
  * mu = (1-|z|^2)^{-0.1} dA -- slow blow-up: the quantity grows by 2^0.1 per
                            ring (unbounded), far too slowly for any fixed
                            threshold but picked up cleanly by the dyadic
                            slope fit.
"""

import numpy as np

from bergman_lab import (
    boundary_ladder,
    build_kernel_model,
    compactness_index,
    constant,
    power_density,
    weighted_area,
)

u = constant()
model = build_kernel_model(u, 200)
ladder = boundary_ladder(6, 8)

cases = {
    "identity (mu = dA)": weighted_area(u),
    "vanishing (t = 1)": power_density(1.0),
    "slow blow-up (t = -0.1)": power_density(-0.1),
}

for label, mu in cases.items():
    rep = compactness_index(mu, u, model, 2.0, 2.0, 2.0, 0.3, ladder)
    rings = "  ".join(f"{v:.4g}" for _, v in rep.ring_trend)
    print(f"{label:26s} verdict={rep.verdict:10s} ring maxima: {rings}")

print()
print("dyadic ring radii:", ", ".join(f"{r:.4f}" for r in ladder.radii))
print("slopes per ring (log2):",
      ", ".join(f"{np.log2(b / a):+.3f}"
                for (_, a), (_, b) in zip(
                    compactness_index(power_density(1.0), u, model, 2, 2, 2, 0.3, ladder).ring_trend[:-1],
                    compactness_index(power_density(1.0), u, model, 2, 2, 2, 0.3, ladder).ring_trend[1:])))
