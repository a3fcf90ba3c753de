"""Rank-one Toeplitz operators: a point mass has a one-line spectrum.

For mu = c delta_{z0} the Toeplitz matrix in the orthonormal basis of the
truncated model is the rank-one Gram of the kernel section at z0, so its only
nonzero eigenvalue is c K_N(z0, z0).  With the unweighted disc and z0 = 0
that value is c / pi exactly, at every truncation degree.
"""

import numpy as np

from bergman_lab import assemble, atomic, build_kernel_model, constant, kernel_diag, spectrum

model = build_kernel_model(constant(), 120)

for z0, c in [(0.0, 2.0), (0.5, 1.0), (0.3 + 0.4j, 0.25)]:
    T = assemble(atomic([(z0, c)]), model)
    lam = spectrum(T).eigenvalues
    predicted = c * kernel_diag(model, z0)
    print(f"mu = {c} * delta_{z0}:")
    print(f"  leading eigenvalue   {lam[0]:.12f}")
    print(f"  c * K_N(z0, z0)      {predicted:.12f}")
    print(f"  next eigenvalue      {lam[1]:.3e}  (rank one => ~0)")
    print(f"  trace - leading      {sum(lam) - lam[0]:.3e}")

print()
print(f"reference value 2/pi = {2 / np.pi:.12f}")
