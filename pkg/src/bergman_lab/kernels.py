"""Truncated reproducing-kernel model of the weighted Bergman space A^2(u).

The model carries an orthonormal polynomial basis e_0..e_N for the inner
product  <f, g> = int f conj(g) u dA:

  * radial weights: monomials are already orthogonal, so e_n = z^n / sqrt(G_nn)
    with G_nn = 2 pi int_0^1 r^(2n+1) u(r) dr computed by an exact-degree
    Gauss rule (Gauss-Jacobi for the standard weights, Gauss-Legendre in r^2
    otherwise);
  * general weights: the monomial Gram matrix is assembled by disc quadrature
    and factored (Cholesky), giving a lower-triangular coefficient matrix.

The truncated kernel K_N(z, w) = sum e_n(z) conj(e_n(w)) is a polynomial, so
kernel norms never blow up and are integrated on the full disc (radial
Gauss-Legendre nodes stay strictly interior).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegeneracyError, DomainError
from .quadrature import disc_rule
from .weights import Weight

__all__ = [
    "KernelModel",
    "build_kernel_model",
    "kernel_eval",
    "kernel_diag",
    "kernel_norm",
    "NormalizedKernel",
    "normalized_kernel",
    "reproducing_check",
]


def _radial_monomial_norms(u: Weight, degree):
    """G_nn = 2 pi int_0^1 r^(2n+1) u(r) dr = pi int_0^1 t^n u(sqrt t) dt."""
    n = np.arange(degree + 1)
    if u.kind == "standard":
        from scipy.special import roots_jacobi

        alpha = u.params["alpha"]
        # Gauss-Jacobi on [-1,1] with weight (1-x)^alpha; map x -> t on [0,1]
        k = degree // 2 + 8
        x, w = roots_jacobi(k, alpha, 0.0)
        t = 0.5 * (x + 1.0)
        w = w * 0.5 ** (alpha + 1.0)
        return np.pi * (w[None, :] * t[None, :] ** n[:, None]).sum(axis=1)
    k = max(degree // 2 + 8, 256)
    x, w = np.polynomial.legendre.leggauss(k)
    t = 0.5 * (x + 1.0)
    w = 0.5 * w
    vals = u.radial_profile(np.sqrt(t))
    return np.pi * ((w * vals)[None, :] * t[None, :] ** n[:, None]).sum(axis=1)


def _power_matrix(z, degree):
    """Stack of monomials z^n, shape (degree+1, len(z))."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    out = np.empty((degree + 1, z.size), dtype=complex)
    out[0] = 1.0
    for n in range(1, degree + 1):
        out[n] = out[n - 1] * z
    return out


@dataclass(frozen=True, eq=False)
class KernelModel:
    """Orthonormal basis and truncated kernel for A^2(u)."""

    weight: Weight
    degree: int
    coeffs: np.ndarray  # lower-triangular C with e_m = sum_j C[m, j] z^j
    diag_norms: np.ndarray | None  # G_nn for radial weights, else None
    gram_residual: float
    gram_refinement_error: float

    @property
    def is_radial(self):
        return self.diag_norms is not None

    def basis_matrix(self, z):
        """e_n at the given points: shape (degree+1, len(z))."""
        powers = _power_matrix(z, self.degree)
        if self.is_radial:
            return powers / np.sqrt(self.diag_norms)[:, None]
        return self.coeffs @ powers

    def kernel(self, z, w):
        """K_N(z, w) for arrays z against a single point w."""
        w = complex(w)
        ew = np.conj(self.basis_matrix(np.array([w]))[:, 0])
        if self.is_radial:
            # K(z, w) = sum_n (z conj(w))^n / G_nn: Horner in x = z conj(w)
            x = np.asarray(z, dtype=complex) * np.conj(w)
            return np.polynomial.polynomial.polyval(x, 1.0 / self.diag_norms)
        return (ew[:, None] * self.basis_matrix(z)).sum(axis=0)

    def kernel_diag(self, z):
        """K_N(z, z), real and nonnegative."""
        e = self.basis_matrix(z)
        return np.real((e * np.conj(e)).sum(axis=0))

    def norm_rule(self):
        """Disc rule exact enough for integrands built from the basis."""
        n_r = max(self.degree + 16, 64)
        n_t = 1 << int(np.ceil(np.log2(max(2 * self.degree + 32, 128))))
        return disc_rule(n_r, n_t, 1.0)

    def dump(self):
        out = {
            "degree": self.degree,
            "weight": self.weight.config(),
            "gram_residual": self.gram_residual,
            "gram_refinement_error": self.gram_refinement_error,
        }
        if self.is_radial:
            out["diag_norms"] = list(map(float, self.diag_norms))
        else:
            out["coeffs_real"] = np.real(self.coeffs).tolist()
            out["coeffs_imag"] = np.imag(self.coeffs).tolist()
        return out


def _assemble_gram(u, degree, n_radial, n_angular):
    rule = disc_rule(n_radial, n_angular, 1.0)
    powers = _power_matrix(rule.nodes, degree)
    wu = rule.weights * np.asarray(u(rule.nodes), dtype=float)
    return (powers * wu) @ powers.conj().T


def build_kernel_model(u: Weight, degree) -> KernelModel:
    """Orthonormalize monomials up to the given degree against u dA."""
    if degree < 1:
        raise DomainError("degree must be >= 1")
    degree = int(degree)
    if u.is_radial:
        norms = _radial_monomial_norms(u, degree)
        if np.any(norms <= 0) or not np.all(np.isfinite(norms)):
            raise DegeneracyError("radial monomial norms must be positive and finite")
        coeffs = np.diag(1.0 / np.sqrt(norms)).astype(complex)
        # residual against an independently refined radial rule
        fine = _radial_refined_norms(u, degree)
        resid = float(np.max(np.abs(fine / norms - 1.0)))
        return KernelModel(u, degree, coeffs, norms, 0.0, resid)

    n_radial = degree + 16
    n_angular = 4 * degree + 64
    gram = _assemble_gram(u, degree, n_radial, n_angular)
    diag = np.real(np.diag(gram))
    if np.min(diag) <= 1e-12 * np.max(diag):
        raise DegeneracyError(
            "Gram matrix numerically singular; lower the degree or refine quadrature"
        )
    try:
        chol = np.linalg.cholesky(gram)
    except np.linalg.LinAlgError as exc:
        raise DegeneracyError(f"Gram factorization failed: {exc}") from exc
    from scipy.linalg import solve_triangular

    coeffs = solve_triangular(chol, np.eye(degree + 1, dtype=complex), lower=True)
    resid_same = float(np.max(np.abs(coeffs @ gram @ coeffs.conj().T - np.eye(degree + 1))))
    gram2 = _assemble_gram(u, degree, n_radial + n_radial // 2, n_angular * 2)
    resid_fine = float(np.max(np.abs(coeffs @ gram2 @ coeffs.conj().T - np.eye(degree + 1))))
    if resid_same > 1e-8:
        raise DegeneracyError(f"orthonormalization residual {resid_same:.2e} above 1e-8")
    return KernelModel(u, degree, coeffs, None, resid_same, resid_fine)


def _radial_refined_norms(u, degree):
    """Radial norms recomputed on a different rule, for the residual report."""
    n = np.arange(degree + 1)
    k = max(degree + 24, 384)
    x, w = np.polynomial.legendre.leggauss(k)
    t = 0.5 * (x + 1.0)
    w = 0.5 * w
    vals = u.radial_profile(np.sqrt(t))
    return np.pi * ((w * vals)[None, :] * t[None, :] ** n[:, None]).sum(axis=1)


def kernel_eval(m: KernelModel, z, w):
    """K_N(z, w); Hermitian in (z, w)."""
    scalar = np.isscalar(z) or isinstance(z, complex)
    out = m.kernel(np.atleast_1d(np.asarray(z, dtype=complex)), w)
    return complex(out[0]) if scalar else out


def kernel_diag(m: KernelModel, z):
    scalar = np.isscalar(z) or isinstance(z, complex)
    out = m.kernel_diag(np.atleast_1d(np.asarray(z, dtype=complex)))
    return float(out[0]) if scalar else out


def kernel_norm(m: KernelModel, w, p, rule=None):
    """|| K_w ||_{A^p(u)} = (int |K(z, w)|^p u dA)^(1/p) by quadrature.

    For p = 2 this must agree with sqrt(K(w, w)) (reproducing identity);
    that identity is asserted in the test-suite, not silently substituted.
    """
    if p <= 0:
        raise DomainError("kernel norm exponent must be positive")
    rule = rule or m.norm_rule()
    kv = m.kernel(rule.nodes, w)
    uvals = np.asarray(m.weight(rule.nodes), dtype=float)
    val = np.sum(rule.weights * uvals * np.abs(kv) ** p)
    return float(val ** (1.0 / p))


@dataclass(frozen=True, eq=False)
class NormalizedKernel:
    """k_{t,w} = K(., w) / ||K_w||_{A^t(u)}, evaluable on arrays."""

    base: KernelModel
    at: complex
    exponent: float
    norm_value: float

    def __call__(self, z):
        return self.base.kernel(np.asarray(z, dtype=complex), self.at) / self.norm_value


def normalized_kernel(m: KernelModel, w, t=2.0) -> NormalizedKernel:
    if t <= 0:
        raise DomainError("normalization exponent must be positive")
    return NormalizedKernel(m, complex(w), float(t), kernel_norm(m, w, t))


def reproducing_check(m: KernelModel, coefs, w):
    """| <f, K_w> - f(w) | for the polynomial f with the given coefficients.

    The pairing is computed by quadrature (not via basis algebra), making this
    the fundamental self-test of the model plus its integration backbone.
    """
    coefs = np.asarray(coefs, dtype=complex)
    if len(coefs) - 1 > m.degree:
        raise DomainError("polynomial degree exceeds the model truncation")
    rule = m.norm_rule()
    fvals = np.polynomial.polynomial.polyval(rule.nodes, coefs)
    kv = m.kernel(rule.nodes, complex(w))
    uvals = np.asarray(m.weight(rule.nodes), dtype=float)
    pairing = np.sum(rule.weights * uvals * fvals * np.conj(kv))
    fw = np.polynomial.polynomial.polyval(complex(w), coefs)
    return float(abs(pairing - fw))
