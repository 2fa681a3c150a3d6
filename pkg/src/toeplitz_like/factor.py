"""Wiener-Hopf type factorization ``omega = omega_minus * z**kappa * omega0 * omega_plus``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .poly import from_roots, monomial
from .roots import classify
from .symbol import RationalFn, apply_toeplitz, as_rational, backward_shift, normalize
from .tolerances import Tolerances, resolve

__all__ = ["WHFactorization", "factorize", "kappa_of", "apply_middle", "apply_factored", "reconstruction_residual"]


@dataclass(frozen=True)
class WHFactorization:
    """Factors of a rational symbol.

    ``omega_minus`` has every zero and pole in the open disc and tends to 1 at
    infinity, ``omega0`` carries the circle zeros and poles (monic parts),
    and ``omega_plus`` holds the outside zeros and poles together with the
    overall constant.
    """

    omega_minus: RationalFn
    kappa: int
    omega0: RationalFn
    omega_plus: RationalFn

    def __call__(self, z):
        return self.omega_minus(z) * z**self.kappa * self.omega0(z) * self.omega_plus(z)

    @property
    def middle(self) -> RationalFn | None:
        """``z**kappa * omega0`` when kappa >= 0; None otherwise (pole at 0)."""
        if self.kappa < 0:
            return None
        return normalize(self.omega0.num * monomial(self.kappa), self.omega0.den)


def kappa_of(omega: RationalFn, tol: Tolerances | None = None) -> int:
    """Zeros minus poles in the open disc, with multiplicity."""
    omega = as_rational(omega)
    zeros = classify(omega.num, tol=tol).n_inside if not omega.is_zero else 0
    return zeros - classify(omega.den, tol=tol).n_inside


def factorize(omega: RationalFn, tol: Tolerances | None = None) -> WHFactorization:
    tol = resolve(tol)
    omega = as_rational(omega)
    if omega.is_zero:
        raise ValueError("cannot factor the zero symbol")
    zs = classify(omega.num, tol=tol)
    ps = classify(omega.den, tol=tol)
    kappa = zs.n_inside - ps.n_inside
    s_minus, q_minus = from_roots(zs.inside), from_roots(ps.inside)
    if kappa >= 0:
        omega_minus = normalize(s_minus, q_minus * monomial(kappa), tol)
    else:
        omega_minus = normalize(s_minus * monomial(-kappa), q_minus, tol)
    omega0 = RationalFn(from_roots(zs.on_circle), from_roots(ps.on_circle))
    # den(omega) is monic, so the overall constant is the numerator's leading coefficient
    omega_plus = RationalFn(from_roots(zs.outside, omega.num.leading / omega.den.leading), from_roots(ps.outside))
    return WHFactorization(omega_minus, kappa, omega0, omega_plus)


def apply_middle(fac: WHFactorization, g, tol: Tolerances | None = None) -> RationalFn:
    """``T_{z^kappa omega0} g``; for kappa < 0 via ``T_{z^kappa} T_{omega0}``."""
    if fac.kappa >= 0:
        return apply_toeplitz(fac.middle, g, tol).result
    return backward_shift(apply_toeplitz(fac.omega0, g, tol).result, -fac.kappa)


def apply_factored(fac: WHFactorization, g, tol: Tolerances | None = None) -> RationalFn:
    """``T_{omega_minus} T_{z^kappa omega0} T_{omega_plus} g``."""
    step = apply_toeplitz(fac.omega_plus, g, tol).result
    step = apply_middle(fac, step, tol)
    return apply_toeplitz(fac.omega_minus, step, tol).result


def reconstruction_residual(omega: RationalFn, fac: WHFactorization, n_samples: int = 64, seed: int = 0) -> float:
    """Max relative mismatch of the factored product at sample points.

    Points lie in the annuli ``0.1 < ||z| - 1| < 0.5`` and keep away from the
    zeros and poles of every factor.
    """
    rng = np.random.default_rng(seed)
    crit = [r for f in (omega, fac.omega_minus, fac.omega0, fac.omega_plus) for r, _ in f.zeros() + f.poles()]
    worst = 0.0
    taken = 0
    while taken < n_samples:
        rad = 1 + rng.choice([-1, 1]) * rng.uniform(0.1, 0.5)
        z = rad * np.exp(2j * np.pi * rng.uniform())
        if any(abs(z - r) < 0.05 for r in crit):
            continue
        w = omega(z)
        worst = max(worst, abs(w - fac(z)) / (1 + abs(w)))
        taken += 1
    return float(worst)
