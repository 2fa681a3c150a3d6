"""Fredholm analysis of T_omega: index, kernel, range, division in H^p, inverses."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CircleRoot, NotCoprime, NotInvertible, NotSupported, PreconditionError
from .factor import WHFactorization, factorize
from .poly import ZERO, Poly, bezout, divrem, from_roots, hermite_interpolate, monomial, series_divide
from .roots import ClassifiedRoots, OUTSIDE, are_coprime, band_of, classify
from .symbol import (
    RationalFn,
    apply_toeplitz,
    as_rational,
    backward_shift,
    check_in_hardy,
    normalize,
)
from .tolerances import Tolerances, resolve

__all__ = [
    "FredholmReport",
    "RangeDescriptor",
    "analyze",
    "kernel_basis",
    "range_descriptor",
    "hp_divide",
    "hermite_defect",
    "apply_inverse",
    "apply_right_inverse",
    "bezout_invariance_check",
    "invariance_decompose",
    "winding_index",
]


@dataclass(frozen=True)
class FredholmReport:
    is_fredholm: bool
    index: int | None
    dim_kernel: int | None
    codim_range: int | None
    invertible: bool
    zero_census: ClassifiedRoots
    pole_census: ClassifiedRoots
    kappa: int


def analyze(omega: RationalFn, tol: Tolerances | None = None) -> FredholmReport:
    """Fredholm test and index from the zero/pole census.

    Fredholm exactly when no zero sits on the circle; the index is the number
    of poles in the closed disc minus the number of zeros in the open disc.
    Kernel dimension and range codimension follow from the index because the
    operator is always either injective or surjective.
    """
    tol = resolve(tol)
    omega = as_rational(omega)
    if omega.is_zero:
        raise ValueError("the zero symbol is excluded")
    zeros = classify(omega.num, tol=tol)
    poles = classify(omega.den, tol=tol)
    kappa = zeros.n_inside - poles.n_inside
    if zeros.on_circle:
        return FredholmReport(False, None, None, None, False, zeros, poles, kappa)
    index = poles.n_inside + poles.n_on_circle - zeros.n_inside
    return FredholmReport(True, index, max(0, index), max(0, -index), index == 0, zeros, poles, kappa)


def _in_rat_t(poles: ClassifiedRoots) -> bool:
    return not poles.inside and not poles.outside


def kernel_basis(omega: RationalFn, tol: Tolerances | None = None) -> list[RationalFn]:
    """Basis of the kernel as rational functions analytic on the closed disc.

    Symbols whose poles all lie on the circle use ``z**j / s_plus`` with
    ``j < deg q - deg s_minus - deg s_zero`` (circle zeros allowed). Other
    symbols must be Fredholm; their kernel is the kernel of the middle
    factor divided by ``omega_plus``.
    """
    tol = resolve(tol)
    omega = as_rational(omega)
    zeros = classify(omega.num, tol=tol)
    poles = classify(omega.den, tol=tol)
    if _in_rat_t(poles):
        count = omega.den.degree - zeros.n_inside - zeros.n_on_circle
        s_plus = from_roots(zeros.outside)
        return [normalize(monomial(j), s_plus, tol) for j in range(max(0, count))]
    if zeros.on_circle:
        raise NotSupported("kernel of a non-Fredholm symbol with poles off the circle")
    fac = factorize(omega, tol)
    q0 = fac.omega0.den
    d = q0.degree
    if fac.kappa >= 0:
        middle = [monomial(j) for j in range(d - fac.kappa)]
    else:
        middle = [monomial(j) for j in range(d)] + [q0 * monomial(i) for i in range(-fac.kappa)]
    inv_plus = fac.omega_plus.inverse()
    return [as_rational(k) * inv_plus for k in middle]


@dataclass(frozen=True)
class RangeDescriptor:
    """``Ran T = s_minus H^p + span(tilde_p_basis)``, complemented by ``complement_basis``."""

    s_minus: Poly
    q: Poly
    tilde_p_basis: tuple
    complement_basis: tuple

    def relation_residual(self, r: Poly) -> float:
        """Least-squares residual of ``r*q = r1*s_minus + r2`` with ``deg ri < deg q``."""
        M, W = _range_system(self.s_minus, self.q)
        target = _pad((r * self.q).array, M.shape[0])
        coef, *_ = np.linalg.lstsq(W, target, rcond=None)
        return float(np.max(np.abs(W @ coef - target), initial=0.0))


def _pad(a: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros(n, dtype=complex)
    out[: len(a)] = a
    return out


def _range_system(s_minus: Poly, q: Poly):
    ds, dq = max(s_minus.degree, 0), max(q.degree, 0)
    n = ds + dq
    M = np.zeros((n, ds), dtype=complex)
    for i in range(ds):
        M[i : i + dq + 1, i] = q.array
    cols = []
    for i in range(dq):
        cols.append(_pad((s_minus * monomial(i)).array, n))
    for i in range(dq):
        e = np.zeros(n, dtype=complex)
        e[i] = 1.0
        cols.append(e)
    W = np.array(cols).T if cols else np.zeros((n, 0), dtype=complex)
    return M, W


def range_descriptor(omega: RationalFn, tol: Tolerances | None = None) -> RangeDescriptor:
    """Polynomial summand of the range and a finite complement.

    The summand is ``{r in P_{deg s_minus - 1} : r*q = r1*s_minus + r2}``,
    obtained as a null space so that combinations of monomials are found even
    when no single monomial qualifies.
    """
    tol = resolve(tol)
    omega = as_rational(omega)
    zeros = classify(omega.num, tol=tol)
    poles = classify(omega.den, tol=tol)
    if not _in_rat_t(poles):
        raise NotSupported("range descriptor needs every pole on the circle")
    if zeros.on_circle:
        raise NotSupported("range descriptor needs a Fredholm symbol")
    s_minus = from_roots(zeros.inside)
    q = omega.den
    ds, dq = s_minus.degree, q.degree
    complement = tuple(monomial(i) for i in range(max(0, ds - dq)))
    if ds == 0:
        return RangeDescriptor(s_minus, q, (), complement)
    M, W = _range_system(s_minus, q)
    if W.shape[1]:
        U, sv, _ = np.linalg.svd(W, full_matrices=False)
        U = U[:, sv > tol.res * max(sv[0], 1.0)]
        A = M - U @ (U.conj().T @ M)
    else:
        A = M
    _, sv, Vh = np.linalg.svd(A)
    thresh = tol.res * max(1.0, np.linalg.norm(M, ord=np.inf))
    rank = int(np.sum(sv > thresh))
    null = Vh[rank:].conj()
    if null.shape[0] == ds:
        tilde = tuple(monomial(i) for i in range(ds))
    else:
        tilde = tuple(Poly(v) for v in null)
    return RangeDescriptor(s_minus, q, tilde, complement)


def _taylor_at(h: RationalFn, t: complex, n: int) -> np.ndarray:
    return series_divide(h.num.taylor_shift(t).array, h.den.taylor_shift(t).array, n)


def hp_divide(h, s: Poly, tol: Tolerances | None = None) -> tuple[RationalFn, Poly]:
    """Division with remainder in H^p: ``h = s*g + r`` with ``deg r < deg s_minus``.

    ``r`` interpolates ``h`` (values and derivatives) at the inside roots of
    ``s``, which is exactly what makes ``(h - r)/s`` analytic on the disc.
    """
    tol = resolve(tol)
    h = as_rational(h)
    check_in_hardy(h, tol)
    cr = classify(s, tol=tol)
    if cr.on_circle:
        raise CircleRoot("division fails for divisors with roots on the circle")
    if not cr.inside or h.is_zero:
        return h * (1 / s.leading) * as_rational(1) / as_rational(from_roots(cr.outside)), ZERO
    nodes = []
    for t, m in cr.inside:
        c = _taylor_at(h, t, m)
        nodes.append((t, [c[k] * math.factorial(k) for k in range(m)]))
    r = hermite_interpolate(nodes, tol)
    s_minus = from_roots(cr.inside)
    quot, _ = divrem(h.num - r * h.den, s_minus)
    g = normalize(quot * (1 / s.leading), from_roots(cr.outside) * h.den, tol)
    return g, r


def hermite_defect(h, s: Poly, r: Poly, tol: Tolerances | None = None) -> float:
    """Largest violation of the interpolation conditions ``(h - r)^(k)(t) = 0``."""
    h = as_rational(h)
    cr = classify(s, tol=tol)
    worst = 0.0
    for t, m in cr.inside:
        hv = _taylor_at(h, t, m)
        rv = r.taylor_shift(t).array if not r.is_zero else np.zeros(0)
        rv = _pad(rv[:m], m)
        worst = max(worst, float(np.max(np.abs(hv - rv))))
    return worst


def apply_right_inverse(omega: RationalFn, h, tol: Tolerances | None = None) -> RationalFn:
    """A solution ``g`` of ``T_omega g = h`` for Fredholm symbols of index >= 0.

    Runs ``T_{omega_plus^-1}``, the middle right inverse, then
    ``T_{omega_minus^-1}`` in reverse. The middle step multiplies by ``q0``
    and drops ``kappa`` Taylor coefficients when ``kappa >= 0``; for
    ``kappa < 0`` it multiplies by ``q0 * z**-kappa``. For index zero this is
    the two-sided inverse.
    """
    tol = resolve(tol)
    omega, h = as_rational(omega), as_rational(h)
    check_in_hardy(h, tol)
    report = analyze(omega, tol)
    if not report.is_fredholm or report.index < 0:
        raise NotSupported("right inverse needs a Fredholm symbol of nonnegative index")
    if h.is_zero:
        return h
    fac: WHFactorization = factorize(omega, tol)
    q0 = fac.omega0.den
    step = apply_toeplitz(fac.omega_minus.inverse(), h, tol).result
    if step.is_zero:
        return step
    if fac.kappa >= 0:
        step = backward_shift(normalize(q0 * step.num, step.den, tol), fac.kappa)
    else:
        step = normalize(q0 * monomial(-fac.kappa) * step.num, step.den, tol)
    if step.is_zero:
        return step
    return apply_toeplitz(fac.omega_plus.inverse(), step, tol).result


def apply_inverse(omega: RationalFn, h, tol: Tolerances | None = None) -> RationalFn:
    """``T_omega^{-1} h`` for invertible ``T_omega``."""
    tol = resolve(tol)
    if not analyze(omega, tol).invertible:
        raise NotInvertible("T_omega is not invertible")
    return apply_right_inverse(omega, h, tol)


def invariance_decompose(q: Poly, s_plus: Poly, r: Poly, tol: Tolerances | None = None):
    """Write ``r/s_plus = q*h + r2`` with ``h`` analytic on the disc and ``deg r2 < deg q``.

    With ``q*a + s_plus*b = 1``: ``r/s_plus = q*(r*a/s_plus) + r*b``, then
    ``r*b`` is reduced modulo ``q``. Returns ``(h, r2)``.
    """
    tol = resolve(tol)
    if not are_coprime(q, s_plus, tol):
        raise NotCoprime("q and s_plus share a root")
    if any(band_of(t, tol.circle) != OUTSIDE for t, _ in classify(s_plus, tol=tol).inside + classify(s_plus, tol=tol).on_circle):
        raise PreconditionError("s_plus must have every root outside the closed disc")
    if not r.degree < q.degree:
        raise PreconditionError("deg r must be below deg q")
    a, b = bezout(q, s_plus, tol)
    u, r2 = divrem(r * b, q)
    h = normalize(r * a + u * s_plus, s_plus, tol) if not (r * a + u * s_plus).is_zero else as_rational(0)
    return h, r2


def bezout_invariance_check(q: Poly, s_plus: Poly, r: Poly, tol: Tolerances | None = None) -> bool:
    tol = resolve(tol)
    h, r2 = invariance_decompose(q, s_plus, r, tol)
    # q*h*s_plus + r2*s_plus should reproduce r
    lhs = q * h.num * normalize(s_plus, h.den, tol).num + r2 * s_plus if not h.is_zero else r2 * s_plus
    resid = (lhs - r).norm()
    return resid <= tol.res * max(1.0, r.norm(), q.norm() * s_plus.norm()) and r2.degree < q.degree


def winding_index(omega: RationalFn, samples: int | None = None, tol: Tolerances | None = None) -> int:
    """Minus the winding number of ``omega`` around 0 on a circle just outside T.

    The radius sits halfway between 1 and the nearest zero or pole outside the
    closed disc (at most 1.05); sampling is dense enough for each step to
    turn the argument by well under pi.
    """
    tol = resolve(tol)
    omega = as_rational(omega)
    crit = [abs(r) for r, _ in omega.zeros(tol) + omega.poles(tol) if abs(r) > 1 + tol.circle]
    gap = min([0.1] + [c - 1 for c in crit])
    eps = gap / 2
    n = samples or int(min(2_000_000, max(4096, 400 / eps)))
    z = (1 + eps) * np.exp(2j * np.pi * np.arange(n + 1) / n)
    w = omega(z)
    dtheta = np.angle(w[1:] / w[:-1])
    return -int(round(np.sum(dtheta) / (2 * np.pi)))
