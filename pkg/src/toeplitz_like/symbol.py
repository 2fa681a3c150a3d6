"""Rational symbols, partial fractions, Riesz projection and the action of T_omega.

Everything here works on exact rational representatives: a Hardy-space
argument ``g`` is a polynomial or a rational function whose poles lie strictly
outside the closed unit disc. ``apply_toeplitz`` is the reference oracle the
other modules are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Number
from typing import Callable, NamedTuple

import numpy as np

from .errors import DivisionByZeroPoly, NotInDomain
from .poly import ONE, ZERO, Poly, constant, divrem, from_roots, monomial, series_divide
from .roots import INSIDE, ON_CIRCLE, OUTSIDE, band_of, find_roots
from .tolerances import Tolerances, resolve

__all__ = [
    "RationalFn",
    "PoleTerm",
    "PartialFractions",
    "SymbolSplit",
    "RieszParts",
    "ToeplitzApplication",
    "normalize",
    "partial_fractions",
    "split_T",
    "riesz_project",
    "apply_toeplitz",
    "backward_shift",
    "taylor_coefficients",
    "shift_conjugation_check",
    "allclose",
    "as_rational",
]


@dataclass(frozen=True)
class RationalFn:
    """Quotient ``num/den`` with coprime parts and monic ``den``.

    Build instances with :func:`normalize`; the constructor itself trusts its
    arguments.
    """

    num: Poly
    den: Poly

    def __call__(self, z):
        return self.num(z) / self.den(z)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    @property
    def is_strictly_proper(self) -> bool:
        return self.num.degree < self.den.degree

    def zeros(self, tol: Tolerances | None = None) -> tuple:
        return () if self.num.is_zero else find_roots(self.num, tol)

    def poles(self, tol: Tolerances | None = None) -> tuple:
        return find_roots(self.den, tol)

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __add__(self, other):
        other = as_rational(other)
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        return normalize(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-as_rational(other))

    def __rsub__(self, other):
        return as_rational(other) - self

    def __mul__(self, other):
        if isinstance(other, Number):
            return RationalFn(self.num * other, self.den) if other != 0 else ZERO_FN
        other = as_rational(other)
        return normalize(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Number):
            return self * (1 / complex(other))
        return self * as_rational(other).inverse()

    def inverse(self) -> "RationalFn":
        if self.is_zero:
            raise DivisionByZeroPoly("the zero function has no inverse")
        return normalize(self.den, self.num)

    @classmethod
    def from_poly(cls, p: Poly) -> "RationalFn":
        return RationalFn(p, ONE)

    def __repr__(self):
        return f"RationalFn({self.num!r} / {self.den!r})"


ZERO_FN = RationalFn(ZERO, ONE)


def as_rational(x) -> RationalFn:
    if isinstance(x, RationalFn):
        return x
    if isinstance(x, Poly):
        return RationalFn(x, ONE)
    if isinstance(x, Number):
        return RationalFn(constant(x), ONE)
    raise TypeError(f"cannot interpret {type(x).__name__} as a rational function")


def normalize(num: Poly, den: Poly, tol: Tolerances | None = None) -> RationalFn:
    """Cancel common root clusters and make the denominator monic."""
    tol = resolve(tol)
    if den.is_zero:
        raise DivisionByZeroPoly("zero denominator")
    if num.is_zero:
        return ZERO_FN
    rn = [list(x) for x in find_roots(num, tol)]
    rd = [list(x) for x in find_roots(den, tol)]
    cancelled = False
    for d in rd:
        for n in rn:
            if d[1] and n[1] and abs(d[0] - n[0]) <= tol.cluster:
                k = min(d[1], n[1])
                d[1] -= k
                n[1] -= k
                cancelled = True
    lead = num.leading / den.leading
    if cancelled:
        new_num = from_roots([(r, m) for r, m in rn if m], lead)
        new_den = from_roots([(r, m) for r, m in rd if m])
    else:
        new_num = Poly(num.array / den.leading, roots=[(r, m) for r, m in rn])
        new_den = Poly(den.array / den.leading, roots=[(r, m) for r, m in rd])
    return RationalFn(new_num, new_den)


# ---------------------------------------------------------------------------
# partial fractions


class PoleTerm(NamedTuple):
    """``sum_k coeffs[k-1] / (z - pole)**k`` for ``k = 1..order``."""

    pole: complex
    order: int
    coeffs: tuple

    def __call__(self, z):
        return sum(c / (z - self.pole) ** (k + 1) for k, c in enumerate(self.coeffs))


@dataclass(frozen=True)
class PartialFractions:
    poly_part: Poly
    terms: tuple = ()

    def __call__(self, z):
        return self.poly_part(z) + sum(t(z) for t in self.terms)

    @property
    def is_zero(self) -> bool:
        return self.poly_part.is_zero and not self.terms

    @property
    def poles(self) -> tuple:
        return tuple((t.pole, t.order) for t in self.terms)

    def select(self, keep: Callable[[complex], bool]) -> "PartialFractions":
        return PartialFractions(ZERO, tuple(t for t in self.terms if keep(t.pole)))

    def recombine(self) -> RationalFn:
        """Sum over the common denominator ``prod (z - pole)**order``."""
        if not self.terms:
            return RationalFn(self.poly_part, ONE)
        poles = [(t.pole, t.order) for t in self.terms]
        den = from_roots(poles)
        num = self.poly_part * den
        for t in self.terms:
            for k, c in enumerate(t.coeffs, start=1):
                if c == 0:
                    continue
                reduced = [(p, m - k if p == t.pole else m) for p, m in poles]
                num = num + from_roots(reduced, c)
        return RationalFn(num, den) if not num.is_zero else ZERO_FN


def _principal_part(f: RationalFn, pole: complex, order: int) -> PoleTerm:
    """Laurent coefficients of ``f`` at a pole, from a local Taylor expansion."""
    others = [(r, m) for r, m in f.poles() if r != pole]
    n_shift = f.num.taylor_shift(pole).array[:order]
    e_shift = np.array([1.0 + 0j])
    for r, m in others:
        lin = np.array([pole - r, 1.0], dtype=complex)
        for _ in range(m):
            e_shift = np.convolve(e_shift, lin)[:order]
    b = series_divide(n_shift, e_shift, order)
    return PoleTerm(complex(pole), int(order), tuple(complex(b[order - k]) for k in range(1, order + 1)))


def _split(f: RationalFn, chosen: Callable[[complex], bool]) -> tuple[tuple, RationalFn]:
    """Principal parts at the chosen poles and the remaining rational function.

    Writes ``num/(D_sel*D_rest) = B/D_sel + A/D_rest`` where ``B/D_sel`` is the
    sum of chosen principal parts and ``A = (num - B*D_rest)/D_sel`` is exact.
    This never forms the polynomial part separately, which avoids cancelling
    huge quotients against outside-pole terms.
    """
    sel = [(r, m) for r, m in f.poles() if chosen(r)]
    if not sel or f.is_zero:
        return (), f
    rest = [(r, m) for r, m in f.poles() if not chosen(r)]
    terms = tuple(_principal_part(f, r, m) for r, m in sel)
    d_sel, d_rest = from_roots(sel), from_roots(rest)
    B = ZERO
    for t in terms:
        for k, c in enumerate(t.coeffs, start=1):
            if c != 0:
                B = B + from_roots([(p, m - k if p == t.pole else m) for p, m in sel], c)
    A = divrem(f.num - B * d_rest, d_sel).quotient
    remainder = RationalFn(A, d_rest) if not A.is_zero else ZERO_FN
    return terms, remainder


def partial_fractions(f: RationalFn, tol: Tolerances | None = None) -> PartialFractions:
    f = as_rational(f)
    if f.is_zero:
        return PartialFractions(ZERO, ())
    poly_part = divrem(f.num, f.den).quotient
    terms = tuple(_principal_part(f, r, m) for r, m in f.poles(tol))
    return PartialFractions(poly_part, terms)


class SymbolSplit(NamedTuple):
    omega0: RationalFn
    omega1: RationalFn


def split_T(f: RationalFn, tol: Tolerances | None = None) -> SymbolSplit:
    """``f = omega0 + omega1``: circle-pole principal parts plus the rest."""
    tol = resolve(tol)
    f = as_rational(f)
    terms, rest = _split(f, lambda r: band_of(r, tol.circle) == ON_CIRCLE)
    return SymbolSplit(PartialFractions(ZERO, terms).recombine(), rest)


class RieszParts(NamedTuple):
    analytic: RationalFn
    anti: PartialFractions
    defect: PartialFractions


def riesz_project(f: RationalFn, tol: Tolerances | None = None) -> RieszParts:
    """Split into the analytic part, inside-pole terms and on-circle terms."""
    tol = resolve(tol)
    f = as_rational(f)
    terms, analytic = _split(f, lambda r: band_of(r, tol.circle) != OUTSIDE)
    anti = tuple(t for t in terms if band_of(t.pole, tol.circle) == INSIDE)
    defect = tuple(t for t in terms if band_of(t.pole, tol.circle) == ON_CIRCLE)
    return RieszParts(analytic, PartialFractions(ZERO, anti), PartialFractions(ZERO, defect))


class ToeplitzApplication(NamedTuple):
    result: RationalFn
    rho: PartialFractions
    dropped: PartialFractions


def check_in_hardy(g: RationalFn, tol: Tolerances | None = None) -> None:
    tol = resolve(tol)
    for r, _ in g.poles(tol):
        if band_of(r, tol.circle) != OUTSIDE:
            raise NotInDomain(f"argument has a pole at {r!r} in the closed unit disc")


def apply_toeplitz(omega: RationalFn, g, tol: Tolerances | None = None) -> ToeplitzApplication:
    """``T_omega g``: Riesz projection of ``omega*g`` after removing circle poles."""
    tol = resolve(tol)
    omega, g = as_rational(omega), as_rational(g)
    check_in_hardy(g, tol)
    if g.is_zero or omega.is_zero:
        empty = PartialFractions(ZERO, ())
        return ToeplitzApplication(ZERO_FN, empty, empty)
    prod = normalize(omega.num * g.num, omega.den * g.den, tol)
    parts = riesz_project(prod, tol)
    return ToeplitzApplication(parts.analytic, parts.defect, parts.anti)


def taylor_coefficients(f: RationalFn, n: int) -> np.ndarray:
    """First ``n`` Taylor coefficients at the origin (requires ``den(0) != 0``)."""
    f = as_rational(f)
    if f.is_zero:
        return np.zeros(n, dtype=complex)
    return series_divide(f.num.array, f.den.array, n)


def backward_shift(f: RationalFn, k: int = 1) -> RationalFn:
    """``(f - first k Taylor terms) / z**k``, i.e. ``T_{z^-k} f`` for analytic f."""
    f = as_rational(f)
    if k <= 0 or f.is_zero:
        return f
    head = Poly(taylor_coefficients(f, k))
    top = (f.num - head * f.den).array
    if len(top) <= k:
        return ZERO_FN
    return RationalFn(Poly(top[k:]), f.den)


def allclose(f, g, rtol: float) -> bool:
    """Cross-multiplied coefficient comparison of two rational functions."""
    f, g = as_rational(f), as_rational(g)
    diff = (f.num * g.den - g.num * f.den).norm()
    scale_ = max(1.0, f.num.norm() * g.den.norm(), g.num.norm() * f.den.norm())
    return diff <= rtol * scale_


def shift_conjugation_check(omega: RationalFn, g, tol: Tolerances | None = None) -> bool:
    """Whether ``T_{z^-1} T_omega T_z g == T_omega g``."""
    tol = resolve(tol)
    g = as_rational(g)
    zg = normalize(g.num * monomial(1), g.den, tol) if not g.is_zero else g
    lhs = backward_shift(apply_toeplitz(omega, zg, tol).result, 1)
    rhs = apply_toeplitz(omega, g, tol).result
    return allclose(lhs, rhs, tol.res)
