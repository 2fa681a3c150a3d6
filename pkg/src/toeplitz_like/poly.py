"""Complex polynomial arithmetic with tolerance-aware canonical form.

Coefficients are stored in ascending order (``coeffs[k]`` multiplies
``z**k``). The zero polynomial is the empty tuple and its degree is the
sentinel :data:`NEG_INF`, which compares below every integer.

A :class:`Poly` may carry its roots (``roots``, a tuple of
``(root, multiplicity)`` pairs). Roots known at construction time, e.g. from a
factored input, survive multiplication and scaling, so downstream root
classification never has to re-solve them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from numbers import Number
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import DivisionByZeroPoly, NotCoprime, SingularSystem
from .tolerances import Tolerances, resolve

__all__ = [
    "Degree",
    "NEG_INF",
    "Poly",
    "DivRem",
    "ZERO",
    "ONE",
    "X",
    "constant",
    "monomial",
    "add",
    "mul",
    "scale",
    "derivative",
    "evaluate",
    "divrem",
    "bezout",
    "from_roots",
    "merge_roots",
    "hermite_interpolate",
    "series_divide",
]


class Degree(enum.Enum):
    """Degree sentinel for the zero polynomial."""

    NEG_INF = "-inf"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        return self

    def __repr__(self):
        return "NEG_INF"


NEG_INF = Degree.NEG_INF

RootList = tuple  # tuple[tuple[complex, int], ...]


def _as_coeff_tuple(values) -> tuple:
    if isinstance(values, Poly):
        return values.coeffs
    if isinstance(values, Number):
        values = [values]
    return tuple(complex(v) for v in values)


def _trim(coeffs: tuple, rel: float) -> tuple:
    if not coeffs:
        return ()
    top = max(abs(c) for c in coeffs)
    if top == 0.0:
        return ()
    cut = rel * top
    n = len(coeffs)
    while n > 0 and abs(coeffs[n - 1]) <= cut:
        n -= 1
    return coeffs[:n]


def merge_roots(*lists: Iterable) -> RootList:
    """Concatenate root lists, adding multiplicities of identical roots."""
    merged: dict[complex, int] = {}
    for lst in lists:
        for r, m in lst:
            r = complex(r)
            merged[r] = merged.get(r, 0) + int(m)
    return tuple((r, m) for r, m in merged.items() if m > 0)


@dataclass(frozen=True)
class Poly:
    """Immutable complex polynomial.

    Parameters
    ----------
    coeffs : sequence of complex
        Ascending coefficients. Trailing coefficients below
        ``Tolerances.coeff`` relative to the largest one are dropped.
    roots : sequence of (complex, int), optional
        Known roots with multiplicities. Must account for the full degree.
    """

    coeffs: tuple = ()
    roots: RootList | None = field(default=None, compare=False, repr=False)
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        c = _trim(_as_coeff_tuple(self.coeffs), resolve(None).coeff)
        object.__setattr__(self, "coeffs", c)
        if self.roots is not None:
            if not c:
                object.__setattr__(self, "roots", None)
            else:
                roots = tuple((complex(r), int(m)) for r, m in self.roots if int(m) > 0)
                if sum(m for _, m in roots) != len(c) - 1:
                    raise ValueError("root multiplicities do not match the degree")
                object.__setattr__(self, "roots", roots)

    # -- basic queries -------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> complex:
        return self.coeffs[-1] if self.coeffs else 0j

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=complex)

    def norm(self) -> float:
        """Max-norm of the coefficient vector."""
        return max((abs(c) for c in self.coeffs), default=0.0)

    def coeff(self, k: int) -> complex:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0j

    def __len__(self):
        return len(self.coeffs)

    def __call__(self, z):
        if not self.coeffs:
            return np.zeros_like(z, dtype=complex) if isinstance(z, np.ndarray) else 0j
        return np.polyval(self.array[::-1], z)

    # -- arithmetic ----------------------------------------------------
    def __neg__(self):
        return scale(self, -1)

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, scale(_coerce(other), -1))

    def __rsub__(self, other):
        return add(_coerce(other), scale(self, -1))

    def __mul__(self, other):
        if isinstance(other, Poly):
            return mul(self, other)
        if isinstance(other, Number):
            return scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = ONE
        for _ in range(int(k)):
            out = mul(out, self)
        return out

    def __divmod__(self, other):
        d = divrem(self, _coerce(other))
        return d.quotient, d.remainder

    def monic(self) -> "Poly":
        if self.is_zero:
            raise DivisionByZeroPoly("the zero polynomial has no monic form")
        return scale(self, 1 / self.leading)

    def derivative(self, k: int = 1) -> "Poly":
        return derivative(self, k)

    def taylor_shift(self, alpha: complex) -> "Poly":
        """Coefficients of ``t -> p(alpha + t)``, by repeated synthetic division."""
        a = self.array.copy()
        n = len(a)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                a[j] += alpha * a[j + 1]
        return Poly(a)

    def with_roots(self, roots) -> "Poly":
        return Poly(self.coeffs, roots=roots)

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            cs = f"{c.real:g}" if c.imag == 0 else f"({c.real:g}{c.imag:+g}j)"
            terms.append(cs if k == 0 else f"{cs}*z" if k == 1 else f"{cs}*z^{k}")
        return "Poly(" + " + ".join(terms) + ")"


class DivRem(NamedTuple):
    quotient: Poly
    remainder: Poly


def _coerce(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, Number):
        return constant(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a polynomial")


def constant(c: complex) -> Poly:
    c = complex(c)
    return Poly((c,), roots=()) if c != 0 else ZERO


def monomial(k: int, c: complex = 1.0) -> Poly:
    if k < 0:
        raise ValueError("monomial degree must be nonnegative")
    c = complex(c)
    if c == 0:
        return ZERO
    return Poly((0j,) * k + (c,), roots=((0j, k),) if k else ())


def add(a: Poly, b: Poly) -> Poly:
    n = max(len(a.coeffs), len(b.coeffs))
    out = np.zeros(n, dtype=complex)
    out[: len(a.coeffs)] += a.array
    out[: len(b.coeffs)] += b.array
    return Poly(out)


def mul(a: Poly, b: Poly) -> Poly:
    if a.is_zero or b.is_zero:
        return ZERO
    c = np.convolve(a.array, b.array)
    roots = None
    if a.roots is not None and b.roots is not None:
        roots = merge_roots(a.roots, b.roots)
    p = Poly(c)
    # trimming can only shorten c if the product underflowed; keep roots honest
    if roots is not None and len(p.coeffs) == len(c):
        p = Poly(c, roots=roots)
    return p


def scale(a: Poly, c: complex) -> Poly:
    c = complex(c)
    if c == 0 or a.is_zero:
        return ZERO
    return Poly(a.array * c, roots=a.roots)


def derivative(a: Poly, k: int = 1) -> Poly:
    arr = a.array
    for _ in range(k):
        if len(arr) <= 1:
            return ZERO
        arr = arr[1:] * np.arange(1, len(arr))
    return Poly(arr)


def evaluate(a: Poly, z):
    return a(z)


def divrem(v: Poly, s: Poly) -> DivRem:
    """Synthetic long division ``v = quotient*s + remainder``."""
    if s.is_zero:
        raise DivisionByZeroPoly("division by the zero polynomial")
    n, m = len(v.coeffs) - 1, len(s.coeffs) - 1
    if v.is_zero or n < m:
        return DivRem(ZERO, v)
    r = v.array.copy()
    sa = s.array
    lead = sa[-1]
    q = np.zeros(n - m + 1, dtype=complex)
    for k in range(n - m, -1, -1):
        qk = r[k + m] / lead
        q[k] = qk
        r[k : k + m + 1] -= qk * sa
    return DivRem(Poly(q), Poly(r[:m]))


def from_roots(roots: Iterable, leading: complex = 1.0) -> Poly:
    """``leading * prod (z - t)**m`` over ``roots = [(t, m), ...]``."""
    leading = complex(leading)
    if leading == 0:
        raise ValueError("leading coefficient must be nonzero")
    roots = merge_roots(roots)
    c = np.array([leading], dtype=complex)
    for t, m in roots:
        for _ in range(m):
            c = np.convolve(c, np.array([-t, 1.0], dtype=complex))
    return Poly(c, roots=roots)


def _sylvester(a: Poly, b: Poly) -> np.ndarray:
    na, nb = a.degree, b.degree
    size = na + nb
    S = np.zeros((size, size), dtype=complex)
    for j in range(nb):
        S[j : j + na + 1, j] = a.array
    for j in range(na):
        S[j : j + nb + 1, nb + j] = b.array
    return S


def bezout(a: Poly, b: Poly, tol: Tolerances | None = None) -> tuple[Poly, Poly]:
    """Return ``(u, v)`` with ``a*u + b*v = 1``, ``deg u < deg b``, ``deg v < deg a``.

    Solved as the Sylvester linear system; the degree bounds make the solution
    unique whenever it exists.
    """
    tol = resolve(tol)
    if a.is_zero or b.is_zero:
        raise NotCoprime("zero polynomial has no Bezout partner")
    if a.degree == 0:
        return constant(1 / a.leading), ZERO
    if b.degree == 0:
        return ZERO, constant(1 / b.leading)
    S = _sylvester(a, b)
    rhs = np.zeros(S.shape[0], dtype=complex)
    rhs[0] = 1.0
    if np.linalg.cond(S) > 1.0 / np.finfo(float).eps / 10:
        raise NotCoprime("Sylvester matrix is numerically singular")
    try:
        x = np.linalg.solve(S, rhs)
    except np.linalg.LinAlgError as exc:
        raise NotCoprime(str(exc)) from None
    u, v = Poly(x[: b.degree]), Poly(x[b.degree :])
    resid = (a * u + b * v - ONE).norm()
    if resid > tol.res * max(1.0, a.norm(), b.norm()):
        raise NotCoprime(f"Bezout residual {resid:.3e} exceeds tolerance")
    return u, v


def hermite_interpolate(nodes: Sequence, tol: Tolerances | None = None) -> Poly:
    """Polynomial of degree ``< n`` matching values and derivatives.

    Parameters
    ----------
    nodes : sequence of (point, [f(x), f'(x), f''(x), ...])
        Ordinary derivatives, not Taylor coefficients. ``n`` is the total
        number of conditions.

    Uses confluent divided differences (Newton form).
    """
    tol = resolve(tol)
    pts = [complex(x) for x, _ in nodes]
    for i in range(len(pts)):
        for j in range(i):
            if abs(pts[i] - pts[j]) <= tol.cluster:
                raise SingularSystem("interpolation nodes must be distinct")
    z, taylor, node_of = [], [], []
    for idx, (x, derivs) in enumerate(nodes):
        t = [complex(d) / math.factorial(k) for k, d in enumerate(derivs)]
        taylor.append(t)
        for _ in t:
            z.append(complex(x))
            node_of.append(idx)
    n = len(z)
    if n == 0:
        return ZERO
    col = [taylor[node_of[i]][0] for i in range(n)]
    diag = [col[0]]
    for j in range(1, n):
        new = [0j] * n
        for i in range(j, n):
            if node_of[i] == node_of[i - j]:
                new[i] = taylor[node_of[i]][j]
            else:
                new[i] = (col[i] - col[i - 1]) / (z[i] - z[i - j])
        col = new
        diag.append(col[j])
    p = Poly((diag[-1],))
    for k in range(n - 2, -1, -1):
        p = p * Poly((-z[k], 1.0)) + Poly((diag[k],))
    # verify every condition
    scale_ = 1.0 + max(abs(c) for t in taylor for c in t)
    for (x, _), t in zip(nodes, taylor):
        shifted = p.taylor_shift(complex(x))
        for k, want in enumerate(t):
            if abs(shifted.coeff(k) - want) > tol.res * scale_ * max(1.0, abs(x)) ** n:
                raise SingularSystem("Hermite conditions not reproduced within tolerance")
    return p


def series_divide(num: Sequence, den: Sequence, n: int) -> np.ndarray:
    """First ``n`` power-series coefficients of ``num/den`` (``den[0] != 0``)."""
    num = np.asarray(num, dtype=complex)
    den = np.asarray(den, dtype=complex)
    if len(den) == 0 or den[0] == 0:
        raise DivisionByZeroPoly("series division needs a nonzero constant term")
    out = np.zeros(n, dtype=complex)
    d0 = den[0]
    for k in range(n):
        acc = num[k] if k < len(num) else 0j
        hi = min(k, len(den) - 1)
        if hi >= 1:
            acc -= np.dot(den[1 : hi + 1], out[k - 1 :: -1][:hi])
        out[k] = acc / d0
    return out


ZERO = Poly(())
ONE = Poly((1.0,), roots=())
X = Poly((0.0, 1.0), roots=((0j, 1),))
