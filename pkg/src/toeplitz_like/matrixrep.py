"""Toeplitz matrix representation of T_omega and growth diagnostics."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotSupported, PreconditionError
from .fredholm import analyze, apply_right_inverse
from .poly import DivRem, Poly, monomial
from .roots import OUTSIDE, band_of, classify
from .symbol import apply_toeplitz, as_rational, partial_fractions, taylor_coefficients
from .tolerances import Tolerances, resolve

__all__ = [
    "binomial_divide",
    "binomial_divide_integers",
    "SymbolCoefficients",
    "symbol_coefficients",
    "TruncatedMatrix",
    "truncated_matrix",
    "GrowthReport",
    "growth_check",
    "inverse_matrix",
    "inverse_matrix_check",
]

# largest binomial we accept as an exact double
_EXACT_LIMIT = 2**52


def binomial_divide_integers(N: int, m: int) -> tuple[list[int], list[int]]:
    """Ascending integer coefficients of quotient and remainder of ``z**N / (z-1)**m``.

    ``z**N = (z-1)**m * sum_i C(i+m-1, m-1) z**(N-m-i) + sum_{j<m} C(N, j) (z-1)**j``.
    """
    if not (isinstance(N, int) and isinstance(m, int)) or m < 1 or m >= N:
        raise PreconditionError("need integers 1 <= m < N")
    quot = [0] * (N - m + 1)
    for i in range(N - m + 1):
        quot[N - m - i] = math.comb(i + m - 1, m - 1)
    rem = [0] * m
    for j in range(m):
        c = math.comb(N, j)
        for l in range(j + 1):
            rem[l] += c * math.comb(j, l) * (-1) ** (j - l)
    return quot, rem


def binomial_divide(N: int, m: int) -> DivRem:
    quot, rem = binomial_divide_integers(N, m)
    return DivRem(Poly([complex(c) for c in quot]), Poly([complex(c) for c in rem]))


@dataclass(frozen=True)
class SymbolCoefficients:
    """Coefficients ``a_k`` for ``|k| <= window``; matrix entry ``(m, n)`` is ``a_{m-n}``.

    ``M`` is the largest order of a pole on the circle (0 if none).
    """

    a: dict
    M: int
    window: int

    def __getitem__(self, k: int) -> complex:
        return self.a[k]

    def negative(self) -> np.ndarray:
        """``a_{-1}, ..., a_{-window}``."""
        return np.array([self.a[-j] for j in range(1, self.window + 1)])

    def nonnegative(self) -> np.ndarray:
        """``a_0, ..., a_window``."""
        return np.array([self.a[j] for j in range(self.window + 1)])


def _closed_form(omega, K: int, tol: Tolerances) -> dict:
    pf = partial_fractions(omega, tol)
    a = {k: 0j for k in range(-K, K + 1)}
    for k in range(min(K, pf.poly_part.degree) + 1 if not pf.poly_part.is_zero else 0):
        a[k] += pf.poly_part.coeff(k)
    for term in pf.terms:
        band = band_of(term.pole, tol.circle)
        for order, c in enumerate(term.coeffs, start=1):
            if c == 0:
                continue
            if band == OUTSIDE:
                # (z - b)^-o = (-b)^-o * sum_i C(i+o-1, o-1) b^-i z^i
                b = term.pole
                lead = c * (-b) ** (-order)
                for i in range(K + 1):
                    a[i] += lead * math.comb(i + order - 1, order - 1) * b ** (-i)
            else:
                # expansion at infinity: (z - t)^-o = sum_{j>=o} C(j-1, o-1) t^(j-o) z^-j
                t = term.pole
                for j in range(order, K + 1):
                    a[-j] += c * math.comb(j - 1, order - 1) * t ** (j - order)
    return a


def _from_oracle(omega, K: int, tol: Tolerances) -> dict:
    a = {}
    col0 = apply_toeplitz(omega, monomial(0), tol).result
    for k, v in enumerate(taylor_coefficients(col0, K + 1)):
        a[k] = complex(v)
    for j in range(1, K + 1):
        col = apply_toeplitz(omega, monomial(j), tol).result
        a[-j] = complex(taylor_coefficients(col, 1)[0])
    return a


def symbol_coefficients(omega, window: int, tol: Tolerances | None = None, method: str = "closed") -> SymbolCoefficients:
    """Coefficients ``a_k`` of the matrix representation.

    Parameters
    ----------
    omega : RationalFn or coercible
    window : int
        ``K``; coefficients for ``-K <= k <= K`` are produced.
    method : {"closed", "oracle"}
        ``"closed"`` expands the partial fractions directly: outside poles and
        the polynomial part give ``a_k`` for ``k >= 0``, inside and circle
        poles give ``a_{-j}`` through their expansion at infinity.
        ``"oracle"`` reads the first column and first row off
        ``apply_toeplitz``.
    """
    tol = resolve(tol)
    omega = as_rational(omega)
    if omega.is_zero:
        raise ValueError("the zero symbol is excluded")
    if window < 1:
        raise PreconditionError("window must be at least 1")
    M = classify(omega.den, tol=tol).max_circle_order if omega.den.degree > 0 else 0
    if M and math.comb(window + M - 1, M - 1) >= _EXACT_LIMIT:
        raise PreconditionError("window too large for exact binomials")
    if method == "closed":
        a = _closed_form(omega, window, tol)
    elif method == "oracle":
        a = _from_oracle(omega, window, tol)
    else:
        raise ValueError(f"unknown method {method!r}")
    return SymbolCoefficients(a, M, window)


@dataclass(frozen=True)
class TruncatedMatrix:
    entries: np.ndarray
    N: int

    def is_toeplitz(self) -> bool:
        E = self.entries
        return all(np.all(np.diagonal(E, k) == E[max(0, -k), max(0, k)]) for k in range(-self.N + 1, self.N))


def truncated_matrix(omega, N: int, tol: Tolerances | None = None, coeffs: SymbolCoefficients | None = None) -> TruncatedMatrix:
    if N < 1:
        raise PreconditionError("N must be at least 1")
    if coeffs is None or coeffs.window < N:
        coeffs = symbol_coefficients(omega, max(N, 1), tol)
    idx = np.arange(N)
    E = np.array([[coeffs.a[m - n] for n in idx] for m in idx], dtype=complex)
    return TruncatedMatrix(E, N)


@dataclass(frozen=True)
class GrowthReport:
    bound_constant: float
    exponent_ok: bool
    l2_tail: float
    slope: float


def growth_check(coeffs: SymbolCoefficients) -> GrowthReport:
    """Fit ``|a_{-j}| <= C j^(M-1)`` and sum the nonnegative tail.

    ``exponent_ok`` holds when the log-log slope of ``|a_{-j}| / j^(M-1)``
    over the last half of the window stays below 0.1.
    """
    K = coeffs.window
    if K < 16:
        raise PreconditionError("growth check needs a window of at least 16")
    j = np.arange(1, K + 1, dtype=float)
    ratio = np.abs(coeffs.negative()) / j ** (coeffs.M - 1)
    C = float(np.max(ratio))
    half = slice(K // 2, K)
    tail_j, tail_r = j[half], ratio[half]
    pos = tail_r > 1e-300
    if pos.sum() >= 2:
        slope = float(np.polyfit(np.log(tail_j[pos]), np.log(tail_r[pos]), 1)[0])
    else:
        slope = -math.inf
    l2 = float(np.sum(np.abs(coeffs.nonnegative()) ** 2))
    return GrowthReport(C, slope < 0.1, l2, slope)


def _column_taylor(g, L: int) -> np.ndarray:
    return taylor_coefficients(g, L)


def inverse_matrix(omega, N: int, L: int | None = None, tol: Tolerances | None = None) -> np.ndarray:
    """``L x N`` block of the (right) inverse: column n holds the Taylor coefficients of ``T^# z^n``."""
    tol = resolve(tol)
    L = N if L is None else L
    cols = [_column_taylor(apply_right_inverse(omega, monomial(n), tol), L) for n in range(N)]
    return np.array(cols, dtype=complex).T


def inverse_matrix_check(omega, N: int, tol: Tolerances | None = None, max_pad: int = 4096) -> float:
    """``||[T]_N [T^#]_N - I||_inf`` on the block away from the truncation edge.

    Columns of ``T^#`` may be infinite series, so the product runs over a
    padded inner dimension ``L`` that doubles until the block stabilizes.
    """
    tol = resolve(tol)
    omega = as_rational(omega)
    if N < 4:
        raise PreconditionError("N must be at least 4")
    report = analyze(omega, tol)
    if not report.is_fredholm:
        raise NotSupported("inverse check needs a Fredholm symbol")
    if report.index < 0:
        raise NotSupported("only right inverses (index >= 0) are supported")
    d = max(omega.num.degree, 0) + max(omega.den.degree, 0) + abs(report.kappa)
    B = max(1, N - d)
    cols = [apply_right_inverse(omega, monomial(n), tol) for n in range(N)]
    L, prev = max(32, 2 * N), None
    while True:
        coeffs = symbol_coefficients(omega, L + N, tol)
        T = np.array([[coeffs.a[m - l] for l in range(L)] for m in range(N)], dtype=complex)
        S = np.array([_column_taylor(g, L) for g in cols], dtype=complex).T
        P = (T @ S)[:B, :B]
        resid = float(np.max(np.sum(np.abs(P - np.eye(B)), axis=1)))
        if prev is not None and abs(resid - prev) <= 0.1 * max(tol.res, resid) or L >= max_pad:
            return resid
        prev, L = resid, 2 * L
