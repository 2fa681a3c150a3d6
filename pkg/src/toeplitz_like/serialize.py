"""JSON encoding of polynomials, symbols and reports.

Complex numbers travel as ``[re, im]`` pairs. A polynomial is either
``{"coeffs": [c0, c1, ...]}`` (ascending) or the factored form
``{"roots": [[root, mult], ...], "leading": c}``; when both are present the
factored form wins, so known roots never go through root finding. Plain
numbers and bare coefficient lists are accepted as shorthand.
"""

from __future__ import annotations

import json
from numbers import Number

from .factor import WHFactorization
from .fredholm import FredholmReport
from .poly import ONE, Poly, from_roots, monomial
from .roots import ClassifiedRoots
from .symbol import RationalFn, as_rational, normalize
from .tolerances import Tolerances

__all__ = [
    "complex_to_json",
    "complex_from_json",
    "poly_to_json",
    "poly_from_json",
    "symbol_to_json",
    "symbol_from_json",
    "census_to_json",
    "report_to_json",
    "factorization_to_json",
    "dumps",
]


def _num(x: float) -> float | int:
    x = float(x)
    # -0.0 and 0.0 must serialize identically
    return 0.0 if x == 0 else x


def complex_to_json(c) -> list:
    c = complex(c)
    return [_num(c.real), _num(c.imag)]


def complex_from_json(x) -> complex:
    if isinstance(x, bool):
        raise ValueError("booleans are not numbers here")
    if isinstance(x, Number):
        return complex(x)
    if isinstance(x, (list, tuple)) and len(x) == 2 and all(isinstance(v, Number) for v in x):
        return complex(x[0], x[1])
    raise ValueError(f"cannot read a complex number from {x!r}")


def _roots_to_json(roots) -> list:
    return [[complex_to_json(r), int(m)] for r, m in roots]


def poly_to_json(p: Poly) -> dict:
    out = {"coeffs": [complex_to_json(c) for c in p.coeffs]}
    if p.roots is not None and not p.is_zero:
        out["roots"] = _roots_to_json(p.roots)
        out["leading"] = complex_to_json(p.leading)
    return out


def poly_from_json(obj) -> Poly:
    if isinstance(obj, Number) and not isinstance(obj, bool):
        return Poly([complex(obj)])
    if isinstance(obj, list):
        return Poly([complex_from_json(c) for c in obj])
    if isinstance(obj, dict):
        if "roots" in obj:
            roots = []
            for item in obj["roots"]:
                if not (isinstance(item, list) and len(item) == 2 and isinstance(item[1], int) and item[1] > 0):
                    raise ValueError(f"root entries must be [root, multiplicity], got {item!r}")
                roots.append((complex_from_json(item[0]), item[1]))
            return from_roots(roots, complex_from_json(obj.get("leading", 1.0)))
        if "coeffs" in obj:
            return Poly([complex_from_json(c) for c in obj["coeffs"]])
    raise ValueError(f"cannot read a polynomial from {obj!r}")


def symbol_to_json(f: RationalFn) -> dict:
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def _from_factorization(obj: dict, tol) -> RationalFn:
    parts = [symbol_from_json(obj[k], tol) for k in ("omega_minus", "omega0", "omega_plus")]
    kappa = int(obj["kappa"])
    num, den = ONE, ONE
    for part in parts:
        num, den = num * part.num, den * part.den
    if kappa >= 0:
        num = num * monomial(kappa)
    else:
        den = den * monomial(-kappa)
    return normalize(num, den, tol)


def symbol_from_json(obj, tol: Tolerances | None = None) -> RationalFn:
    """Read a symbol.

    Accepts ``{"num": ..., "den": ...}`` (``den`` defaults to 1), a bare
    polynomial, or a factorization document as written by the ``factor``
    command (the factors are multiplied back together).
    """
    if isinstance(obj, dict) and "omega_minus" in obj:
        return _from_factorization(obj, tol)
    if isinstance(obj, dict) and "num" in obj:
        num = poly_from_json(obj["num"])
        den = poly_from_json(obj.get("den", 1.0))
        return normalize(num, den, tol)
    return as_rational(poly_from_json(obj))


def census_to_json(c: ClassifiedRoots) -> dict:
    return {
        "inside": _roots_to_json(c.inside),
        "on_circle": _roots_to_json(c.on_circle),
        "outside": _roots_to_json(c.outside),
        "counts": {"inside": c.n_inside, "on_circle": c.n_on_circle, "outside": c.n_outside},
    }


def report_to_json(r: FredholmReport) -> dict:
    return {
        "fredholm": r.is_fredholm,
        "index": r.index,
        "dim_kernel": r.dim_kernel,
        "codim_range": r.codim_range,
        "invertible": r.invertible,
        "zeros": census_to_json(r.zero_census),
        "poles": census_to_json(r.pole_census),
        "kappa": r.kappa,
    }


def factorization_to_json(fac: WHFactorization) -> dict:
    return {
        "kappa": fac.kappa,
        "omega_minus": symbol_to_json(fac.omega_minus),
        "omega0": symbol_to_json(fac.omega0),
        "omega_plus": symbol_to_json(fac.omega_plus),
    }


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, shortest round-trip floats."""
    return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False) + "\n"
