"""Shared builders and hypothesis strategies."""

import numpy as np
from hypothesis import strategies as st

from toeplitz_like.poly import Poly, from_roots
from toeplitz_like.symbol import RationalFn


def sym(zeros, poles, lead=1.0) -> RationalFn:
    return RationalFn(from_roots(zeros, lead), from_roots(poles))


finite = st.floats(min_value=-3, max_value=3, allow_nan=False, allow_infinity=False)
complexes = st.builds(complex, finite, finite)


@st.composite
def polys(draw, max_degree=6):
    coeffs = draw(st.lists(complexes, min_size=1, max_size=max_degree + 1))
    return Poly(coeffs)


@st.composite
def separated_roots(draw, n_max=4, bands=("inside", "outside"), min_gap=0.3):
    """Roots with pairwise angular gap ``min_gap`` in the requested bands."""
    n = draw(st.integers(1, n_max))
    angles = sorted(draw(st.lists(st.floats(0, 2 * np.pi - 1e-9), min_size=n, max_size=n)))
    kept = []
    for a in angles:
        if all(abs(np.angle(np.exp(1j * (a - b)))) >= min_gap for b in kept):
            kept.append(a)
    out = []
    for a in kept:
        band = draw(st.sampled_from(bands))
        if band == "inside":
            r = draw(st.floats(0.2, 0.8))
        elif band == "outside":
            r = draw(st.floats(1.25, 3.0))
        else:
            r = 1.0
        m = draw(st.integers(1, 2))
        out.append((complex(r * np.cos(a), r * np.sin(a)), m))
    return out
