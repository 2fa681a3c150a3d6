import numpy as np
import pytest
from hypothesis import given, strategies as st

from toeplitz_like.errors import NotInDomain
from toeplitz_like.poly import ONE, Poly, from_roots, monomial
from toeplitz_like.symbol import (
    RationalFn,
    allclose,
    apply_toeplitz,
    as_rational,
    backward_shift,
    normalize,
    partial_fractions,
    riesz_project,
    shift_conjugation_check,
    split_T,
    taylor_coefficients,
)

from .helpers import separated_roots, sym


def test_normalize_cancels_common_roots():
    f = normalize(from_roots([(0.5, 1), (2.0, 1)]), from_roots([(0.5, 1), (1.0, 1)]))
    assert f.num.degree == 1 and f.den.degree == 1
    assert abs(f.num(2.0)) < 1e-12 and abs(f.den(1.0)) < 1e-12


def test_normalize_monic_denominator():
    f = normalize(Poly([2]), Poly([-2, 2]))
    assert f.den.leading == 1
    assert f.num == Poly([1])


def test_partial_fractions_double_pole():
    pf = partial_fractions(sym([(-1.0, 1)], [(1.0, 2)]))
    assert pf.poly_part.is_zero
    (term,) = pf.terms
    assert abs(term.pole - 1) < 1e-12
    assert np.allclose(term.coeffs, [1, 2])


@given(separated_roots(n_max=4, bands=("inside", "circle", "outside")),
       separated_roots(n_max=4, bands=("inside", "circle", "outside")))
def test_partial_fractions_recombine(zs, ps):
    f = normalize(from_roots(zs, 1.3 - 0.2j), from_roots(ps))
    pf = partial_fractions(f)
    for z in (0.1 + 0.05j, -0.37j, 1.7 + 0.9j, 0.9 - 1.4j):
        if min(abs(z - r) for r, _ in f.poles() or [(np.inf, 0)]) < 0.05:
            continue
        want = f(z)
        assert abs(pf(z) - want) <= 1e-8 * max(1, abs(want))


def test_split_T_separates_circle_poles():
    f = sym([], [(1.0, 1), (2.0, 1)])
    parts = split_T(f)
    for z in (0.3, -0.5j, 3.0):
        assert abs(parts.omega0(z) + parts.omega1(z) - f(z)) < 1e-12
    assert all(abs(abs(r) - 1) < 1e-12 for r, _ in parts.omega0.poles())
    assert all(abs(abs(r) - 1) > 0.5 for r, _ in parts.omega1.poles())


def test_riesz_projection_kills_inside_terms():
    f = sym([], [(0.5, 1)])  # 1/(z-0.5)
    parts = riesz_project(f)
    assert parts.analytic.is_zero


def test_apply_simple_pole():
    got = apply_toeplitz(sym([], [(1.0, 1)]), monomial(3)).result
    assert allclose(got, Poly([1, 1, 1]), 1e-12)


def test_apply_double_pole():
    got = apply_toeplitz(sym([(-1.0, 1)], [(1.0, 2)]), monomial(2)).result
    assert allclose(got, Poly([3, 1]), 1e-12)


def test_apply_rejects_disc_poles():
    with pytest.raises(NotInDomain):
        apply_toeplitz(sym([], [(1.0, 1)]), sym([], [(0.5, 1)]))
    with pytest.raises(NotInDomain):
        apply_toeplitz(ONE, sym([], [(1.0, 1)]))


def test_backward_shift():
    f = sym([], [(2.0, 1)])
    want = taylor_coefficients(f, 12)[2:]
    got = taylor_coefficients(backward_shift(f, 2), 10)
    assert np.allclose(got, want)


@pytest.mark.parametrize("omega", [
    sym([], [(1.0, 1)]),
    sym([(0.5, 1)], [(1.0, 1)]),
    sym([(-1.0, 1)], [(1.0, 2)]),
])
def test_shift_conjugation_examples(omega):
    for n in range(6):
        assert shift_conjugation_check(omega, monomial(n))


@given(separated_roots(n_max=3, bands=("inside", "circle", "outside")),
       separated_roots(n_max=3, bands=("inside", "circle", "outside")),
       st.integers(0, 6))
def test_apply_is_linear_in_monomials(zs, ps, n):
    omega = normalize(from_roots(zs), from_roots(ps))
    a = apply_toeplitz(omega, monomial(n)).result
    b = apply_toeplitz(omega, monomial(n) * 2.5).result
    assert allclose(as_rational(b), a * as_rational(2.5), 1e-9)
