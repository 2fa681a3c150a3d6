import numpy as np
import pytest
from hypothesis import given, strategies as st

from toeplitz_like.errors import CircleRoot, NotCoprime, NotInDomain, NotInvertible, NotSupported, PreconditionError
from toeplitz_like.fredholm import (
    analyze,
    apply_inverse,
    apply_right_inverse,
    bezout_invariance_check,
    hermite_defect,
    hp_divide,
    kernel_basis,
    range_descriptor,
    winding_index,
)
from toeplitz_like.poly import ONE, Poly, from_roots, monomial
from toeplitz_like.symbol import allclose, apply_toeplitz, as_rational, normalize, taylor_coefficients

from .helpers import separated_roots, sym


def _is_zero(f, n=30, tol=1e-8):
    return np.max(np.abs(taylor_coefficients(f, n)), initial=0.0) <= tol


def test_analyze_examples():
    r = analyze(sym([], [(1.0, 1)]))
    assert (r.is_fredholm, r.index, r.dim_kernel, r.codim_range, r.invertible) == (True, 1, 1, 0, False)
    r = analyze(sym([(0.5, 1)], [(1.0, 1)]))
    assert r.invertible and r.index == 0
    r = analyze(sym([(-1.0, 1)], [(1.0, 2)]))
    assert not r.is_fredholm and r.index is None and not r.invertible


def test_kernel_examples():
    (k,) = kernel_basis(sym([], [(1.0, 1)]))
    assert allclose(k, ONE, 1e-12)
    (k,) = kernel_basis(sym([(2.0, 1)], [(1.0, 1)]))
    assert allclose(k, sym([], [(2.0, 1)]), 1e-12)
    assert kernel_basis(sym([(0.5, 1)], [(1.0, 1)])) == []
    (k,) = kernel_basis(sym([(-1.0, 1)], [(1.0, 2)]))
    assert allclose(k, ONE, 1e-12)


def test_kernel_not_supported_off_rat_t():
    with pytest.raises(NotSupported):
        kernel_basis(sym([(1j, 1)], [(0.5, 1)]))


def test_strictly_proper_monomials_in_kernel():
    omega = sym([(3.0, 1)], [(1.0, 2), (-1.0, 1), (1j, 1)])
    for j in range(omega.den.degree - omega.num.degree):
        assert _is_zero(apply_toeplitz(omega, monomial(j)).result)


@given(separated_roots(n_max=4, bands=("inside", "circle", "outside")),
       separated_roots(n_max=4, bands=("inside", "circle", "outside")))
def test_index_dichotomy_and_kernel(zs, ps):
    omega = normalize(from_roots(zs, 1.1), from_roots(ps))
    r = analyze(omega)
    if not r.is_fredholm:
        return
    assert r.index == r.dim_kernel - r.codim_range
    assert r.dim_kernel == 0 or r.codim_range == 0
    assert r.index == r.pole_census.n_inside + r.pole_census.n_on_circle - r.zero_census.n_inside
    basis = kernel_basis(omega)
    assert len(basis) == r.dim_kernel
    for k in basis:
        assert _is_zero(apply_toeplitz(omega, k).result)
    if basis:
        M = np.array([taylor_coefficients(k, 40) for k in basis])
        assert np.linalg.matrix_rank(M, tol=1e-10) == len(basis)


def test_range_descriptor_examples():
    d = range_descriptor(sym([(0.5, 1)], [(1.0, 1)]))
    assert d.complement_basis == ()
    assert [p.coeffs for p in d.tilde_p_basis] == [(1,)]
    d = range_descriptor(sym([(0.4, 1), (0.6, 1)], [(1.0, 1)]))
    assert len(d.complement_basis) == 1
    for r in d.tilde_p_basis:
        assert d.relation_residual(r) < 1e-9
    d = range_descriptor(sym([(2.0, 1)], [(1.0, 1)]))
    assert d.s_minus == ONE and d.complement_basis == () and d.tilde_p_basis == ()


def test_range_descriptor_preconditions():
    with pytest.raises(NotSupported):
        range_descriptor(sym([], [(0.5, 1)]))
    with pytest.raises(NotSupported):
        range_descriptor(sym([(-1.0, 1)], [(1.0, 2)]))


def test_hp_divide_examples():
    g, r = hp_divide(sym([], [(2.0, 1)]), Poly([-0.5, 1]))
    assert abs(r.coeff(0) + 2 / 3) < 1e-12
    assert allclose(g, sym([], [(2.0, 1)], lead=2 / 3), 1e-12)
    h = sym([(0.1, 1)], [(3.0, 1)])
    g, r = hp_divide(h, Poly([4]))
    assert r.is_zero and allclose(g, h * as_rational(0.25), 1e-12)
    g, r = hp_divide(monomial(2), Poly([-2, 1]))
    assert r.is_zero and allclose(g, sym([(0, 2)], [(2.0, 1)]), 1e-12)


def test_hp_divide_circle_root():
    with pytest.raises(CircleRoot):
        hp_divide(ONE, Poly([-1, 1]))
    with pytest.raises(NotInDomain):
        hp_divide(sym([], [(0.5, 1)]), Poly([-2, 1]))


def test_inverse_examples():
    omega = sym([(0.5, 1)], [(1.0, 1)])
    assert allclose(apply_inverse(omega, ONE), ONE, 1e-12)
    assert allclose(apply_inverse(omega, monomial(1)), Poly([-0.5, 1]), 1e-12)
    assert apply_inverse(omega, Poly([0])).is_zero
    with pytest.raises(NotInvertible):
        apply_inverse(sym([], [(1.0, 1)]), ONE)
    with pytest.raises(NotInDomain):
        apply_inverse(omega, sym([], [(0.5, 1)]))


@given(separated_roots(n_max=3, bands=("inside", "circle", "outside")),
       separated_roots(n_max=3, bands=("inside", "circle", "outside")),
       st.lists(st.floats(-2, 2), min_size=1, max_size=9))
def test_right_inverse_round_trip(zs, ps, hc):
    omega = normalize(from_roots(zs), from_roots(ps))
    r = analyze(omega)
    h = Poly(hc)
    if not r.is_fredholm or r.index < 0:
        with pytest.raises(NotSupported):
            apply_right_inverse(omega, h)
        return
    g = apply_right_inverse(omega, h)
    back = taylor_coefficients(apply_toeplitz(omega, g).result, 20)
    want = taylor_coefficients(as_rational(h), 20)
    assert np.max(np.abs(back - want)) <= 1e-8 * max(1.0, np.max(np.abs(want)))


def test_inverse_recovers_domain_elements():
    omega = sym([(0.5, 1), (0.2j, 1), (2.5, 1)], [(1.0, 1), (-0.3, 1)])
    assert analyze(omega).invertible
    q = omega.den
    for g in (q * Poly([1, 2]), Poly([0.5]), q * monomial(3) + Poly([1])):
        h = apply_toeplitz(omega, g).result
        assert allclose(apply_inverse(omega, h), g, 1e-9)


def test_bezout_invariance_examples():
    assert bezout_invariance_check(Poly([-1, 1]), Poly([-2, 1]), Poly([1]))
    assert bezout_invariance_check(from_roots([(1.0, 2)]), Poly([-3, 1]), Poly([0, 1]))
    with pytest.raises(NotCoprime):
        bezout_invariance_check(Poly([-1, 1]), Poly([-1, 1]), Poly([1]))
    with pytest.raises(PreconditionError):
        bezout_invariance_check(Poly([-1, 1]), Poly([-0.5, 1]), Poly([1]))


@pytest.mark.parametrize("omega", [
    sym([], [(1.0, 1)]),
    sym([(2.0, 1)], [(1.0, 1)]),
    sym([(0, 2)], [(0.5, 1)]),
    sym([(0.3, 1), (2.5, 1)], [(0.5, 1), (1j, 2), (3.0, 1)]),
])
def test_winding_number_agrees_with_index(omega):
    assert winding_index(omega) == analyze(omega).index


@given(separated_roots(n_max=4, bands=("inside", "outside")),
       separated_roots(n_max=3, bands=("circle",)))
def test_range_descriptor_properties(zs, ps):
    omega = normalize(from_roots(zs, 0.8), from_roots(ps))
    d = range_descriptor(omega)
    ds, dq = d.s_minus.degree, omega.den.degree
    assert len(d.complement_basis) == max(0, ds - dq)
    assert analyze(omega).codim_range == len(d.complement_basis)
    for r in d.tilde_p_basis:
        assert d.relation_residual(r) < 1e-9
    if ds <= dq:
        assert len(d.tilde_p_basis) == ds
