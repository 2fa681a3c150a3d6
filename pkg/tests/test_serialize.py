import json

from hypothesis import given

from toeplitz_like.fredholm import analyze
from toeplitz_like.factor import factorize
from toeplitz_like.poly import Poly, from_roots
from toeplitz_like.serialize import (
    complex_to_json,
    dumps,
    factorization_to_json,
    poly_from_json,
    poly_to_json,
    report_to_json,
    symbol_from_json,
    symbol_to_json,
)
from toeplitz_like.symbol import allclose, normalize

from .helpers import polys, separated_roots


@given(polys())
def test_poly_round_trip(p):
    assert poly_from_json(json.loads(dumps(poly_to_json(p)))) == p


def test_factored_form_preferred():
    p = from_roots([(0.5, 2)], 3)
    doc = json.loads(dumps(poly_to_json(p)))
    back = poly_from_json(doc)
    assert back.roots == ((0.5, 2),)
    assert poly_from_json([1, [0, 2]]) == Poly([1, 2j])
    assert poly_from_json(4) == Poly([4])


@given(separated_roots(n_max=3, bands=("inside", "circle", "outside")),
       separated_roots(n_max=3, bands=("inside", "circle", "outside")))
def test_factor_document_reanalyzes(zs, ps):
    omega = normalize(from_roots(zs, 2j), from_roots(ps))
    doc = json.loads(dumps(factorization_to_json(factorize(omega))))
    back = symbol_from_json(doc)
    assert allclose(back, omega, 1e-9)
    a, b = report_to_json(analyze(back)), report_to_json(analyze(omega))
    for key in ("fredholm", "index", "dim_kernel", "codim_range", "invertible", "kappa"):
        assert a[key] == b[key]
    for census in ("zeros", "poles"):
        assert a[census]["counts"] == b[census]["counts"]


def test_dumps_deterministic():
    omega = symbol_from_json({"num": [1, 2], "den": {"roots": [[[1, 0], 1]]}})
    assert dumps(symbol_to_json(omega)) == dumps(symbol_to_json(omega))
    assert "-0.0" not in dumps({"x": complex_to_json(complex(-0.0, -0.0))})
