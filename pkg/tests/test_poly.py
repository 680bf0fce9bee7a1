"""Complex polynomial arithmetic and certified disc bounds."""
from __future__ import annotations

import cmath

import numpy as np
import pytest
from hypothesis import given, strategies as st

from simapprox import (
    Disc,
    Poly,
    ZERO,
    add,
    degree,
    eval_on_array,
    evaluate,
    poly,
    scale,
    shift_argument,
    sub,
    sup_bound_on_disc,
    sup_sample_on_disc,
    taylor_split,
)

_coeff = st.complex_numbers(max_magnitude=10.0, allow_nan=False, allow_infinity=False)
_polys = st.lists(_coeff, min_size=0, max_size=8).map(poly)
_points = st.complex_numbers(max_magnitude=5.0, allow_nan=False, allow_infinity=False)


def test_constructor_trims_trailing_zeros():
    assert poly([1.0, 2.0, 0.0, 0.0]).coeffs == (1.0 + 0j, 2.0 + 0j)
    assert poly([0.0]) == ZERO
    assert poly([]) == ZERO


def test_raw_poly_rejects_untrimmed():
    with pytest.raises(ValueError):
        Poly((1 + 0j, 0j))


def test_degree():
    assert degree(ZERO) == -1
    assert degree(poly([3.0])) == 0
    assert degree(poly([0.0, 1.0])) == 1


def test_evaluate_oracle():
    # z^2 + 1 at 2i
    assert evaluate(poly([1.0, 0.0, 1.0]), 2j) == pytest.approx(-3.0)


def test_eval_on_array_matches_scalar():
    p = poly([1.0, -2.0, 0.5j])
    zs = np.array([0j, 1 + 1j, -3.0 + 0j, 2j])
    out = eval_on_array(p, zs)
    for z, w in zip(zs, out):
        assert cmath.isclose(w, evaluate(p, complex(z)), rel_tol=1e-12, abs_tol=1e-12)


@given(_polys, _polys, _points)
def test_ring_ops_pointwise(p, q, z):
    assert cmath.isclose(
        evaluate(add(p, q), z), evaluate(p, z) + evaluate(q, z), rel_tol=1e-9, abs_tol=1e-6
    )
    assert cmath.isclose(
        evaluate(sub(p, q), z), evaluate(p, z) - evaluate(q, z), rel_tol=1e-9, abs_tol=1e-6
    )
    assert cmath.isclose(
        evaluate(scale(p, 2.5j), z), 2.5j * evaluate(p, z), rel_tol=1e-9, abs_tol=1e-6
    )


def test_taylor_split_oracle():
    # z^2 = 1 + 2(z-1) + (z-1)^2
    jets, rest = taylor_split(poly([0.0, 0.0, 1.0]), 1.0, 2)
    assert jets == pytest.approx([1.0, 2.0])
    assert rest.coeffs == pytest.approx((1.0,))


def test_taylor_split_of_short_polynomial_pads():
    jets, rest = taylor_split(poly([5.0]), 2.0, 3)
    assert jets == pytest.approx([5.0, 0.0, 0.0])
    assert rest == ZERO


@given(_polys, _points, st.integers(1, 6), _points)
def test_taylor_split_reconstructs(p, c, d, z):
    jets, rest = taylor_split(p, c, d)
    w = z - c
    total = sum(a * w**i for i, a in enumerate(jets)) + w**d * evaluate(rest, z)
    assert cmath.isclose(total, evaluate(p, z), rel_tol=1e-7, abs_tol=1e-4)


def test_shift_argument_oracle():
    # (z+1)^2 = 1 + 2z + z^2
    assert shift_argument(poly([0.0, 0.0, 1.0]), 1.0).coeffs == pytest.approx((1.0, 2.0, 1.0))


@given(_polys, _points, _points)
def test_shift_argument_pointwise(p, a, z):
    assert cmath.isclose(
        evaluate(shift_argument(p, a), z), evaluate(p, z + a), rel_tol=1e-7, abs_tol=1e-4
    )


def test_sup_bound_oracles():
    infl = 1.0 + 1e-9
    assert sup_bound_on_disc(poly([0.0, 1.0]), Disc(0j, 1.0)) == pytest.approx(infl)
    assert sup_bound_on_disc(poly([0.0, 0.0, 1.0]), Disc(0j, 2.0)) == pytest.approx(4.0 * infl)
    assert sup_bound_on_disc(poly([1.0, 0.0, 1.0]), Disc(0j, 2.0)) == pytest.approx(5.0 * infl)
    assert sup_bound_on_disc(ZERO, Disc(3j, 7.0)) == 0.0


@given(_polys, _points, st.floats(0.1, 4.0), st.integers(8, 64))
def test_certified_bound_dominates_samples(p, c, r, n):
    d = Disc(c, r)
    assert sup_sample_on_disc(p, d, n) <= sup_bound_on_disc(p, d) + 1e-12
