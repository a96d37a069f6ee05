from fractions import Fraction

import pytest
from hypothesis import given, settings

from hzoo.constructions.polynomials import h_d, squares, vandermonde
from hzoo.core.diffops import (
    ExpPoly,
    dir_derivative,
    exp_laplacian,
    gradient,
    konig_apply,
    laplacian,
)
from hzoo.core.errors import UsageError
from hzoo.core.polyring import Poly, partial, substitute
from strategies import polys, rationals, xs


def test_laplacian_examples(f3):
    x1, x2 = xs(2)
    assert laplacian(x1**2 - x2**2).is_zero
    assert laplacian(f3).is_zero
    assert laplacian(x1**2 + x2**2) == Poly.constant(4, 2)


def test_gradient_examples():
    x1, x2 = xs(2)
    assert gradient(x1**2 - x2**2) == [x1.scale(2), x2.scale(-2)]
    assert all(g.is_zero for g in gradient(Poly.constant(3, 2)))


def test_gradient_matches_finite_differences(f3):
    h = 1e-4
    f = f3.to_float_function()
    point = [1.0, 2.0, 3.0]
    for i, g in enumerate(gradient(f3)):
        up, down = list(point), list(point)
        up[i] += h
        down[i] -= h
        estimate = (f(up) - f(down)) / (2 * h)
        assert estimate == pytest.approx(g.to_float_function()(point), rel=1e-6, abs=1e-6)


def test_dir_derivative_examples(v3):
    x1, _ = xs(2)
    assert dir_derivative(v3, (1, 1, 1)).is_zero
    assert dir_derivative(x1, (1, 0)) == Poly.one(2)
    assert dir_derivative(x1**3, (0, 0)).is_zero
    with pytest.raises(UsageError):
        dir_derivative(x1, (1,))


@pytest.mark.parametrize("d", range(2, 7))
def test_dir_derivative_of_vandermonde_along_diagonal(d):
    assert dir_derivative(vandermonde(d), (1,) * d).is_zero


def _konig_eigenvalue(d):
    return Fraction(d * (d - 1) * (d - 2), 3)


@pytest.mark.parametrize("d", range(2, 7))
def test_konig_scales_vandermonde_at_half(d):
    v = vandermonde(d)
    assert konig_apply(v, 0, 0, Fraction(1, 2)) == v.scale(_konig_eigenvalue(d))


def test_konig_examples():
    assert konig_apply(vandermonde(2), 3, -1, 7).is_zero
    v = vandermonde(3)
    assert konig_apply(v, 0, 0, Fraction(1, 2)) == v + v


@settings(max_examples=20)
@given(rationals(), rationals(), rationals())
def test_konig_on_vandermonde_ignores_the_triple(a, b, c):
    for d in range(2, 7):
        v = vandermonde(d)
        result = konig_apply(v, a, b, c)
        assert result == konig_apply(v, 0, 0, 0)
        assert result == v.scale(_konig_eigenvalue(d))


def test_konig_on_constant():
    assert konig_apply(Poly.one(3), 2, -1, 5).is_zero


@given(polys(), rationals())
def test_konig_decomposition(p, c):
    second_order = konig_apply(p, 0, 0, 0)
    ys = xs(2)
    expected = sum((y * y * partial(partial(p, i), i) for i, y in enumerate(ys)), Poly.zero(2))
    assert second_order == expected
    first_order = sum((partial(p, i) for i in range(2)), Poly.zero(2)).scale(c)
    assert konig_apply(p, 0, 0, c) - second_order == first_order


@given(polys(), polys(), rationals(), rationals())
def test_laplacian_is_linear(p, q, alpha, beta):
    lhs = laplacian(p.scale(alpha) + q.scale(beta))
    assert lhs == laplacian(p).scale(alpha) + laplacian(q).scale(beta)


@given(polys(arity=3, max_terms=3), polys(arity=3, max_terms=3))
def test_laplacian_product_rule(p, q):
    cross = sum((a * b for a, b in zip(gradient(p), gradient(q))), Poly.zero(3))
    assert laplacian(p * q) == p * laplacian(q) + q * laplacian(p) + cross.scale(2)


@pytest.mark.parametrize("d", range(2, 6))
def test_chain_rule_through_squares(d):
    v = vandermonde(d)
    ys = xs(d)
    inner = sum((y * partial(partial(v, i), i) for i, y in enumerate(ys)), Poly.zero(d)).scale(4)
    inner = inner + sum((partial(v, i) for i in range(d)), Poly.zero(d)).scale(2)
    assert laplacian(substitute(v, squares(d))) == substitute(inner, squares(d))


def test_exp_laplacian_examples(v3):
    one = ExpPoly((1, 1), Poly.one(2))
    assert exp_laplacian(one).body == Poly.constant(2, 2)
    assert exp_laplacian(h_d(3)).body == v3.scale(3)
    x1, x2 = xs(2)
    p = x1**3 * x2
    assert exp_laplacian(ExpPoly((0, 0), p)).body == laplacian(p)


@given(polys(arity=3))
def test_exp_laplacian_with_zero_weight_is_laplacian(p):
    assert exp_laplacian(ExpPoly((0, 0, 0), p)) == ExpPoly((0, 0, 0), laplacian(p))


@pytest.mark.parametrize("d", range(2, 7))
def test_h_d_eigenvalue(d):
    h = h_d(d)
    assert exp_laplacian(h).body == h.body.scale(d)


def test_exp_poly_validation():
    with pytest.raises(UsageError):
        ExpPoly((1, 1, 1), Poly.one(2))
    assert ExpPoly(("1/2", 0), Poly.zero(2)).is_zero
