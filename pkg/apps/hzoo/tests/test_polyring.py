from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from hzoo.core.errors import FieldMismatchError, UsageError
from hzoo.core.polyring import (
    CoefficientField,
    GaussRational,
    I,
    NotDivisible,
    Poly,
    add,
    as_rational,
    eval_exact,
    exact_divide,
    mul,
    partial,
    power,
    re_im,
    substitute,
)
from strategies import nonzero_polys, points, polys, rationals, sympy_terms, xs

QQ_I = CoefficientField.QQ_I


#### Construction and canonical form ####


def test_zero_coefficients_are_dropped():
    p = Poly(2, {(1, 0): 0, (0, 1): Fraction(2, 4)})
    assert dict(p.terms) == {(0, 1): Fraction(1, 2)}
    assert Poly(2, {(1, 1): 0}).is_zero


def test_constructor_rejects_bad_input():
    with pytest.raises(UsageError):
        Poly(2, {(1,): 1})
    with pytest.raises(UsageError):
        Poly(2, {(-1, 0): 1})
    with pytest.raises(UsageError):
        Poly(1, {(1,): 0.5})
    with pytest.raises(FieldMismatchError):
        Poly(1, {(1,): I})


def test_as_rational():
    assert as_rational("3/6") == Fraction(1, 2)
    assert as_rational(4) == Fraction(4)
    with pytest.raises(UsageError):
        as_rational(0.25)
    with pytest.raises(UsageError):
        as_rational(True)
    with pytest.raises(UsageError):
        as_rational("1/0")


def test_gauss_rational_arithmetic():
    assert I * I == -1
    assert (1 + I) * (1 - I) == 2
    assert (1 + I) / I == GaussRational(1, -1)
    assert GaussRational(3, 4).norm() == 25
    assert hash(GaussRational(5)) == hash(Fraction(5))
    assert not GaussRational()


def test_accessors():
    x1, x2 = xs(2)
    p = x1**3 * x2 - x1 * x2**3 + 7
    assert p.degree() == 4
    assert Poly.zero(2).degree() == -1
    assert p.variables() == {0, 1}
    assert not p.is_homogeneous()
    assert (p - 7).is_homogeneous()
    assert p.coefficient((1, 3)) == -1
    assert p.coefficient((2, 2)) == 0
    assert p.leading_term() == ((3, 1), 1)
    assert Poly.constant(5, 2).is_constant()


def test_to_float_function():
    x1, x2 = xs(2)
    f = (x1**2 - x2.scale(Fraction(1, 2))).to_float_function()
    assert f((3.0, 2.0)) == pytest.approx(8.0)
    with pytest.raises(FieldMismatchError):
        x1.to_gauss().to_float_function()


#### add / mul / power ####


def test_add_examples():
    x1, x2 = xs(2)
    assert add(x1, -x1).is_zero
    assert add(x1**2 - x2**2, x2**2) == x1**2
    assert add(x1 - x2, x1 + x2) == x1.scale(2)


def test_add_rejects_mismatches():
    with pytest.raises(UsageError):
        add(Poly.variable(0, 1), Poly.variable(0, 2))
    with pytest.raises(FieldMismatchError):
        add(Poly.variable(0, 1), Poly.variable(0, 1, QQ_I))


def test_mul_examples(v3):
    x1, x2 = xs(2)
    assert mul(x1 - x2, x1 + x2) == x1**2 - x2**2
    assert mul(x1 - x2, Poly.zero(2)).is_zero
    assert len(v3) == 6
    assert {abs(c) for _, c in v3} == {1}


def test_mul_matches_sympy_expansion(v3):
    y = sympy.symbols("y1:4")
    expected = (y[0] - y[1]) * (y[0] - y[2]) * (y[1] - y[2])
    assert dict(v3.terms) == sympy_terms(expected, y)


def test_power_examples():
    x1, x2 = xs(2)
    assert power(x1 + x2, 2) == x1**2 + (x1 * x2).scale(2) + x2**2
    assert power(x1 - 3, 0) == Poly.one(2)
    with pytest.raises(UsageError):
        power(x1, -1)


@given(polys(max_terms=3, max_exp=2))
def test_power_is_repeated_multiplication(p):
    assert power(p, 5) == p * p * p * p * p


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p - p).is_zero


#### partial / substitute / eval_exact ####


def test_partial_examples():
    x1, x2 = xs(2)
    assert partial(x1**2 - x2**2, 0) == x1.scale(2)
    assert partial(x1**3, 1).is_zero
    with pytest.raises(UsageError):
        partial(x1, 2)


def test_partial_matches_central_difference(f3):
    h = 1e-4
    f = f3.to_float_function()
    df = partial(f3, 0).to_float_function()
    estimate = (f((1 + h, 2.0, 3.0)) - f((1 - h, 2.0, 3.0))) / (2 * h)
    assert estimate == pytest.approx(df((1.0, 2.0, 3.0)), rel=1e-6)


@given(polys(arity=3))
def test_partials_commute(p):
    for i in range(3):
        for j in range(3):
            assert partial(partial(p, i), j) == partial(partial(p, j), i)


def test_substitute_examples(v3):
    y1, y2 = xs(2)
    x1, x2 = xs(2)
    assert substitute(y1 - y2, {0: x1**2, 1: x2**2}) == x1**2 - x2**2
    assert substitute(Poly.one(2), {0: x1, 1: x2}) == Poly.one(2)
    squares = {i: Poly.variable(i, 3) ** 2 for i in range(3)}
    f3 = substitute(v3, squares)
    assert len(f3) == 6
    assert all(sum(e) == 6 for e, _ in f3)


def test_substitute_errors():
    x1, x2 = xs(2)
    with pytest.raises(UsageError):
        substitute(x1 * x2, {0: x1})
    with pytest.raises(FieldMismatchError):
        substitute(x1, {0: Poly.variable(0, 1, QQ_I)})


@given(polys(), polys(), polys(arity=3, max_terms=2, max_exp=2), polys(arity=3, max_terms=2, max_exp=2))
def test_substitute_is_a_homomorphism(p, q, a, b):
    bindings = {0: a, 1: b}
    assert substitute(p * q, bindings, arity=3) == substitute(p, bindings, arity=3) * substitute(q, bindings, arity=3)
    assert substitute(p + q, bindings, arity=3) == substitute(p, bindings, arity=3) + substitute(q, bindings, arity=3)


def test_eval_exact_examples(f3):
    x1, x2 = xs(2)
    f2 = x1**2 - x2**2
    assert eval_exact(f2, (Fraction(1, 2), Fraction(1, 2))) == 0
    assert eval_exact(f3, ("1/2", "1/2", 0)) == 0
    assert eval_exact(f3, (1, 2, 3)) == -120
    with pytest.raises(UsageError):
        eval_exact(f3, (1, 2))


@given(polys(), polys(), points(2))
def test_eval_exact_is_a_homomorphism(p, q, point):
    assert eval_exact(p * q, point) == eval_exact(p, point) * eval_exact(q, point)
    assert eval_exact(p + q, point) == eval_exact(p, point) + eval_exact(q, point)


@given(polys(), rationals())
def test_scale_agrees_with_evaluation(p, c):
    point = (Fraction(2, 3), Fraction(-5, 7))
    assert eval_exact(p.scale(c), point) == c * eval_exact(p, point)


#### exact_divide ####


def test_exact_divide_examples():
    x1, x2 = xs(2)
    assert exact_divide(x1**2 - x2**2, x1 - x2) == x1 + x2
    assert isinstance(exact_divide(x1**2 + x2**2, x1 - x2), NotDivisible)
    with pytest.raises(UsageError):
        exact_divide(x1, Poly.zero(2))


def test_exact_divide_quartic_quotient(phi):
    F = phi.complex_form()
    p1 = re_im(F**3)[0]
    q = exact_divide(p1, phi.phi1)
    assert isinstance(q, Poly)
    assert q.degree() == 4
    assert q * phi.phi1 == p1


@given(polys(), nonzero_polys())
def test_exact_divide_recovers_factor(p, q):
    assert exact_divide(p * q, q) == p


@given(polys(), nonzero_polys())
def test_exact_divide_is_sound(f, g):
    q = exact_divide(f, g)
    if isinstance(q, Poly):
        assert q * g == f


#### Gaussian field ####


def test_re_im_examples():
    x1, x2 = xs(2, QQ_I)
    assert re_im(Poly.variable(0, 1, QQ_I).scale(I)) == (Poly.zero(1), Poly.variable(0, 1))
    r1, r2 = xs(2)
    z = x1 + x2.scale(I)
    assert re_im(z * z) == (r1**2 - r2**2, (r1 * r2).scale(2))
    expected = r1**6 - (r1**4 * r2**2).scale(15) + (r1**2 * r2**4).scale(15) - r2**6
    assert re_im(z**6)[0] == expected


def test_to_gauss_round_trip():
    p = Poly(2, {(1, 0): Fraction(3, 2), (0, 2): -1})
    lifted = p.to_gauss()
    assert lifted.field is QQ_I
    assert re_im(lifted) == (p, Poly.zero(2))


def test_gaussian_evaluation():
    x1, x2 = xs(2, QQ_I)
    z = x1 + x2.scale(I)
    assert eval_exact(z * z, (1, 1)) == GaussRational(0, 2)
