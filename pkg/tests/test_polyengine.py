from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ogqh.errors import ArgumentOrderError, InvariantViolation
from ogqh.polyengine import (
    GenPoly,
    SymPoly,
    _divide_by_binomial,
    box_difference,
    box_reflection,
    divided_difference,
    elementary,
    elementary_generator,
    elementary_to_sym,
    elementary_to_x,
    monomial_pair,
    remove_leading_vars,
    substitute_negate_first,
    sym_to_elementary,
)

sympy = pytest.importorskip("sympy")


def x(i, n):
    return GenPoly.variable(i, n)


def polys(nvars, max_deg=4, max_terms=6):
    exps = st.tuples(*[st.integers(0, max_deg)] * nvars)
    return st.dictionaries(exps, st.integers(-20, 20), max_size=max_terms).map(
        lambda t: GenPoly(nvars, t))


def to_sympy(f: GenPoly, syms):
    out = 0
    for m, c in f.coefficients().items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(syms, m):
            term *= s ** k
        out += term
    return sympy.expand(out)


# construction and normal form ---------------------------------------------------

def test_scale_is_maximal():
    f = GenPoly(2, {(1, 0): 4, (0, 1): 12})
    assert f.scale == 2
    assert f.terms == {(1, 0): 1, (0, 1): 3}
    assert f.integer_terms() == {(1, 0): 4, (0, 1): 12}
    assert GenPoly(2, {(1, 0): 1}, -3).coefficient((1, 0)) == Fraction(1, 8)


def test_zero_terms_dropped():
    f = x(1, 2) - x(1, 2)
    assert f.is_zero() and f == GenPoly.zero(2)
    assert (x(1, 2) + x(2, 2)) * 0 == GenPoly.zero(2)


def test_constant_rejects_non_dyadic():
    assert GenPoly.constant(Fraction(3, 4), 1).coefficient((0,)) == Fraction(3, 4)
    with pytest.raises(ValueError):
        GenPoly.constant(Fraction(1, 3), 1)


def test_render_is_graded_lex_with_scale():
    f = GenPoly(2, {(0, 1): 1, (2, 0): 3, (0, 0): 5})
    assert f.render() == "3*x1^2 + x2 + 5"
    assert (f.scaled(-1)).render() == "2^-1*(3*x1^2 + x2 + 5)"
    assert GenPoly.zero(3).render() == "0"


def test_elementary_examples():
    assert elementary(0, 3) == SymPoly(3, {(): 1})
    assert elementary(1, 2).to_genpoly() == x(1, 2) + x(2, 2)
    assert elementary(4, 3).is_zero()
    assert elementary(2, 3).to_genpoly() == x(1, 3) * x(2, 3) + x(1, 3) * x(3, 3) + x(2, 3) * x(3, 3)


def test_monomial_pair():
    assert monomial_pair(1, 0) == GenPoly(2, {(1, 0): 1, (0, 1): 1})
    assert monomial_pair(2, 2) == GenPoly(2, {(2, 2): 1})
    assert monomial_pair(0, 0) == GenPoly.constant(1, 2)
    with pytest.raises(ArgumentOrderError):
        monomial_pair(0, 1)


# divided differences ---------------------------------------------------------------

def test_divided_difference_examples():
    assert divided_difference(1, x(1, 2)) == GenPoly.constant(-1, 2)
    assert divided_difference(1, elementary(2, 3).to_genpoly()).is_zero()
    f = GenPoly.monomial((0, 2, 1))
    x1, x2, x3 = sympy.symbols("x1 x2 x3")
    g = to_sympy(f, (x1, x2, x3))
    want = sympy.cancel((g - g.subs({x2: x3, x3: x2}, simultaneous=True)) / (x3 - x2))
    assert to_sympy(divided_difference(2, f), (x1, x2, x3)) == sympy.expand(want)
    assert divided_difference(2, f) == -GenPoly.monomial((0, 1, 1))


def test_box_difference_examples():
    assert box_difference(x(1, 2)) == GenPoly.constant(1, 2)
    assert box_difference(GenPoly.constant(7, 3)).is_zero()
    x1x2 = GenPoly.monomial((1, 1))
    assert box_reflection(x1x2) == x1x2
    assert box_difference(x1x2).is_zero()


def test_inexact_division_raises():
    with pytest.raises(InvariantViolation):
        _divide_by_binomial(GenPoly.monomial((1, 0)), 1, 0, 1)


@settings(max_examples=60, deadline=None)
@given(polys(3))
def test_divided_difference_matches_sympy(f):
    syms = sympy.symbols("x1 x2 x3")
    g = to_sympy(f, syms)
    for i in (1, 2):
        a, b = syms[i - 1], syms[i]
        swapped = g.subs({a: b, b: a}, simultaneous=True)
        want = sympy.expand(sympy.cancel((g - swapped) / (b - a)))
        assert to_sympy(divided_difference(i, f), syms) == want
    x1, x2 = syms[:2]
    refl = g.subs({x1: -x2, x2: -x1}, simultaneous=True)
    want = sympy.expand(sympy.cancel((g - refl) / (x1 + x2)))
    assert to_sympy(box_difference(f), syms) == want


@settings(max_examples=60, deadline=None)
@given(polys(3))
def test_nilpotence(f):
    assert divided_difference(1, divided_difference(1, f)).is_zero()
    assert divided_difference(2, divided_difference(2, f)).is_zero()
    assert box_difference(box_difference(f)).is_zero()


def test_symmetric_input_is_killed():
    for n in (2, 3, 4):
        for i in range(n + 1):
            e = elementary(i, n).to_genpoly()
            for j in range(1, n):
                assert divided_difference(j, e).is_zero()


# ring axioms -------------------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(polys(2), polys(2), polys(2))
def test_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert f + g - g == f


@settings(max_examples=40, deadline=None)
@given(polys(2), st.integers(-3, 3))
def test_scale_roundtrip(f, s):
    assert f.scaled(s).scaled(-s) == f
    assert f.scaled(1) == 2 * f


# substitutions ------------------------------------------------------------------------

def test_negate_first():
    assert substitute_negate_first(x(1, 2) + x(2, 2)) == -x(1, 2) + x(2, 2)
    assert substitute_negate_first(elementary(2, 2).to_genpoly()) == -GenPoly.monomial((1, 1))


def test_remove_leading_vars():
    parts = remove_leading_vars(elementary(1, 3).to_genpoly(), 1)
    assert parts == {(0,): elementary(1, 2).to_genpoly(), (1,): GenPoly.constant(1, 2)}
    assert remove_leading_vars(x(2, 3), 0) == {(): x(2, 3)}


# symmetric polynomials -------------------------------------------------------------------

def test_sympoly_roundtrip():
    f = (elementary(1, 3) * elementary(2, 3)).to_genpoly()
    assert SymPoly.from_genpoly(f).to_genpoly() == f


def test_sympoly_rejects_asymmetric():
    with pytest.raises(ValueError, match="not symmetric"):
        SymPoly.from_genpoly(x(1, 2))


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(st.tuples(*[st.integers(0, 3)] * 3), st.integers(-9, 9), max_size=5))
def test_elementary_coordinates_roundtrip(terms):
    g = GenPoly(3, terms)
    sym = elementary_to_sym(g, 3)
    assert SymPoly.from_genpoly(elementary_to_x(g, 3)) == sym
    assert sym_to_elementary(sym) == g


def test_elementary_generator_vanishes_above_n():
    assert elementary_generator(3, 2).is_zero()
    assert elementary_generator(0, 2) == GenPoly.constant(1, 2)
