from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from neronlab.algebra import (
    GF, INFINITY, ZERO, ParseError, Place, Poly, RatFunc, parse_coefficients, parse_ratfunc,
    residue_at, roots_in_field, substitute, to_local, valuation,
)
from neronlab.algebra.parse import split_equation


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 2), (5, 1), (7, 1)])
def test_field_axioms_exhaustive(p, n):
    F = GF(p, n)
    els = list(F.elements())
    assert len(els) == p ** n
    for a in els:
        assert F.add(a, F.neg(a)) == 0
        if a:
            # inverse by exhaustive search
            assert [b for b in els if F.mul(a, b) == 1] == [F.inv(a)]
        assert F.pow(a, F.q) == a
    for a, b in product(els, repeat=2):
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(a, b) == F.add(b, a)


def test_field_distributive_sample():
    F = GF(3, 2)
    els = list(F.elements())
    for a, b, c in product(els, repeat=3):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_primitive_element_generates():
    F = GF(2, 3)
    g = F.primitive_element()
    assert len({F.pow(g, k) for k in range(F.q - 1)}) == F.q - 1


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_roots_match_brute_force(p):
    F = GF(p)
    for coeffs in product(range(p), repeat=3):
        h = Poly(F, list(coeffs) + [1])
        brute = sorted(a for a in F.elements() if h(a) == 0)
        assert sorted(set(roots_in_field(h))) == brute


def test_poly_divmod_identity():
    F = GF(5)
    a = Poly(F, [1, 2, 3, 4, 1, 2])
    b = Poly(F, [3, 0, 1])
    q, r = divmod(a, b)
    assert q * b + r == a and r.deg < b.deg


def test_valuations():
    F = GF(3)
    f = parse_ratfunc("t^3*(1+t)/(t^5+t^6)", F)
    assert valuation(f, ZERO) == -2
    assert valuation(f, INFINITY) == 2
    g = parse_ratfunc("(1+t)^2", F)
    assert valuation(g, Place.finite(F.neg(1))) == 2
    assert valuation(RatFunc.const(F, 0)) == float("inf")


def test_residue_and_pole():
    F = GF(5)
    assert residue_at(parse_ratfunc("(2+t)/(1+t)", F)) == 2
    from neronlab.algebra import PoleError
    with pytest.raises(PoleError):
        residue_at(parse_ratfunc("1/t", F))


def test_substitute_identity_and_composition():
    F = GF(7)
    f = parse_ratfunc("(t^2+3)/(t+1)", F)
    assert substitute(f, RatFunc.t(F)) == f
    g = parse_ratfunc("t^2/(1+t)", F)
    h = substitute(f, g)
    # evaluation oracle at points where everything is defined
    for c in range(1, 6):
        gc = residue_at(g, Place.finite(c))
        if F.add(gc, 1) == 0:
            continue
        assert residue_at(h, Place.finite(c)) == residue_at(f, Place.finite(gc))


def test_to_local_moves_place():
    F = GF(5)
    f = parse_ratfunc("(t-2)^3*(t+1)", F)
    assert valuation(to_local(f, Place.finite(2)), ZERO) == 3
    assert valuation(to_local(f, INFINITY), ZERO) == -4


def test_parse_coefficients_and_errors():
    F = GF(3)
    c = parse_coefficients("[t,0,0,0,-t^5]", F)
    assert c[0] == RatFunc.t(F) and c[4] == -(RatFunc.t(F) ** 5)
    with pytest.raises(ParseError) as err:
        parse_coefficients("[t,0,0,t^+,1]", F)
    # the exponent may carry a sign, so the integer is missing at the comma
    assert err.value.pos == 10
    with pytest.raises(ParseError) as err:
        parse_coefficients("[t,0,0,t^,1]", F)
    assert err.value.pos == 9
    with pytest.raises(ParseError) as err:
        parse_coefficients("[t,0,0,1/0,1]", F)
    assert err.value.pos == 9
    with pytest.raises(ParseError):
        parse_coefficients("[t,0,0]", F)
    assert [off for off, _ in split_equation("[a,b,c,d,e]")] == [1, 3, 5, 7, 9]


coeff = st.integers(min_value=0, max_value=4)
polys = st.lists(coeff, min_size=1, max_size=5)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ratfunc_field_laws(a, b, c):
    F = GF(5)
    x, y, z = (RatFunc(Poly(F, v)) for v in (a, b, c))
    assert (x + y) * z == x * z + y * z
    if not y.is_zero():
        assert (x / y) * y == x
    assert x.frobenius() == x ** 5


@settings(max_examples=40, deadline=None)
@given(polys, polys)
def test_valuation_is_additive(a, b):
    F = GF(5)
    x, y = RatFunc(Poly(F, a)), RatFunc(Poly(F, b))
    if x.is_zero() or y.is_zero():
        return
    for v in (ZERO, INFINITY, Place.finite(3)):
        assert valuation(x * y, v) == valuation(x, v) + valuation(y, v)
