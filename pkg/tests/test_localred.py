import pytest

from neronlab.algebra import GF, INFINITY, ZERO, Place, RatFunc, parse_ratfunc
from neronlab.localred import (
    K, POTENTIALLY_MULTIPLICATIVE, POTENTIALLY_ORDINARY, POTENTIALLY_SUPERSINGULAR, KodairaSymbol,
    is_integral, is_minimal, ogg_consistency, potential_reduction, tate_reduce,
)
from neronlab.weierstrass import SingularCurveError, base_change


@pytest.mark.parametrize("text,m,phi,eps", [
    ("I0", 1, 1, 0), ("I1", 1, 1, 1), ("I7", 7, 7, 1), ("II", 1, 1, 2), ("III", 2, 2, 2), ("IV", 3, 3, 2),
    ("I0*", 5, 4, 2), ("I3*", 8, 4, 2), ("IV*", 7, 3, 2), ("III*", 8, 2, 2), ("II*", 9, 1, 2),
])
def test_kodaira_table(text, m, phi, eps):
    k = K(text)
    assert (k.components, k.phi_order, k.epsilon) == (m, phi, eps)
    assert str(k) == text and K(str(k)) == k


def test_kodaira_parse_variants():
    assert K("I_3^*") == KodairaSymbol("I*", 3)
    assert K("I2*").phi_structure == "Z/2xZ/2" and K("I1*").phi_structure == "Z/4"
    with pytest.raises(ValueError):
        K("V")


@pytest.mark.parametrize("p,lit,kind,nu,delta", [
    (3, "[t,0,0,0,-t^5]", "II*", 11, 1),
    (5, "[0,0,0,t^2,t^2]", "IV", 4, 0),
    (7, "[0,0,0,t^2,t^2]", "IV", 4, 0),
    (3, "[t^2,0,t^4,0,0]", "IV", 6, 2),
    (5, "[0,0,0,t,0]", "III", 3, 0),
    (5, "[0,0,0,-3,2+t^4]", "I4", 4, 0),
    (7, "[0,0,0,-3*t^2,(2+t^3)*t^3]", "I3*", 9, 0),
    (2, "[t,0,0,0,t^5]", "II*", 11, 1),
    (2, "[1,0,0,0,t]", "I1", 1, 0),
])
def test_known_reductions(curve, p, lit, kind, nu, delta):
    rd = tate_reduce(curve(p, lit))
    assert (str(rd.kodaira), rd.nu_delta, rd.delta) == (kind, nu, delta)
    assert ogg_consistency(rd)
    assert rd.ext_degree == 1
    assert is_minimal(rd.minimal_eq)


def test_minimality(curve):
    assert is_minimal(curve(3, "[t,0,0,0,-t^5]"))
    E = curve(5, "[0,0,0,t^4,t^6]")
    assert not is_minimal(E)
    rd = tate_reduce(E)
    assert rd.restarts == 1 and rd.nu_delta == 0 and str(rd.kodaira) == "I0"
    assert is_minimal(curve(7, "[0,0,0,1,1]"))


def test_rescaled_input_counts_restarts(curve):
    base = curve(3, "[t,0,0,0,-t^5]")
    F = base.F
    t = RatFunc.t(F)
    for k in (1, 2):
        E = base.transform(t ** -k)  # a_i -> t^(i k) a_i
        rd = tate_reduce(E)
        assert rd.restarts == k
        assert rd.summary() == tate_reduce(base).summary()


def test_poles_are_cleared(curve):
    E = curve(2, "[1,0,0,0,1/t]")
    rd = tate_reduce(E)
    assert is_integral(rd.minimal_eq) and str(rd.kodaira) == "II*"


def test_places_agree_with_moved_curves(curve):
    # reducing at t = c equals reducing the curve pulled back along t -> t + c at 0
    E = curve(5, "[0,0,0,(t-2)^2,(t-2)^2]")
    at2 = tate_reduce(E, Place.finite(2))
    moved = base_change(E, parse_ratfunc("t+2", E.F))
    assert at2.summary() == tate_reduce(moved, ZERO).summary() == ("IV", 4, 0)
    # infinity via t -> 1/t
    E = curve(2, "[1,t^3,0,0,1/t]")
    inf = tate_reduce(E, INFINITY)
    flipped = base_change(E, parse_ratfunc("1/t", E.F))
    assert inf.summary() == tate_reduce(flipped, ZERO).summary()


def test_singular_input(curve):
    F = GF(5)
    from neronlab.weierstrass import WeierstrassEq
    E = WeierstrassEq.from_coeffs([RatFunc.const(F, 0)] * 5, F, allow_singular=True)
    with pytest.raises(SingularCurveError):
        tate_reduce(E)


def test_potential_reduction(curve):
    assert potential_reduction(curve(5, "[1,0,0,-36*t/(1-1728*t),-t/(1-1728*t)]")) == POTENTIALLY_MULTIPLICATIVE
    assert potential_reduction(curve(5, "[0,0,0,t,1]")) == POTENTIALLY_SUPERSINGULAR  # j -> 0
    assert potential_reduction(curve(5, "[0,0,0,1,t]")) == POTENTIALLY_ORDINARY  # j -> 1728


def test_ogg_rejects_tampered_data(curve):
    from dataclasses import replace
    rd = tate_reduce(curve(3, "[t,0,0,0,-t^5]"))
    assert not ogg_consistency(replace(rd, delta=rd.delta + 1))
    assert not ogg_consistency(replace(rd, m=rd.m - 1))


def test_to_dict_keys(curve):
    d = tate_reduce(curve(3, "[t,0,0,0,-t^5]")).to_dict()
    assert set(d) == {"kodaira", "nu_delta", "m", "f", "delta", "phi", "restarts", "ext_degree", "minimal_eq"}
    assert (d["m"], d["f"], d["phi"]) == (9, 3, 1)
