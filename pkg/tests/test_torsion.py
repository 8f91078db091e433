import pytest

from neronlab.algebra import GF, INFINITY, ZERO, RatFunc, parse_ratfunc, valuation
from neronlab.torsion import (
    NonMinimalError, NotInE1Error, criterion_report, hasse_invariant, is_supersingular_j, j_in_pth_powers,
    osculation_number, representative_curve, special_form_2, special_form_3, specialize, supersingular_j_values,
)
from neronlab.weierstrass import CurvePoint, frobenius_pullback


def count_points(p, a4, a6):
    """#E(F_p) for y^2 = x^3 + a4 x + a6 by brute force."""
    sq = [0] * p
    for y in range(p):
        sq[y * y % p] += 1
    return 1 + sum(sq[(x ** 3 + a4 * x + a6) % p] for x in range(p))


def j_of(p, a4, a6):
    num = 1728 * 4 * a4 ** 3
    den = 4 * a4 ** 3 + 27 * a6 ** 2
    return num * pow(den, -1, p) % p


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19])
def test_supersingular_values_by_point_counting(p):
    oracle = set()
    for a4 in range(p):
        for a6 in range(p):
            if (4 * a4 ** 3 + 27 * a6 ** 2) % p == 0:
                continue
            if count_points(p, a4, a6) % p == 1:
                oracle.add(j_of(p, a4, a6))
    assert set(supersingular_j_values(GF(p))) == oracle


def test_small_characteristic_supersingular():
    assert supersingular_j_values(GF(2)) == [0]
    assert supersingular_j_values(GF(3)) == [0]


@pytest.mark.parametrize("p,j0", [(5, 3), (7, 2), (13, 5), (17, 8)])
def test_representative_curve(p, j0):
    E = representative_curve(j0, GF(p))
    assert E.j == RatFunc.const(GF(p), j0)


def test_hasse_invariant_vanishing(curve):
    # the versal j = 0 family at p = 5 and 11
    for p in (5, 11):
        h = hasse_invariant(curve(p, f"[0,0,0,t^{p - 1},1]"))
        assert h.vanishing_order == p - 1
    assert hasse_invariant(curve(2, "[t^3,0,0,0,1]")).vanishing_order == 3
    assert hasse_invariant(curve(3, "[1,0,0,0,1/t]"), INFINITY).vanishing_order == 0


def test_special_form_3(curve):
    E = curve(3, "[t,0,t^2,0,0]")
    rep = special_form_3(E)
    assert rep.order == 3 and rep.nonzero_in_phi
    assert not special_form_3(curve(3, "[t,0,1,0,0]")).nonzero_in_phi
    assert special_form_3(curve(3, "[t,0,0,0,-t^5]")) is None
    with pytest.raises(NonMinimalError):
        special_form_3(curve(3, "[t^2,0,t^4,0,0]").transform(RatFunc.t(GF(3)) ** -1))


def test_special_form_2(curve):
    rep = special_form_2(curve(2, "[t,t,0,t^2,0]"))
    assert rep.order == 2 and rep.nonzero_in_phi
    assert not special_form_2(curve(2, "[t,0,0,1+t^2,0]")).nonzero_in_phi


def test_specialize_agrees_with_criteria(curve):
    F = GF(2)
    P = lambda s: parse_ratfunc(s, F)  # noqa: E731
    for n in (2, 3, 4):
        for lit, pt, nonzero in [
            (f"[t^{n - 1},t,0,t^{n},0]", ("0", "0"), True),
            (f"[t^{n - 1},t,t^{n},0,0]", ("t", "0"), True),
            (f"[t^{n},t,t^{n}*(1+t),0,0]", ("1+t", "1+t"), False),
            (f"[t^{n},0,0,1+t^2,0]", ("0", "0"), False),
        ]:
            E = curve(2, lit)
            Q = CurvePoint(P(pt[0]), P(pt[1]))
            assert specialize(E, Q).nonzero_in_phi is nonzero
            assert criterion_report(E, Q).nonzero_in_phi is nonzero


def test_specialize_at_infinity(curve):
    F = GF(2)
    E = frobenius_pullback(curve(2, "[1,t,0,0,1/t]"))
    Q = CurvePoint(RatFunc.const(F, 0), parse_ratfunc("1/t", F))
    assert specialize(E, Q, INFINITY).nonzero_in_phi
    assert criterion_report(E, Q, INFINITY).nonzero_in_phi


def test_osculation_number(curve):
    F = GF(5)
    t = RatFunc.t(F)
    E = curve(5, "[0,0,0,1,4*t^2]")
    # (t^-3 + 3t)^2 = t^-6 + t^-2 + 4t^2, so (t^-2, t^-3 + 3t) lies on E
    P = CurvePoint(t ** -2, t ** -3 + t * 3)
    assert E.contains(P)
    assert osculation_number(E, P) == 1
    with pytest.raises(NotInE1Error):
        osculation_number(E, CurvePoint(RatFunc.const(F, 0), t * 2))


def test_j_in_pth_powers(curve):
    assert j_in_pth_powers(curve(3, "[t,0,0,0,-t^3]"))
    assert not j_in_pth_powers(curve(3, "[t,0,0,0,-t^5]"))
