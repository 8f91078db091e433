import re

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from neronlab.algebra import GF, RatFunc, ZERO, valuation
from neronlab.localred import is_minimal, tate_reduce
from neronlab.paperlab import properties
from neronlab.weierstrass import WeierstrassEq

# components and |Phi| per Kodaira symbol, written out independently of localred
ADDITIVE = {"II": (1, 1), "III": (2, 2), "IV": (3, 3), "IV*": (7, 3), "III*": (8, 2), "II*": (9, 1)}


def table_values(sym: str):
    if sym in ADDITIVE:
        return 2, ADDITIVE[sym]
    n = int(re.fullmatch(r"I(\d+)\*?", sym).group(1))
    if sym.endswith("*"):
        return 2, (n + 5, 4)
    return (0 if n == 0 else 1), (max(n, 1), n if n else 1)


def poly(F, coeffs):
    t = RatFunc.t(F)
    out = RatFunc.const(F, 0)
    for i, c in enumerate(coeffs):
        out = out + RatFunc.const(F, c) * t ** i
    return out


@st.composite
def curves(draw, primes=(2, 3, 5, 7)):
    p = draw(st.sampled_from(primes))
    F = GF(p)
    cs = [draw(st.lists(st.integers(0, p - 1), min_size=1, max_size=4)) for _ in range(5)]
    E = WeierstrassEq(*(poly(F, c) for c in cs))
    assume(not E.discriminant().is_zero())
    return E


@settings(max_examples=150, deadline=None)
@given(curves())
def test_ogg_and_component_tables(E):
    rd = tate_reduce(E, ZERO)
    eps, (m, phi) = table_values(str(rd.kodaira))
    assert (rd.epsilon, rd.m, rd.phi_order) == (eps, m, phi)
    assert rd.nu_delta == eps + rd.delta + m - 1
    if E.char >= 5:
        assert rd.delta == 0
    M = rd.minimal_eq
    assert valuation(M.discriminant(), ZERO) == rd.nu_delta
    assert is_minimal(M, ZERO)


@settings(max_examples=80, deadline=None)
@given(curves(), st.integers(0, 2), st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
def test_reduction_invariant_under_coordinate_change(E, k, r0, s0, w0):
    F = E.F
    t = RatFunc.t(F)
    u = t ** k
    r, s, w = (RatFunc.const(F, c % F.p) * t for c in (r0, s0, w0))
    E2 = E.transform(u, r, s, w)
    a, b = tate_reduce(E, ZERO), tate_reduce(E2, ZERO)
    assert (str(a.kodaira), a.nu_delta, a.delta) == (str(b.kodaira), b.nu_delta, b.delta)
    assert E2.discriminant() == E.discriminant() / u ** 12


@pytest.mark.parametrize("seed", [0, 1, 7])
@pytest.mark.parametrize("name", sorted(properties.SUITES))
def test_property_suites(name, seed):
    res = properties.SUITES[name](seed, 10)
    assert res.ok, res.failures[:3]
    assert res.trials >= 10
