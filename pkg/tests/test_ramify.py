from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neronlab.ramify import (
    NonIntegralSwanError, NotSubgroupError, RamFiltration, artin_schreier_quadratic_breaks, change_of_group_table,
    character_swan, closure, conjugacy_classes_of_subgroups, fixed_dim, general_delta_three_orders,
    general_delta_two_orders, gl2f2_delta_one, hasse_herbrand_phi, mat_mul, quadratic_uniformizer_exponent,
    scale_delta, sl2f3_delta_one, sl2f3_subgroups, subgroup_swan, swan_delta, swan_from_orders, uniformizer_exponents,
    upper_breaks,
)


def rank_mod(rows, l):
    rows = [list(r) for r in rows]
    rank, col = 0, 0
    while rows and col < 2:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] % l), None)
        if piv is not None:
            rows[rank], rows[piv] = rows[piv], rows[rank]
            inv = pow(rows[rank][col], -1, l)
            for i in range(len(rows)):
                if i != rank and rows[i][col] % l:
                    f = rows[i][col] * inv
                    rows[i] = [(x - f * y) % l for x, y in zip(rows[i], rows[rank])]
            rank += 1
        col += 1
    return rank


def oracle_codim(H, l):
    # codim of the fixed space = rank of the stacked h - 1
    rows = []
    for a, b, c, d in H:
        rows += [(a - 1, b), (c, d - 1)]
    return rank_mod(rows, l)


def oracle_swan(G):
    total = sum(Fraction(oracle_codim(G.G(i), G.l) * len(G.G(i)), G.order)
                for i in range(1, len(G.filtration) + 1))
    assert total.denominator == 1
    return int(total)


def test_group_orders():
    assert sl2f3_delta_one().order == 24
    assert gl2f2_delta_one().order == 6
    assert sl2f3_delta_one().orders() == (24, 8, 2, 2)
    assert gl2f2_delta_one().orders() == (6, 3)


def test_filtration_is_normal_chain():
    G = sl2f3_delta_one()
    for i in range(1, 4):
        H = G.G(i)
        assert G.is_subgroup(H)
        assert all(G.conjugate(H, g) == H for g in G.elements)
        assert G.G(i + 1) <= H


@pytest.mark.parametrize("l", [2, 3, 5])
def test_fixed_dim_brute_force(l):
    mats = [m for m in product(range(l), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % l]
    for A, B in list(combinations(mats, 2))[:200]:
        assert fixed_dim([A, B], l) == 2 - oracle_codim([A, B], l)


def test_swan_examples():
    assert swan_delta(sl2f3_delta_one()) == 1 == oracle_swan(sl2f3_delta_one())
    assert swan_delta(gl2f2_delta_one()) == 1 == oracle_swan(gl2f2_delta_one())
    assert swan_from_orders([3], []) == 0


def test_change_of_group_table():
    table = change_of_group_table()
    assert table == {"SL2F3": 1, "C6": 2, "Q": 3, "C4": 4, "C3": 0, "C2": 6, "1": 0}
    G = sl2f3_delta_one()
    for name, H in sl2f3_subgroups().items():
        assert table[name] == oracle_swan(G.restrict(H))


def test_subgroup_errors():
    G = sl2f3_delta_one()
    with pytest.raises(NotSubgroupError):
        subgroup_swan(G, [(1, 1, 0, 1)])
    with pytest.raises(NonIntegralSwanError):
        character_swan(RamFiltration((4, 2)))


def test_subgroup_classes():
    classes = conjugacy_classes_of_subgroups(sl2f3_delta_one())
    sizes = sorted((len(c[0]), len(c)) for c in classes)
    assert sizes == [(1, 1), (2, 1), (3, 4), (4, 3), (6, 4), (8, 1), (24, 1)]
    # independent enumeration: closures of all generator sets of size <= 3 hit the same 15 subgroups
    G = sl2f3_delta_one()
    elems = sorted(G.elements)
    subs = {closure(c, 3) for k in (1, 2) for c in combinations(elems, k)}
    subs |= {closure(c, 3) for c in combinations(elems[:12], 3)}
    assert len(subs) == sum(len(c) for c in classes) == 15


def test_general_families():
    for s in (1, 2, 3):
        assert swan_from_orders(*general_delta_two_orders(s)) == 1
    for g in (6, 12, 18, 30):
        assert swan_from_orders(*general_delta_three_orders(g)) == 1
    with pytest.raises(ValueError):
        general_delta_three_orders(8)


def test_phi_examples():
    assert hasse_herbrand_phi((24, 8, 2, 2), 1) == Fraction(1, 3)
    assert hasse_herbrand_phi((24, 8, 2, 2), 0) == 0
    assert hasse_herbrand_phi((2, 2), 2) == Fraction(3, 2)
    assert upper_breaks((4, 4, 2, 2)) == [1, 2]
    # lower breaks 0, 1, 3: phi(1) = 8/24, phi(3) = 8/24 + 2/24 + 2/24
    assert upper_breaks((24, 8, 2, 2)) == [0, Fraction(1, 3), Fraction(1, 2)]
    with pytest.raises(ValueError):
        hasse_herbrand_phi((2, 2), -1)


def test_filtration_validation():
    for bad in [(), (2, 4), (6, 4), (0,)]:
        with pytest.raises(ValueError):
            RamFiltration(bad)


def test_scale_delta():
    assert scale_delta(1, 5, 3) == 5
    assert scale_delta(1, 2, 2, inseparable=True) == 1
    with pytest.raises(ValueError):
        scale_delta(1, 2, 2)


def test_artin_schreier():
    assert artin_schreier_quadratic_breaks(1).orders == (2, 2)
    assert artin_schreier_quadratic_breaks(2).orders == (2, 2, 2, 2)
    # single lower break 2n - 1, so Swan = 2n - 1
    assert character_swan(artin_schreier_quadratic_breaks(1)) == 1
    assert character_swan(artin_schreier_quadratic_breaks(2)) == 3


def test_uniformizer_exponents():
    G = sl2f3_delta_one()
    S = sl2f3_subgroups()
    # C_2 keeps break 3 -> n = 2; C_4 / C_2 keeps only the break at 1 -> n = 1
    assert quadratic_uniformizer_exponent(G.restrict(S["C2"]), S["1"]) == 2
    assert quadratic_uniformizer_exponent(G.restrict(S["C4"]), S["C2"]) == 1
    assert uniformizer_exponents(G) == {(2, 1): {2}, (4, 2): {1}, (6, 3): {1}, (8, 4): {1}}
    with pytest.raises(NotSubgroupError):
        quadratic_uniformizer_exponent(G, S["C2"])


def test_mat_mul_associative():
    G = sorted(sl2f3_delta_one().elements)
    for A, B, C in list(combinations(G, 3))[:300]:
        assert mat_mul(mat_mul(A, B, 3), C, 3) == mat_mul(A, mat_mul(B, C, 3), 3)


@st.composite
def filtrations(draw):
    p = draw(st.sampled_from([2, 3, 5]))
    k = draw(st.integers(0, 4))
    g0 = p ** k * draw(st.sampled_from([1, 2, 3, 4, 6]))
    orders, cur = [g0, p ** k], k
    for _ in range(draw(st.integers(0, 6))):
        cur = max(0, cur - draw(st.integers(0, 1)))
        orders.append(p ** cur)
    return RamFiltration(tuple(orders))


@settings(max_examples=100, deadline=None)
@given(filtrations(), st.fractions(min_value=0, max_value=12, max_denominator=6))
def test_phi_shape(fil, x):
    phi = hasse_herbrand_phi(fil, x)
    assert 0 <= phi <= x
    n = int(x)
    # slope on (n, n + 1) is g_{n+1} / g_0
    h = Fraction(1, 7) * (n + 1 - x)
    if h:
        assert hasse_herbrand_phi(fil, x + h) - phi == h * Fraction(fil.g(n + 1), fil.g(0))
    assert hasse_herbrand_phi(fil, n) == sum(Fraction(fil.g(i), fil.g(0)) for i in range(1, n + 1))
