"""Swan conductors of explicit ramification filtrations.

delta(V) = sum_{i >= 1} dim(V / V^{G_i}) / [G : G_i]

evaluated exactly, either on a concrete filtration by subgroups of
SL(2, F_3) or GL(2, F_2) acting on V = F_l^2, or on a bare list of
group orders together with the codimensions dim V / V^{G_i}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

Matrix = tuple  # (a, b, c, d) for [[a, b], [c, d]] over F_l


class NonIntegralSwanError(ArithmeticError):
    pass


class NotSubgroupError(ValueError):
    pass


def mat_mul(A: Matrix, B: Matrix, l: int) -> Matrix:
    a, b, c, d = A
    e, f, g, h = B
    return ((a * e + b * g) % l, (a * f + b * h) % l, (c * e + d * g) % l, (c * f + d * h) % l)


def mat_inv(A: Matrix, l: int) -> Matrix:
    a, b, c, d = A
    det = (a * d - b * c) % l
    di = pow(det, -1, l)
    return ((d * di) % l, (-b * di) % l, (-c * di) % l, (a * di) % l)


def mat_order(A: Matrix, l: int) -> int:
    I = (1, 0, 0, 1)
    n, B = 1, A
    while B != I:
        B = mat_mul(B, A, l)
        n += 1
    return n


def closure(gens: Iterable[Matrix], l: int) -> frozenset:
    I = (1, 0, 0, 1)
    elems = {I}
    frontier = [I]
    gens = list(gens)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = mat_mul(x, g, l)
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
    return frozenset(elems)


def fixed_dim(H: Iterable[Matrix], l: int) -> int:
    """dim of {v in F_l^2 : hv = v for all h in H}, by exhaustive kernel search."""
    H = list(H)
    count = sum(
        1
        for x in range(l)
        for y in range(l)
        if all(((a - 1) * x + b * y) % l == 0 and (c * x + (d - 1) * y) % l == 0 for a, b, c, d in H)
    )
    # count = l^dim
    dim = 0
    while l ** dim < count:
        dim += 1
    return dim


@dataclass(frozen=True)
class MatrixGroup:
    """A finite subgroup of GL(2, F_l) with a lower ramification filtration.

    filtration[i] is G_i for i >= 1 (G_0 is the whole group); trailing
    trivial groups are implied.
    """

    l: int
    elements: frozenset
    filtration: tuple = field(default=())

    @property
    def order(self) -> int:
        return len(self.elements)

    def G(self, i: int) -> frozenset:
        if i == 0:
            return self.elements
        if i <= len(self.filtration):
            return self.filtration[i - 1]
        return frozenset({(1, 0, 0, 1)})

    def orders(self) -> tuple:
        return (self.order,) + tuple(len(H) for H in self.filtration)

    def is_subgroup(self, H: Iterable[Matrix]) -> bool:
        H = frozenset(H)
        if not H or not H <= self.elements:
            return False
        return all(mat_mul(a, b, self.l) in H for a in H for b in H)

    def restrict(self, H: Iterable[Matrix]) -> "MatrixGroup":
        """The subgroup H with filtration H_i = H cap G_i."""
        H = frozenset(H)
        if not self.is_subgroup(H):
            raise NotSubgroupError("not a subgroup")
        return MatrixGroup(self.l, H, tuple(H & Gi for Gi in self.filtration))

    def conjugate(self, H: Iterable[Matrix], g: Matrix) -> frozenset:
        gi = mat_inv(g, self.l)
        return frozenset(mat_mul(mat_mul(g, h, self.l), gi, self.l) for h in H)


def sl2(l: int) -> frozenset:
    return frozenset(
        (a, b, c, d)
        for a in range(l) for b in range(l) for c in range(l) for d in range(l)
        if (a * d - b * c) % l == 1
    )


def gl2(l: int) -> frozenset:
    return frozenset(
        (a, b, c, d)
        for a in range(l) for b in range(l) for c in range(l) for d in range(l)
        if (a * d - b * c) % l
    )


def _least_of_order(G: frozenset, n: int, l: int) -> Matrix:
    return min(g for g in G if mat_order(g, l) == n)


def sl2f3_subgroups() -> dict:
    """One representative per conjugacy class of subgroups, keyed by name."""
    G = sl2(3)
    center = frozenset({(1, 0, 0, 1), (2, 0, 0, 2)})
    quaternion = frozenset(g for g in G if mat_order(g, 3) in (1, 2, 4))
    return {
        "SL2F3": G,
        "C6": closure([_least_of_order(G, 6, 3)], 3),
        "Q": quaternion,
        "C4": closure([_least_of_order(G, 4, 3)], 3),
        "C3": closure([_least_of_order(G, 3, 3)], 3),
        "C2": center,
        "1": frozenset({(1, 0, 0, 1)}),
    }


def sl2f3_delta_one() -> MatrixGroup:
    """SL(2, F_3) with G_1 = Q, G_2 = G_3 = C_2, G_4 = 1."""
    S = sl2f3_subgroups()
    return MatrixGroup(3, S["SL2F3"], (S["Q"], S["C2"], S["C2"]))


def gl2f2_delta_one() -> MatrixGroup:
    """GL(2, F_2) = S_3 with G_1 = C_3, G_2 = 1."""
    G = gl2(2)
    c3 = closure([_least_of_order(G, 3, 2)], 2)
    return MatrixGroup(2, G, (c3,))


def all_subgroups(G: MatrixGroup) -> list[frozenset]:
    """Every subgroup, as closures of one- and two-element generator sets.

    Enough for groups of order <= 24 whose subgroups are 2-generated, which
    holds for SL(2, F_3) and GL(2, F_2).
    """
    elems = sorted(G.elements)
    subs = {closure([g], G.l) for g in elems}
    subs |= {closure([g, h], G.l) for g, h in combinations(elems, 2)}
    return sorted(subs, key=lambda H: (len(H), sorted(H)))


def conjugacy_classes_of_subgroups(G: MatrixGroup) -> list[list[frozenset]]:
    classes: list[list[frozenset]] = []
    seen: set = set()
    for H in all_subgroups(G):
        if H in seen:
            continue
        cls = sorted({G.conjugate(H, g) for g in G.elements}, key=sorted)
        seen |= set(cls)
        classes.append(cls)
    return classes


def swan_from_orders(orders: Sequence[int], codims: Sequence[int]) -> Fraction:
    """sum_{i>=1} codims[i-1] * g_i / g_0 for orders (g_0, g_1, ...)."""
    if len(codims) != len(orders) - 1:
        raise ValueError("need one codimension per G_i, i >= 1")
    g0 = orders[0]
    return sum((Fraction(gi, g0) * c for gi, c in zip(orders[1:], codims)), Fraction(0))


def _integral(value: Fraction) -> int:
    if value.denominator != 1:
        raise NonIntegralSwanError(f"Swan conductor {value} is not an integer")
    return int(value)


def swan_delta(G: MatrixGroup) -> int:
    """Swan conductor of the tautological module F_l^2."""
    codims = [2 - fixed_dim(Gi, G.l) for Gi in G.filtration]
    return _integral(swan_from_orders(G.orders(), codims))


def subgroup_swan(G: MatrixGroup, H: Iterable[Matrix]) -> int:
    return swan_delta(G.restrict(H))


def change_of_group_table() -> dict:
    """Swan conductor for each subgroup class of SL(2, F_3), delta = 1 filtration."""
    G = sl2f3_delta_one()
    return {name: subgroup_swan(G, H) for name, H in sl2f3_subgroups().items()}


def general_delta_two_orders(s: int) -> tuple[list[int], list[int]]:
    """Orders and codimensions for g = 24 s: G_1..G_s = Q, G_{s+1}..G_{3s} = C_2.

    Only the images in SL(2, F_3) matter for V^{G_i}: Q and C_2 both contain
    -1, so both act without fixed vectors.
    """
    g = 24 * s
    orders = [g] + [8] * s + [2] * (2 * s)
    return orders, [2] * (3 * s)


def general_delta_three_orders(g: int) -> tuple[list[int], list[int]]:
    """G = C_3 x| C_{g/3} with G_1..G_m = C_3, m = g/6; C_3 fixes no vector of F_2^2."""
    if g % 6:
        raise ValueError("g must be divisible by 6")
    m = g // 6
    return [g] + [3] * m, [2] * m


# --- Hasse-Herbrand ---------------------------------------------------------

@dataclass(frozen=True)
class RamFiltration:
    """Orders g_0 >= g_1 >= ... >= g_N; g_i = 1 for i > N."""

    orders: tuple

    def __post_init__(self):
        o = tuple(int(x) for x in self.orders)
        if not o or any(x < 1 for x in o):
            raise ValueError("orders must be positive")
        if any(a < b for a, b in zip(o, o[1:])):
            raise ValueError("orders must be non-increasing")
        if any(o[0] % x for x in o):
            raise ValueError("each order must divide g_0")
        object.__setattr__(self, "orders", o)

    def g(self, i: int) -> int:
        return self.orders[i] if i < len(self.orders) else 1

    def lower_breaks(self) -> list[int]:
        return [i for i in range(len(self.orders)) if self.g(i) > self.g(i + 1)]


def hasse_herbrand_phi(fil: RamFiltration | Sequence[int], x) -> Fraction:
    """phi(x) = sum_{i=1}^{n} g_i/g_0 + (x - n) g_{n+1}/g_0 for n <= x <= n + 1."""
    fil = fil if isinstance(fil, RamFiltration) else RamFiltration(tuple(fil))
    x = Fraction(x)
    if x < 0:
        raise ValueError("x must be >= 0")
    g0 = fil.g(0)
    n = int(x)  # floor for x >= 0
    total = sum((Fraction(fil.g(i), g0) for i in range(1, n + 1)), Fraction(0))
    return total + (x - n) * Fraction(fil.g(n + 1), g0)


def upper_breaks(fil: RamFiltration | Sequence[int]) -> list[Fraction]:
    fil = fil if isinstance(fil, RamFiltration) else RamFiltration(tuple(fil))
    return [hasse_herbrand_phi(fil, b) for b in fil.lower_breaks()]


def quotient_upper_breaks(G: MatrixGroup, N: Iterable[Matrix]) -> list[Fraction]:
    """Upper breaks of G/N, via (G/N)^x = G^x N / N."""
    N = frozenset(N)
    fil = RamFiltration(G.orders())
    breaks = []
    for b in fil.lower_breaks():
        Gb, Gnext = G.G(b), G.G(b + 1)
        if len(_product_set(Gb, N, G.l)) > len(_product_set(Gnext, N, G.l)):
            breaks.append(hasse_herbrand_phi(fil, b))
    return breaks


def _product_set(A: frozenset, B: frozenset, l: int) -> frozenset:
    return frozenset(mat_mul(a, b, l) for a in A for b in B)


def quadratic_uniformizer_exponent(G: MatrixGroup, H: Iterable[Matrix]) -> int:
    """n with R_F' = R_F[s]/(s^2 - u^n s - u^{2n} f) for an index-two H in G.

    G/H = C_2 is totally wildly ramified, so its lower and upper breaks agree
    and equal 2n - 1.
    """
    H = frozenset(H)
    if G.order != 2 * len(H) or not G.is_subgroup(H):
        raise NotSubgroupError("need a subgroup of index two")
    (b,) = quotient_upper_breaks(G, H)
    if b.denominator != 1 or b % 2 != 1:
        raise ArithmeticError(f"unexpected break {b}")
    return (int(b) + 1) // 2


def artin_schreier_quadratic_breaks(n: int) -> RamFiltration:
    """C_2 filtration of s^2 - u^n s = u^{2n} f: order 2 for i <= 2n - 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return RamFiltration((2,) * (2 * n))


def character_swan(fil: RamFiltration) -> int:
    """Swan conductor of a character nontrivial on every G_i != 1 with G_i cyclic of order 2."""
    codims = [1 if fil.g(i) > 1 else 0 for i in range(1, len(fil.orders))]
    return _integral(swan_from_orders(fil.orders, codims))


def scale_delta(delta: int, d: int, p: int, inseparable: bool = False) -> int:
    """Wild conductor after a base change of degree d."""
    if d < 1:
        raise ValueError("degree must be positive")
    if inseparable:
        return delta
    if gcd(d, p) != 1:
        raise ValueError(f"separable scaling needs p = {p} prime to d = {d}")
    return d * delta


def index_two_pairs(G: MatrixGroup) -> list[tuple[frozenset, frozenset]]:
    subs = all_subgroups(G)
    return [(A, B) for A in subs for B in subs if len(A) == 2 * len(B) and B <= A]


def uniformizer_exponents(G: MatrixGroup) -> dict:
    """(|A|, |B|) -> set of exponents n over all index-two pairs B < A."""
    out: dict = {}
    for A, B in index_two_pairs(G):
        n = quadratic_uniformizer_exponent(G.restrict(A), B)
        out.setdefault((len(A), len(B)), set()).add(n)
    return out
