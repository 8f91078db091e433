"""Roots of univariate polynomials over F_q and splitting-field extensions."""
from __future__ import annotations

from math import lcm

from .field import FqField
from .poly import Poly, poly_gcd, poly_powmod


class ExtensionCapError(ArithmeticError):
    """Raised when splitting needs a constant-field extension beyond the cap."""

    def __init__(self, required: int | None, cap: int):
        self.required = required
        self.cap = cap
        super().__init__(f"splitting needs extension degree {required} > cap {cap}")


def lift_poly(h: Poly, F: FqField) -> Poly:
    """View h (over a subfield) as a polynomial over F."""
    if h.F == F:
        return h
    embed = h.F.embedding_into(F)
    return Poly(F, [embed(a) for a in h.c])


def _require_poly(h) -> Poly:
    if not isinstance(h, Poly):
        raise TypeError(f"expected a univariate polynomial over a finite field, got {type(h).__name__}")
    if h.is_zero():
        raise ValueError("the zero polynomial has no finite root set")
    return h


def _split_linear(g: Poly) -> list[int]:
    """Roots of a monic squarefree g that splits into distinct linear factors."""
    if g.deg <= 0:
        return []
    F = g.F
    if g.deg == 1:
        return [F.neg(g.c[0])]
    x = Poly.x(F)
    for a in range(F.q):
        if F.p == 2:
            # additive trace of a*x
            ax = x.scale(a) % g
            tr, term = ax, ax
            for _ in range(F.n - 1):
                term = (term * term) % g
                tr = tr + term
            d = poly_gcd(g, tr)
        else:
            d = poly_gcd(g, poly_powmod(x + Poly.const(F, a), (F.q - 1) // 2, g) - 1)
        if 0 < d.deg < g.deg:
            return _split_linear(d) + _split_linear(g.exact_div(d))
    # never reached for distinct roots; kept as a guard
    return [a for a in range(F.q) if g(a) == 0]


def roots_in_field(h: Poly, F: FqField | None = None) -> list[int]:
    """Roots of h lying in F, sorted, repeated by multiplicity."""
    h = _require_poly(h)
    if F is None:
        F = h.F
    h = lift_poly(h, F).monic()
    if h.deg <= 0:
        return []
    x = Poly.x(F)
    g = poly_gcd(h, poly_powmod(x, F.q, h) - x)
    out = []
    for r in sorted(_split_linear(g)):
        lin = Poly(F, [F.neg(r), 1])
        rest = h
        while True:
            q, rem = divmod(rest, lin)
            if rem:
                break
            out.append(r)
            rest = q
    return out


def _pth_root_poly(f: Poly) -> Poly:
    F, p = f.F, f.F.p
    return Poly(F, [F.pth_root(f.c[i]) for i in range(0, len(f.c), p)])


def _ddf_degrees(w: Poly) -> set[int]:
    F = w.F
    x = Poly.x(F)
    degs: set[int] = set()
    h = x
    i = 1
    while w.deg >= 2 * i:
        h = poly_powmod(h, F.q, w)
        g = poly_gcd(w, h - x)
        if g.deg > 0:
            degs.add(i)
            w = w.exact_div(g)
            h = h % w
        i += 1
    if w.deg > 0:
        degs.add(w.deg)
    return degs


def irreducible_factor_degrees(h: Poly) -> set[int]:
    """Degrees of the distinct irreducible factors of h over its field."""
    h = _require_poly(h)
    degs: set[int] = set()
    stack = [h.monic()]
    while stack:
        f = stack.pop()
        if f.deg <= 0:
            continue
        d = f.derivative()
        if d.is_zero():
            stack.append(_pth_root_poly(f).monic())
            continue
        g = poly_gcd(f, d)
        degs |= _ddf_degrees(f.exact_div(g))
        stack.append(g)
    return degs


def splitting_degree(h: Poly) -> int:
    return lcm(*irreducible_factor_degrees(h)) if h.deg > 0 else 1


def extend_for_splitting(h: Poly, F: FqField | None = None, cap: int = 12) -> FqField:
    """Smallest F_{q^m} (m <= cap) over which h splits into linear factors."""
    h = _require_poly(h)
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if F is None:
        F = h.F
    h = lift_poly(h, F)
    m = splitting_degree(h)
    if m > cap:
        raise ExtensionCapError(m, cap)
    return F if m == 1 else F.extension(m)
