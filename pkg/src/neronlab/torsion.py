"""Hasse invariants, supersingular j-values, and how rational 2- and
3-torsion points specialize into the special fiber.

Two independent routes decide whether a point has nonzero class in the
component group:

* the explicit criteria for the forms y^2 + a1 xy + a3 y = x^3 (char 3)
  and y^2 + a1 xy = x^3 + a2 x^2 + a4 x (char 2), which read the answer
  off the valuation of a3 resp. a4;
* ``specialize``, which moves the point to the minimal model found by
  Tate's algorithm and tests whether it reduces to the singular point of
  the special fiber (the smooth locus of a minimal Weierstrass model is
  the identity component of the Neron model).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import FqField, Poly, RatFunc
from .algebra.ratfunc import Place, ZERO, residue_at, valuation
from .localred import is_minimal, tate_reduce
from .weierstrass import CurvePoint, WeierstrassEq, complete_square, point_order


class NonMinimalError(ValueError):
    pass


class NotInE1Error(ValueError):
    """The point does not specialize to the zero section."""


@dataclass(frozen=True)
class HasseData:
    h: RatFunc
    vanishing_order: float | int
    place: Place = ZERO


@dataclass(frozen=True)
class SpecializationReport:
    point: CurvePoint
    order: Optional[int]
    nonzero_in_fiber: bool
    nonzero_in_phi: bool

    def to_dict(self) -> dict:
        return {
            "point": str(self.point),
            "order": self.order,
            "nonzero_in_fiber": self.nonzero_in_fiber,
            "nonzero_in_phi": self.nonzero_in_phi,
        }


def _xpoly_mul(a: list[RatFunc], b: list[RatFunc], zero: RatFunc) -> list[RatFunc]:
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


def hasse_invariant(E: WeierstrassEq, v: Place | None = None) -> HasseData:
    """Hasse invariant of the given equation, and its order at v.

    Odd p: coefficient of x^(p-1) in f(x)^((p-1)/2) for y^2 = f(x) obtained
    by completing the square.  p = 2: the coefficient a1.
    """
    v = ZERO if v is None else v
    p = E.char
    if p == 2:
        h = E.a1
    else:
        S, _ = complete_square(E)
        zero = RatFunc.const(E.F, 0)
        f = [S.a6, S.a4, S.a2, RatFunc.const(E.F, 1)]
        acc = [RatFunc.const(E.F, 1)]
        for _ in range((p - 1) // 2):
            acc = _xpoly_mul(acc, f, zero)
        h = acc[p - 1]
    return HasseData(h, valuation(h, v), v)


def representative_curve(j0: int, F: FqField) -> WeierstrassEq:
    """A curve over F with j-invariant j0 (p >= 5)."""
    if F.p < 5:
        raise ValueError("representative curves are only used for p >= 5")
    c = lambda a: RatFunc.const(F, a)  # noqa: E731
    zero = c(0)
    if j0 == 0:
        return WeierstrassEq(zero, zero, zero, zero, c(1))
    j1728 = F.from_int(1728)
    if j0 == j1728:
        return WeierstrassEq(zero, zero, zero, c(1), zero)
    # y^2 = x^3 + 3k x + 2k has j = 1728 k / (k + 1)
    k = F.div(j0, F.sub(j1728, j0))
    return WeierstrassEq(zero, zero, zero, c(F.mul(3, k)), c(F.mul(2, k)))


def is_supersingular_j(j0: int, F: FqField) -> bool:
    if F.p in (2, 3):
        # j = 0 is the only supersingular j-invariant in characteristic 2 and 3
        return j0 == 0
    E = representative_curve(j0, F)
    p = F.p
    f = Poly(F, [E.a6.constant_value(), E.a4.constant_value(), 0, 1])
    return (f ** ((p - 1) // 2)).coeff(p - 1) == 0


def supersingular_j_values(F: FqField) -> list[int]:
    return [j for j in range(F.q) if is_supersingular_j(j, F)]


def _check_minimal(E: WeierstrassEq, v: Place) -> None:
    if not is_minimal(E, v):
        raise NonMinimalError(f"{E} is not a minimal equation at {v}")


def special_form_3(E: WeierstrassEq, v: Place | None = None) -> Optional[SpecializationReport]:
    """y^2 + a1 xy + a3 y = x^3: (0,0) has order 3, nonzero in Phi iff v(a3) > 0."""
    v = ZERO if v is None else v
    if E.char != 3:
        raise ValueError("special_form_3 needs characteristic 3")
    _check_minimal(E, v)
    a1, a2, a3, a4, a6 = E.coeffs
    if not (a2.is_zero() and a4.is_zero() and a6.is_zero()) or a1.is_zero() or a3.is_zero():
        return None
    P = E.point(0, 0)
    return SpecializationReport(P, point_order(E, P), True, valuation(a3, v) > 0)


def special_form_2(E: WeierstrassEq, v: Place | None = None) -> Optional[SpecializationReport]:
    """y^2 + a1 xy = x^3 + a2 x^2 + a4 x: (0,0) has order 2, nonzero in Phi iff v(a4) > 0."""
    v = ZERO if v is None else v
    if E.char != 2:
        raise ValueError("special_form_2 needs characteristic 2")
    _check_minimal(E, v)
    a1, a2, a3, a4, a6 = E.coeffs
    if not (a3.is_zero() and a6.is_zero()) or a1.is_zero() or a4.is_zero():
        return None
    P = E.point(0, 0)
    return SpecializationReport(P, point_order(E, P), True, valuation(a4, v) > 0)


def singular_point(E: WeierstrassEq, v: Place | None = None) -> Optional[tuple[int, int]]:
    """Singular point of the reduction of an integral equation at v, or None."""
    v = ZERO if v is None else v
    F = E.F
    if residue_at(E.discriminant(), v) != 0:
        return None
    a1, a2, a3, a4, a6 = (residue_at(a, v) for a in E.coeffs)
    add, mul, sub, neg = F.add, F.mul, F.sub, F.neg
    p = F.p
    if p == 2:
        if a1 == 0:
            x0 = F.pth_root(a4)
            y0 = F.pth_root(add(add(mul(mul(x0, x0), x0), mul(a2, mul(x0, x0))), add(mul(a4, x0), a6)))
        else:
            x0 = F.div(a3, a1)
            y0 = F.div(add(mul(x0, x0), a4), a1)
    else:
        b2 = add(mul(a1, a1), mul(4 % p, a2))
        b4 = add(mul(2, a4), mul(a1, a3))
        b6 = add(mul(a3, a3), mul(4 % p, a6))
        if p == 3:
            x0 = F.pth_root(neg(b6)) if b2 == 0 else neg(F.div(b4, b2))
        else:
            c4 = sub(mul(b2, b2), mul(F.from_int(24), b4))
            c6 = add(sub(mul(F.from_int(36), mul(b2, b4)), mul(mul(b2, b2), b2)), neg(mul(F.from_int(216), b6)))
            if c4 == 0:
                x0 = neg(F.div(b2, F.from_int(12)))
            else:
                x0 = neg(F.div(add(c6, mul(b2, c4)), mul(F.from_int(12), c4)))
        y0 = neg(F.div(add(mul(a1, x0), a3), 2 % p))
    # the partial derivatives must both vanish
    fx = sub(mul(a1, y0), add(add(mul(3 % p, mul(x0, x0)), mul(mul(2 % p, a2), x0)), a4))
    fy = add(add(mul(2 % p, y0), mul(a1, x0)), a3)
    assert fx == 0 and fy == 0, "singular point formulas failed"
    return x0, y0


def _to_minimal(E: WeierstrassEq, P: CurvePoint, v: Place):
    rd = tate_reduce(E, v)
    T = rd.transform
    u2 = T.u * T.u
    x = (P.x - T.r) / u2
    y = (P.y - T.s * u2 * x - T.w) / (u2 * T.u)
    Q = CurvePoint(x, y)
    assert rd.minimal_eq.contains(Q)
    return rd, Q


def specialize(E: WeierstrassEq, P: CurvePoint, v: Place | None = None) -> SpecializationReport:
    """Where P lands in the special fiber of the minimal model at v."""
    v = ZERO if v is None else v
    if P.is_infinity:
        return SpecializationReport(P, 1, False, False)
    order = point_order(E, P)
    rd, Q = _to_minimal(E, P, v)
    if valuation(Q.x, v) < 0:
        return SpecializationReport(P, order, False, False)
    sing = singular_point(rd.minimal_eq, v)
    here = (residue_at(Q.x, v), residue_at(Q.y, v))
    return SpecializationReport(P, order, True, sing is not None and here == sing)


def osculation_number(E: WeierstrassEq, P: CurvePoint, v: Place | None = None) -> int:
    """m = -v(x)/2 on the minimal model, for P reducing to the zero section."""
    v = ZERO if v is None else v
    if P.is_infinity:
        raise NotInE1Error("the zero section has no finite osculation number")
    _, Q = _to_minimal(E, P, v)
    vx, vy = valuation(Q.x, v), valuation(Q.y, v)
    if vx >= 0:
        raise NotInE1Error(f"{P} does not reduce to the zero section (v(x) = {vx})")
    if vx % 2 or vy != 3 * vx // 2:
        raise ArithmeticError(f"inconsistent valuations v(x) = {vx}, v(y) = {vy}")
    return -vx // 2


def j_in_pth_powers(E: WeierstrassEq) -> bool:
    """Informational flag: whether j(E) lies in K^p."""
    j = E.j
    if j is None:
        raise ValueError("singular curve")
    p = E.char
    return all(i % p == 0 for i, c in enumerate(j.num.c) if c) and all(
        i % p == 0 for i, c in enumerate(j.den.c) if c
    )


def criterion_report(E: WeierstrassEq, P: CurvePoint, v: Place | None = None) -> Optional[SpecializationReport]:
    """Phi-class of a 2- or 3-torsion point read off the valuation criterion.

    P is moved to the minimal model, translated to (0, 0) and, in char 3,
    sheared so that y = 0 is the inflectional tangent.  The result has one
    of the two special forms, whose criterion then gives the answer.
    Returns None if P meets the zero section or the form does not arise.
    """
    v = ZERO if v is None else v
    p = E.char
    if p not in (2, 3):
        raise ValueError("criterion_report needs characteristic 2 or 3")
    order = point_order(E, P)
    if order != p:
        raise ValueError(f"point of order {order}, expected {p}")
    rd, Q = _to_minimal(E, P, v)
    if valuation(Q.x, v) < 0:
        return None
    M = rd.minimal_eq
    a1, a2, a3, a4, a6 = M.coeffs
    x0, y0 = Q.x, Q.y
    if p == 2:
        s = RatFunc.const(E.F, 0)
    else:
        # tangent slope at Q; the denominator is 2y + a1 x + a3
        s = (x0 * x0 * 3 + a2 * x0 * 2 + a4 - a1 * y0) / (y0 * 2 + a1 * x0 + a3)
    S = M.transform(1, x0, s, y0)
    rep = special_form_2(S, v) if p == 2 else special_form_3(S, v)
    if rep is None:
        return None
    return SpecializationReport(P, order, rep.nonzero_in_fiber, rep.nonzero_in_phi)
