"""Long Weierstrass equations over F_q(t): invariants, coordinate changes,
group law, torsion polynomials, twists, Frobenius pullback, base change.

All coefficients are RatFunc values; curves over the constant field are
simply equations with constant coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import FqField, RatFunc, substitute
from .algebra.ratfunc import Place, to_local


class SingularCurveError(ValueError):
    """The discriminant vanishes identically."""


class OffCurveError(ValueError):
    pass


@dataclass(frozen=True)
class StdInvariants:
    b2: RatFunc
    b4: RatFunc
    b6: RatFunc
    b8: RatFunc
    c4: RatFunc
    c6: RatFunc
    disc: RatFunc
    j: Optional[RatFunc]


@dataclass(frozen=True)
class Transform:
    """x = u^2 x' + r,  y = u^3 y' + s u^2 x' + w."""

    u: RatFunc
    r: RatFunc
    s: RatFunc
    w: RatFunc

    @classmethod
    def identity(cls, F: FqField) -> "Transform":
        one, zero = RatFunc.const(F, 1), RatFunc.const(F, 0)
        return cls(one, zero, zero, zero)

    def then(self, other: "Transform") -> "Transform":
        """Apply self first, then other."""
        u1, r1, s1, w1 = self.u, self.r, self.s, self.w
        u2, r2, s2, w2 = other.u, other.r, other.s, other.w
        return Transform(
            u1 * u2,
            u1 * u1 * r2 + r1,
            u1 * s2 + s1,
            u1 ** 3 * w2 + s1 * u1 * u1 * r2 + w1,
        )


@dataclass(frozen=True)
class WeierstrassEq:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: RatFunc
    a2: RatFunc
    a3: RatFunc
    a4: RatFunc
    a6: RatFunc

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, F: FqField | None = None, allow_singular: bool = False) -> "WeierstrassEq":
        if len(coeffs) != 5:
            raise ValueError("need exactly five coefficients [a1,a2,a3,a4,a6]")
        vals = []
        for c in coeffs:
            if isinstance(c, RatFunc):
                vals.append(c)
            elif isinstance(c, int):
                if F is None:
                    raise ValueError("integer coefficients need an explicit field")
                vals.append(RatFunc.from_int(F, c))
            else:
                raise TypeError(f"unsupported coefficient {c!r}")
        fields = {v.F for v in vals}
        if len(fields) != 1:
            raise ValueError("coefficients live in different fields")
        E = cls(*vals)
        if not allow_singular and E.discriminant().is_zero():
            raise SingularCurveError(f"singular cubic: {E}")
        return E

    @property
    def F(self) -> FqField:
        return self.a1.F

    @property
    def char(self) -> int:
        return self.a1.F.p

    @property
    def coeffs(self) -> tuple[RatFunc, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def invariants(self) -> StdInvariants:
        a1, a2, a3, a4, a6 = self.coeffs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        c4 = b2 * b2 - 24 * b4
        c6 = -(b2 ** 3) + 36 * b2 * b4 - 216 * b6
        disc = -(b2 * b2 * b8) - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
        j = None if disc.is_zero() else c4 ** 3 / disc
        return StdInvariants(b2, b4, b6, b8, c4, c6, disc, j)

    def discriminant(self) -> RatFunc:
        return self.invariants().disc

    @property
    def j(self) -> Optional[RatFunc]:
        return self.invariants().j

    def is_short(self) -> bool:
        return self.a1.is_zero() and self.a2.is_zero() and self.a3.is_zero()

    def transform(self, u, r=0, s=0, w=0) -> "WeierstrassEq":
        F = self.F
        u, r, s, w = (RatFunc.from_int(F, v) if isinstance(v, int) else v for v in (u, r, s, w))
        if u.is_zero():
            raise ValueError("coordinate change with u = 0")
        a1, a2, a3, a4, a6 = self.coeffs
        ui = u.inverse()
        ui2 = ui * ui
        ui3 = ui2 * ui
        ui4 = ui2 * ui2
        ui6 = ui3 * ui3
        n1 = (a1 + 2 * s) * ui
        n2 = (a2 - s * a1 + 3 * r - s * s) * ui2
        n3 = (a3 + r * a1 + 2 * w) * ui3
        n4 = (a4 - s * a3 + 2 * r * a2 - (w + r * s) * a1 + 3 * r * r - 2 * s * w) * ui4
        n6 = (a6 + r * a4 + r * r * a2 + r ** 3 - w * a3 - w * w - r * w * a1) * ui6
        return WeierstrassEq(n1, n2, n3, n4, n6)

    def apply(self, T: Transform) -> "WeierstrassEq":
        return self.transform(T.u, T.r, T.s, T.w)

    def map_coeffs(self, fn) -> "WeierstrassEq":
        return WeierstrassEq(*(fn(a) for a in self.coeffs))

    def to_local(self, v: Place) -> "WeierstrassEq":
        return self.map_coeffs(lambda a: to_local(a, v))

    def lift_to(self, F: FqField) -> "WeierstrassEq":
        return self.map_coeffs(lambda a: a.lift_to(F))

    # -- group law --------------------------------------------------------
    def contains(self, P: "CurvePoint") -> bool:
        if P.is_infinity:
            return True
        x, y = P.x, P.y
        a1, a2, a3, a4, a6 = self.coeffs
        return (y * y + a1 * x * y + a3 * y) == (x ** 3 + a2 * x * x + a4 * x + a6)

    def point(self, x, y) -> "CurvePoint":
        F = self.F
        x = RatFunc.from_int(F, x) if isinstance(x, int) else x
        y = RatFunc.from_int(F, y) if isinstance(y, int) else y
        P = CurvePoint(x, y)
        if not self.contains(P):
            raise OffCurveError(f"({x}, {y}) is not on {self}")
        return P

    def negate(self, P: "CurvePoint") -> "CurvePoint":
        if P.is_infinity:
            return P
        return CurvePoint(P.x, -P.y - self.a1 * P.x - self.a3)

    def to_str(self, var: str = "t") -> str:
        a1, a2, a3, a4, a6 = self.coeffs

        def term(c: RatFunc, mono: str) -> str:
            if c.is_zero():
                return ""
            s = c.to_str(var)
            if c.is_one():
                return f" + {mono}" if mono else " + 1"
            if c == -1 and mono:
                return f" - {mono}"
            if not mono:
                return f" + {s}" if not s.startswith("-") else f" - {s[1:]}"
            if " " in s or "/" in s:
                s = f"({s})"
            return f" + {s}*{mono}"

        lhs = "y^2" + term(a1, "x*y") + term(a3, "y")
        rhs = "x^3" + term(a2, "x^2") + term(a4, "x") + term(a6, "")
        return f"{lhs} = {rhs}"

    def __str__(self) -> str:
        return self.to_str()

    def literal(self) -> str:
        return "[" + ",".join(a.to_str() for a in self.coeffs) + "]"


@dataclass(frozen=True)
class CurvePoint:
    x: Optional[RatFunc] = None
    y: Optional[RatFunc] = None

    @classmethod
    def infinity(cls) -> "CurvePoint":
        return cls(None, None)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


O = CurvePoint.infinity()


def point_add(E: WeierstrassEq, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    for R in (P, Q):
        if not E.contains(R):
            raise OffCurveError(f"{R} is not on {E}")
    return _add(E, P, Q)


def _add(E: WeierstrassEq, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    a1, a2, a3, a4, a6 = E.coeffs
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if (y1 + y2 + a1 * x2 + a3).is_zero():
            return O
        den = 2 * y1 + a1 * x1 + a3
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
        nu = (-(x1 ** 3) + a4 * x1 + 2 * a6 - a3 * y1) / den
    else:
        lam = (y2 - y1) / (x2 - x1)
        nu = (y1 * x2 - y2 * x1) / (x2 - x1)
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return CurvePoint(x3, y3)


def point_mul(E: WeierstrassEq, k: int, P: CurvePoint) -> CurvePoint:
    if k < 0:
        return point_mul(E, -k, E.negate(P))
    result, base = O, P
    while k:
        if k & 1:
            result = _add(E, result, base)
        k >>= 1
        if k:
            base = _add(E, base, base)
    return result


def point_order(E: WeierstrassEq, P: CurvePoint, bound: int = 12) -> Optional[int]:
    """Exact order if at most ``bound``; None means it exceeds the bound."""
    if not E.contains(P):
        raise OffCurveError(f"{P} is not on {E}")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    Q = P
    for k in range(1, bound + 1):
        if Q.is_infinity:
            return k
        Q = _add(E, Q, P)
    return None


# -- torsion polynomials ------------------------------------------------------

@dataclass(frozen=True)
class XPoly:
    """A polynomial in x with coefficients in F_q(t), low degree first."""

    coeffs: tuple[RatFunc, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: RatFunc) -> RatFunc:
        acc = RatFunc.const(x.F, 0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map_coeffs(self, fn) -> "XPoly":
        return XPoly(tuple(fn(c) for c in self.coeffs))

    def __str__(self) -> str:
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            s = c.to_str()
            if not mono:
                parts.append(s)
            elif c.is_one():
                parts.append(mono)
            else:
                parts.append(f"({s})*{mono}" if (" " in s or "/" in s) else f"{s}*{mono}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class TorsionPolynomials:
    two_cubic: XPoly
    three_quartic: XPoly
    resolvent_cubic: XPoly


def torsion_polynomials(E: WeierstrassEq) -> TorsionPolynomials:
    a1, a2, a3, a4, a6 = E.coeffs
    inv = E.invariants()
    one = RatFunc.const(E.F, 1)
    two = XPoly((a3 * a3 + a6, a4 - a1 * a3, a1 * a1 + a2, one))
    three = XPoly((inv.b8, inv.b6, inv.b4, inv.b2, one))
    resolvent = XPoly((inv.b2 * inv.b2 * inv.b8 + inv.b6 * inv.b6, inv.b2 * inv.b6, inv.b4, one))
    return TorsionPolynomials(two, three, resolvent)


# -- Frobenius, base change, twists --------------------------------------------

def frobenius_pullback(E: WeierstrassEq) -> WeierstrassEq:
    """Coefficientwise p-th power; no re-minimalization."""
    return E.map_coeffs(lambda a: a.frobenius())


def base_change(E: WeierstrassEq, g: RatFunc) -> WeierstrassEq:
    """Compose every coefficient with t = g(s)."""
    if g.is_constant():
        raise ValueError("base change along a constant")
    return E.map_coeffs(lambda a: substitute(a, g))


def complete_square(E: WeierstrassEq) -> tuple[WeierstrassEq, Transform]:
    """y^2 = x^3 + a2 x^2 + a4 x + a6 (odd characteristic)."""
    if E.char == 2:
        raise ValueError("cannot complete the square in characteristic 2")
    F = E.F
    half = RatFunc.const(F, F.inv(2 % F.p))
    zero = RatFunc.const(F, 0)
    T = Transform(RatFunc.const(F, 1), zero, -(E.a1 * half), -(E.a3 * half))
    return E.apply(T), T


def short_form(E: WeierstrassEq) -> tuple[WeierstrassEq, Transform]:
    """y^2 = x^3 + A x + B, with the change of coordinates used (u = 1)."""
    if E.char < 5:
        raise ValueError("short form needs characteristic >= 5")
    if E.is_short():
        return E, Transform.identity(E.F)
    E1, T1 = complete_square(E)
    F = E.F
    zero = RatFunc.const(F, 0)
    T2 = Transform(RatFunc.const(F, 1), -(E1.a2 * RatFunc.const(F, F.inv(3))), zero, zero)
    return E1.apply(T2), T1.then(T2)


def twist_quadratic(E: WeierstrassEq, d: RatFunc) -> WeierstrassEq:
    """Quadratic twist by d in odd characteristic."""
    p = E.char
    if p == 2:
        raise ValueError("characteristic 2: use twist_quadratic_as")
    if d.is_zero():
        raise ValueError("twist parameter must be nonzero")
    if p >= 5:
        S, _ = short_form(E)
        return WeierstrassEq(S.a1, S.a2, S.a3, d * d * S.a4, d ** 3 * S.a6)
    S, _ = complete_square(E)
    return WeierstrassEq(S.a1, d * S.a2, S.a3, d * d * S.a4, d ** 3 * S.a6)


def twist_quadratic_as(E: WeierstrassEq, d: RatFunc) -> WeierstrassEq:
    """Artin-Schreier twist in characteristic 2.

    With y = y' + u(a1 x + a3), u^2 + u = d, the right-hand side gains
    d (a1 x + a3)^2; for a1 = 1, a3 = 0 this is a2 -> a2 + d.
    """
    if E.char != 2:
        raise ValueError("Artin-Schreier twists need characteristic 2")
    if E.a1.is_zero():
        raise ValueError("a1 = 0: supersingular normal form, twist not supported")
    return WeierstrassEq(E.a1, E.a2 + d * E.a1 * E.a1, E.a3, E.a4, E.a6 + d * E.a3 * E.a3)


def twist_higher(E: WeierstrassEq, kind: str, u: RatFunc) -> WeierstrassEq:
    """Cubic, sextic (j = 0) or quartic (j = 1728) twist, p >= 5."""
    if E.char < 5:
        raise ValueError("higher twists need characteristic >= 5")
    if u.is_zero():
        raise ValueError("twist parameter must be nonzero")
    S, _ = short_form(E)
    if kind in ("cubic", "sextic"):
        if not S.a4.is_zero():
            raise ValueError(f"{kind} twist needs j = 0 (y^2 = x^3 + a6)")
        factor = u * u if kind == "cubic" else u
        return WeierstrassEq(S.a1, S.a2, S.a3, S.a4, factor * S.a6)
    if kind == "quartic":
        if not S.a6.is_zero():
            raise ValueError("quartic twist needs j = 1728 (y^2 = x^3 + a4 x)")
        return WeierstrassEq(S.a1, S.a2, S.a3, u * S.a4, S.a6)
    raise ValueError(f"unknown twist kind {kind!r}")
