"""Rational functions in one variable over F_q, and places of F_q(t).

A RatFunc is kept as num/den with den monic and gcd(num, den) = 1, so
equality is structural.  Only rational places are supported: t = c for a
constant c, and t = infinity.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import inf

from .field import FqField
from .poly import Poly, poly_gcd


class PoleError(ArithmeticError):
    """Residue requested at a place where the function has a pole."""


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        F = num.F
        if den is None:
            self.num, self.den = num, Poly.const(F, 1)
            return
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, Poly.const(F, 1)
            return
        if not den.is_constant():
            g = poly_gcd(num, den)
            if not g.is_one():
                num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lc
        if lc != 1:
            inv = F.inv(lc)
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFunc":
        obj = object.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, F: FqField, a: int) -> "RatFunc":
        return cls._raw(Poly.const(F, a), Poly.const(F, 1))

    @classmethod
    def from_int(cls, F: FqField, k: int) -> "RatFunc":
        return cls.const(F, F.from_int(k))

    @classmethod
    def t(cls, F: FqField) -> "RatFunc":
        return cls._raw(Poly.x(F), Poly.const(F, 1))

    @classmethod
    def monomial(cls, F: FqField, k: int, a: int = 1) -> "RatFunc":
        if a == 0:
            return cls.const(F, 0)
        if k >= 0:
            return cls._raw(Poly.monomial(F, a, k), Poly.const(F, 1))
        return cls._raw(Poly.const(F, a), Poly.monomial(F, 1, -k))

    @property
    def F(self) -> FqField:
        return self.num.F

    # -- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num.coeff(0)

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = RatFunc.from_int(self.F, other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num.c, self.den.c))

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, int):
            return RatFunc.from_int(self.F, other)
        if isinstance(other, Poly):
            return RatFunc._raw(other, Poly.const(other.F, 1))
        return NotImplemented

    def __add__(self, other) -> "RatFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero():
            return other
        if c.is_zero():
            return self
        if b.is_one() and d.is_one():
            return RatFunc._raw(a + c, b)
        if b == d:
            return RatFunc(a + c, b)
        g = poly_gcd(b, d)
        if g.is_one():
            return RatFunc._raw(a * d + c * b, b * d)
        b1, d1 = b.exact_div(g), d.exact_div(g)
        n = a * d1 + c * b1
        if n.is_zero():
            return RatFunc.const(self.F, 0)
        g2 = poly_gcd(n, g)
        if g2.is_one():
            return RatFunc._raw(n, b1 * d)
        return RatFunc._raw(n.exact_div(g2), b1 * d.exact_div(g2))

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other) -> "RatFunc":
        if isinstance(other, int):
            k = self.F.from_int(other)
            if k == 0:
                return RatFunc.const(self.F, 0)
            return RatFunc._raw(self.num.scale(k), self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return RatFunc.const(self.F, 0)
        if b.is_one() and d.is_one():
            return RatFunc._raw(a * c, b)
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        if not g1.is_one():
            a, d = a.exact_div(g1), d.exact_div(g1)
        if not g2.is_one():
            c, b = c.exact_div(g2), b.exact_div(g2)
        num, den = a * c, b * d
        if den.lc != 1:
            inv = self.F.inv(den.lc)
            num, den = num.scale(inv), den.scale(inv)
        return RatFunc._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        num, den = self.den, self.num
        lc = den.lc
        if lc != 1:
            inv = self.F.inv(lc)
            num, den = num.scale(inv), den.scale(inv)
        return RatFunc._raw(num, den)

    def __truediv__(self, other) -> "RatFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return self.inverse() * other

    def __pow__(self, e: int) -> "RatFunc":
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return RatFunc.const(self.F, 1)
        # coprimality is preserved by powers
        return RatFunc._raw(self.num ** e, self.den ** e)

    def shift(self, k: int) -> "RatFunc":
        """Multiply by t^k."""
        if k == 0 or self.num.is_zero():
            return self
        num, den = self.num, self.den
        if k > 0:
            d0 = den.ord0()
            cancel = min(k, d0)
            return RatFunc._raw(num.shift(k - cancel), den.shift(-cancel))
        k = -k
        n0 = num.ord0()
        cancel = min(k, n0)
        return RatFunc._raw(num.shift(-cancel), den.shift(k - cancel))

    def frobenius(self) -> "RatFunc":
        """The p-th power, computed coefficientwise."""
        return RatFunc._raw(self.num.frobenius(), self.den.frobenius())

    def map_coeffs(self, embed, F: FqField) -> "RatFunc":
        """Transport along a field embedding into F."""
        return RatFunc(Poly(F, [embed(a) for a in self.num.c]), Poly(F, [embed(a) for a in self.den.c]))

    def lift_to(self, F: FqField) -> "RatFunc":
        if F == self.F:
            return self
        return self.map_coeffs(self.F.embedding_into(F), F)

    # -- local data at t = 0 (the workhorse for Tate's algorithm) ----------
    def ord0(self) -> float | int:
        if self.num.is_zero():
            return inf
        return self.num.ord0() - self.den.ord0()

    def value0(self) -> int:
        """Residue at t = 0; requires ord0 >= 0."""
        if self.num.is_zero():
            return 0
        d0 = self.den.ord0()
        n0 = self.num.ord0()
        if n0 < d0:
            raise PoleError(f"{self} has a pole at t=0")
        if n0 > d0:
            return 0
        # both zero since the fraction is reduced
        return self.F.div(self.num.c[0], self.den.c[0])

    # -- display ----------------------------------------------------------
    def to_str(self, var: str = "t") -> str:
        n = self.num.to_str(var)
        if self.den.is_one():
            return n
        d = self.den.to_str(var)
        if len(self.num.c) > 1 and sum(1 for a in self.num.c if a) > 1:
            n = f"({n})"
        if sum(1 for a in self.den.c if a) > 1 or (self.den.lc != 1):
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self) -> str:
        return f"RatFunc({self.to_str()})"

    def __str__(self) -> str:
        return self.to_str()


@dataclass(frozen=True)
class Place:
    """A rational place of F_q(t): t = c, or t = infinity."""

    kind: str
    c: int = 0

    def __post_init__(self):
        if self.kind not in ("finite", "infinity"):
            raise ValueError(f"unknown place kind {self.kind!r}")

    @classmethod
    def finite(cls, c: int = 0) -> "Place":
        return cls("finite", c)

    @classmethod
    def infinity(cls) -> "Place":
        return cls("infinity")

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinity"

    def label(self, F: FqField | None = None) -> str:
        if self.is_infinite:
            return "inf"
        return F.format(self.c) if F is not None else str(self.c)

    def __str__(self) -> str:
        return "t=inf" if self.is_infinite else f"t={self.c}"


ZERO = Place.finite(0)
INFINITY = Place.infinity()


def _as_place(v) -> Place:
    if v is None:
        return ZERO
    return v


def valuation(f: RatFunc, v: Place | None = None) -> float | int:
    """ord_v(f); +inf for f = 0."""
    v = _as_place(v)
    if f.is_zero():
        return inf
    if v.is_infinite:
        return f.den.deg - f.num.deg
    if v.c == 0:
        return f.ord0()
    return f.num.valuation_at(v.c) - f.den.valuation_at(v.c)


def residue_at(f: RatFunc, v: Place | None = None) -> int:
    """Value of f at the place; a PoleError if f has a pole there."""
    v = _as_place(v)
    if f.is_zero():
        return 0
    val = valuation(f, v)
    if val < 0:
        raise PoleError(f"{f} has a pole at {v}")
    if val > 0:
        return 0
    F = f.F
    if v.is_infinite:
        return F.div(f.num.lc, f.den.lc)
    return F.div(f.num(v.c), f.den(v.c))


def _homogeneous_eval(P: Poly, A: Poly, B: Poly, n: int) -> Poly:
    """B^n * P(A/B) for n >= deg P, as a polynomial."""
    F = P.F
    if P.is_zero():
        return P
    d = P.deg
    Bpow = [Poly.const(F, 1)]
    for _ in range(n):
        Bpow.append(Bpow[-1] * B)
    # Horner on sum_i p_i A^i B^(d-i)
    acc = Poly.const(F, P.c[d])
    for i in range(d - 1, -1, -1):
        acc = acc * A
        if P.c[i]:
            acc = acc + Bpow[d - i].scale(P.c[i])
    return acc * Bpow[n - d] if n > d else acc


def substitute(f: RatFunc, g: RatFunc) -> RatFunc:
    """The composition f(g) for a nonconstant g."""
    if g.is_constant():
        raise ValueError("substitution by a constant is not a change of variable")
    if f.is_constant():
        return f
    F = f.F
    A, B = g.num, g.den
    # monomial substitutions t -> s^k are frequent; keep them cheap
    if B.is_one() and len(A.c) - 1 == A.ord0() and A.lc == 1:
        k = A.deg
        return RatFunc._raw(f.num.inflate(k), f.den.inflate(k))
    if A.is_one() and len(B.c) - 1 == B.ord0() and B.lc == 1 and B.deg == 1:
        # t -> 1/s
        dn, dd = f.num.deg, f.den.deg
        num, den = f.num.reverse(), f.den.reverse()
        if dn > dd:
            den = den.shift(dn - dd)
        else:
            num = num.shift(dd - dn)
        return RatFunc(num, den)
    dn, dd = f.num.deg, f.den.deg
    n = max(dn, dd)
    num = _homogeneous_eval(f.num, A, B, n)
    den = _homogeneous_eval(f.den, A, B, n)
    return RatFunc(num, den)


def to_local(f: RatFunc, v: Place | None = None) -> RatFunc:
    """Rewrite f in a local parameter s with the place at s = 0."""
    v = _as_place(v)
    if v.is_infinite:
        return substitute(f, RatFunc.monomial(f.F, -1))
    if v.c == 0:
        return f
    return RatFunc(f.num.taylor_shift(v.c), f.den.taylor_shift(v.c))
