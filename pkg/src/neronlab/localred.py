"""Tate's algorithm at a rational place of F_q(t), Kodaira symbols, and
Ogg's formula bookkeeping.

The algorithm body is the characteristic-free one (all sub-cases for p = 2
and p = 3 included).  It works in the local ring at s = 0, where s is the
local parameter of the place (s = t - c, or s = 1/t at infinity); every
coefficient stays an exact rational function throughout.  The residue
field F_q is perfect, so every root the algorithm asks for (p-th roots,
double and triple roots of the auxiliary polynomials) is rational over
F_q and no constant-field extension is ever triggered.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from math import inf
from typing import Optional

from .algebra import RatFunc
from .algebra.ratfunc import Place, ZERO, residue_at, substitute, valuation
from .weierstrass import SingularCurveError, Transform, WeierstrassEq

_FAMILIES = ("I", "II", "III", "IV", "I*", "IV*", "III*", "II*")
_COMPONENTS = {"II": 1, "III": 2, "IV": 3, "IV*": 7, "III*": 8, "II*": 9}
_PHI = {"II": 1, "III": 2, "IV": 3, "IV*": 3, "III*": 2, "II*": 1}


@dataclass(frozen=True, order=True)
class KodairaSymbol:
    family: str
    n: int = 0

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown Kodaira family {self.family!r}")
        if self.n < 0 or (self.n and self.family not in ("I", "I*")):
            raise ValueError(f"bad index {self.n} for {self.family}")

    @classmethod
    def parse(cls, text: str) -> "KodairaSymbol":
        s = text.strip().replace("_", "").replace("^", "").replace("star", "*")
        m = re.fullmatch(r"I(\d+)(\*?)", s)
        if m:
            return cls("I*" if m.group(2) else "I", int(m.group(1)))
        if s in _FAMILIES and s not in ("I", "I*"):
            return cls(s)
        raise ValueError(f"cannot parse Kodaira symbol {text!r}")

    @property
    def components(self) -> int:
        if self.family == "I":
            return max(self.n, 1)
        if self.family == "I*":
            return self.n + 5
        return _COMPONENTS[self.family]

    @property
    def epsilon(self) -> int:
        if self.family == "I":
            return 0 if self.n == 0 else 1
        return 2

    @property
    def is_additive(self) -> bool:
        return self.epsilon == 2

    @property
    def phi_order(self) -> int:
        """Order of the component group over an algebraically closed residue field."""
        if self.family == "I":
            return max(self.n, 1)
        if self.family == "I*":
            return 4
        return _PHI[self.family]

    @property
    def phi_structure(self) -> str:
        if self.family == "I":
            return "trivial" if self.n <= 1 else f"Z/{self.n}"
        if self.family == "I*":
            return "Z/2xZ/2" if self.n % 2 == 0 else "Z/4"
        order = _PHI[self.family]
        return "trivial" if order == 1 else f"Z/{order}"

    def __str__(self) -> str:
        if self.family == "I":
            return f"I{self.n}"
        if self.family == "I*":
            return f"I{self.n}*"
        return self.family


def K(text: str) -> KodairaSymbol:
    """Shorthand for KodairaSymbol.parse."""
    return KodairaSymbol.parse(text)


@dataclass(frozen=True)
class ReductionData:
    kodaira: KodairaSymbol
    nu_delta: int
    m: int
    epsilon: int
    delta: int
    f: Optional[int] = None
    phi_order: Optional[int] = None
    restarts: Optional[int] = None
    minimal_eq: Optional[WeierstrassEq] = None
    ext_degree: int = 1
    place: Place = ZERO
    transform: Optional[Transform] = field(default=None, compare=False, repr=False)

    @property
    def phi_structure(self) -> str:
        return self.kodaira.phi_structure

    def summary(self) -> tuple:
        return (str(self.kodaira), self.nu_delta, self.delta)

    def to_dict(self) -> dict:
        return {
            "kodaira": str(self.kodaira),
            "nu_delta": self.nu_delta,
            "m": self.m,
            "f": self.f,
            "delta": self.delta,
            "phi": self.phi_order,
            "restarts": self.restarts,
            "ext_degree": self.ext_degree,
            "minimal_eq": None if self.minimal_eq is None else self.minimal_eq.literal(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _from_local(f: RatFunc, v: Place) -> RatFunc:
    if v.is_infinite:
        return substitute(f, RatFunc.monomial(f.F, -1))
    if v.c == 0:
        return f
    return RatFunc(f.num.taylor_shift(f.F.neg(v.c)), f.den.taylor_shift(f.F.neg(v.c)))


class _Local:
    """Helpers for the local ring at s = 0 with residue field F."""

    def __init__(self, F):
        self.F = F
        self.p = F.p
        self.pi = RatFunc.t(F)

    def lift(self, c: int) -> RatFunc:
        return RatFunc.const(self.F, c)

    def red(self, x: RatFunc) -> int:
        return x.value0()

    def preduce(self, x: RatFunc) -> RatFunc:
        return self.lift(x.value0())

    def pinv(self, x: RatFunc) -> RatFunc:
        return self.lift(self.F.inv(x.value0()))

    def proot(self, x: RatFunc) -> RatFunc:
        # only p-th roots are ever needed; Frobenius is bijective on F_q
        return self.lift(self.F.pth_root(x.value0()))

    def const(self, k: int) -> RatFunc:
        return RatFunc.from_int(self.F, k)

    def inv_int(self, k: int) -> RatFunc:
        return self.lift(self.F.inv(self.F.from_int(k)))


def _pdiv(x: RatFunc) -> bool:
    return x.ord0() > 0


def _integralize(E: WeierstrassEq) -> tuple[WeierstrassEq, Transform]:
    F = E.F
    k = 0
    for i, a in zip((1, 2, 3, 4, 6), E.coeffs):
        v = a.ord0()
        if v < 0:
            k = max(k, -(v // i))  # ceil(-v / i)
    T = Transform.identity(F)
    if k:
        T = Transform(RatFunc.monomial(F, -k), T.r, T.s, T.w)
        E = E.apply(T)
    return E, T


def _scale_exponent(E: WeierstrassEq) -> int:
    k = inf
    for i, a in zip((1, 2, 3, 4, 6), E.coeffs):
        v = a.ord0()
        if v != inf:
            k = min(k, v // i)
    return int(k)


def _tate_pass(E: WeierstrassEq, L: _Local):
    """One run of the algorithm; returns (kind, E, T, symbol) with kind in
    {"done", "restart"}."""
    F, p, pi = L.F, L.p, L.pi
    T = Transform.identity(F)
    one, zero = L.const(1), L.const(0)

    def rst(E, r, s, w):
        nonlocal T
        step = Transform(one, r, s, w)
        T = T.then(step)
        return E.apply(step)

    inv = E.invariants()
    val_disc = inv.disc.ord0()
    if val_disc == 0:
        return "done", E, T, KodairaSymbol("I", 0)

    a1, a2, a3, a4, a6 = E.coeffs
    b2, b4, b6 = inv.b2, inv.b4, inv.b6
    # move the singular point of the reduction to (0, 0)
    if p == 2:
        if _pdiv(b2):
            r = L.proot(a4)
            w = L.proot(((r + a2) * r + a4) * r + a6)
        else:
            tmp = L.pinv(a1)
            r = tmp * a3
            w = tmp * (a4 + r * r)
    elif p == 3:
        if _pdiv(b2):
            r = L.proot(-b6)
        else:
            r = -L.pinv(b2) * b4
        w = a1 * r + a3
    else:
        c4, c6 = inv.c4, inv.c6
        if _pdiv(c4):
            r = -L.inv_int(12) * b2
        else:
            r = -L.pinv(12 * c4) * (c6 + b2 * c4)
        w = -L.inv_int(2) * (a1 * r + a3)
    r, w = L.preduce(r), L.preduce(w)
    E = rst(E, r, zero, w)
    a1, a2, a3, a4, a6 = E.coeffs
    inv = E.invariants()
    b2, b6, b8 = inv.b2, inv.b6, inv.b8

    if not _pdiv(b2):
        return "done", E, T, KodairaSymbol("I", val_disc)
    if a6.ord0() < 2:
        return "done", E, T, KodairaSymbol("II")
    if b8.ord0() < 3:
        return "done", E, T, KodairaSymbol("III")
    if b6.ord0() < 3:
        return "done", E, T, KodairaSymbol("IV")

    # now make p | a1, a2; p^2 | a3, a4; p^3 | a6
    if p == 2:
        s = L.proot(a2)
        w = pi * L.proot(a6.shift(-2))
    elif p == 3:
        s, w = a1, a3
    else:
        half = L.inv_int(2)
        s, w = -a1 * half, -a3 * half
    E = rst(E, zero, s, w)
    a1, a2, a3, a4, a6 = E.coeffs

    # the cubic T^3 + b T^2 + c T + d
    b, c, d = a2.shift(-1), a4.shift(-2), a6.shift(-3)
    disc3 = 27 * d * d - b * b * c * c + 4 * b ** 3 * d - 18 * b * c * d + 4 * c ** 3
    x = 3 * c - b * b
    if _pdiv(disc3):
        sw = 3 if _pdiv(x) else 2
    else:
        sw = 1

    if sw == 1:
        return "done", E, T, KodairaSymbol("I*", 0)

    if sw == 2:
        # move the double root to T = 0
        if p == 2:
            r = L.proot(c)
        elif p == 3:
            r = c * L.pinv(b)
        else:
            r = (b * c - 9 * d) * L.pinv(2 * x)
        E = rst(E, pi * L.preduce(r), zero, zero)
        a1, a2, a3, a4, a6 = E.coeffs
        m, kx, ky = 1, 2, 2
        while True:
            xa3 = a3.shift(-ky)
            xa6 = a6.shift(-(kx + ky))
            if not _pdiv(xa3 * xa3 + 4 * xa6):
                break
            if p == 2:
                w = L.proot(xa6)
            else:
                w = L.preduce(-xa3 * L.inv_int(2))
            E = rst(E, zero, zero, w.shift(ky))
            a1, a2, a3, a4, a6 = E.coeffs
            ky += 1
            m += 1
            xa2 = a2.shift(-1)
            xa4 = a4.shift(-(1 + kx))
            xa6 = a6.shift(-(kx + ky))
            if not _pdiv(xa4 * xa4 - 4 * xa2 * xa6):
                break
            if p == 2:
                r = L.proot(xa6 * L.pinv(xa2))
            else:
                r = L.preduce(-xa4 * L.pinv(2 * xa2))
            E = rst(E, r.shift(kx), zero, zero)
            a1, a2, a3, a4, a6 = E.coeffs
            kx += 1
            m += 1
        return "done", E, T, KodairaSymbol("I*", m)

    # triple root: move it to T = 0
    if p == 2:
        r = b
    elif p == 3:
        r = L.lift(L.F.pth_root(L.F.neg(L.red(d))))
    else:
        r = -b * L.inv_int(3)
    E = rst(E, pi * L.preduce(r), zero, zero)
    a1, a2, a3, a4, a6 = E.coeffs
    x3, x6 = a3.shift(-2), a6.shift(-4)
    if not _pdiv(x3 * x3 + 4 * x6):
        return "done", E, T, KodairaSymbol("IV*")
    if p == 2:
        w = L.proot(x6)
    else:
        w = L.preduce(x3 * L.inv_int(2))
    E = rst(E, zero, zero, -(w.shift(2)))
    a1, a2, a3, a4, a6 = E.coeffs
    if a4.ord0() < 4:
        return "done", E, T, KodairaSymbol("III*")
    if a6.ord0() < 6:
        return "done", E, T, KodairaSymbol("II*")
    return "restart", E, T, None


def tate_reduce(E: WeierstrassEq, v: Place | None = None) -> ReductionData:
    """Local reduction data of E at the place v (default t = 0)."""
    v = ZERO if v is None else v
    if E.discriminant().is_zero():
        raise SingularCurveError(f"singular cubic: {E}")
    F = E.F
    L = _Local(F)
    cur = E.to_local(v)
    cur, T = _integralize(cur)
    restarts = 0
    k = _scale_exponent(cur)
    if k > 0:
        zero = RatFunc.const(F, 0)
        step = Transform(RatFunc.monomial(F, k), zero, zero, zero)
        cur = cur.apply(step)
        T = T.then(step)
        restarts += k
    while True:
        kind, cur, Tpass, symbol = _tate_pass(cur, L)
        T = T.then(Tpass)
        if kind == "done":
            break
        zero = RatFunc.const(F, 0)
        step = Transform(L.pi, zero, zero, zero)
        cur = cur.apply(step)
        T = T.then(step)
        restarts += 1
    nu = cur.discriminant().ord0()
    # prefer the plain rescaling of the input when it is already integral
    zero = RatFunc.const(F, 0)
    scaled_T = Transform(T.u, zero, zero, zero)
    scaled = E.to_local(v).apply(scaled_T)
    if all(a.ord0() >= 0 for a in scaled.coeffs):
        cur, T = scaled, scaled_T
    m = symbol.components
    eps = symbol.epsilon
    f = nu - m + 1
    back = lambda a: _from_local(a, v)  # noqa: E731
    minimal = cur.map_coeffs(back)
    T_global = Transform(back(T.u), back(T.r), back(T.s), back(T.w))
    return ReductionData(
        kodaira=symbol,
        nu_delta=nu,
        m=m,
        epsilon=eps,
        delta=f - eps,
        f=f,
        phi_order=symbol.phi_order,
        restarts=restarts,
        minimal_eq=minimal,
        ext_degree=1,
        place=v,
        transform=T_global,
    )


def is_integral(E: WeierstrassEq, v: Place | None = None) -> bool:
    return all(valuation(a, v) >= 0 for a in E.coeffs)


def is_minimal(E: WeierstrassEq, v: Place | None = None) -> bool:
    """Integral at v and Tate's algorithm needs no rescaling."""
    return is_integral(E, v) and tate_reduce(E, v).restarts == 0


def ogg_consistency(rd: ReductionData) -> bool:
    sym = rd.kodaira
    if rd.m != sym.components or rd.epsilon != sym.epsilon:
        return False
    if rd.delta < 0 or rd.nu_delta != rd.epsilon + rd.delta + rd.m - 1:
        return False
    if rd.f is not None and rd.f != rd.epsilon + rd.delta:
        return False
    if rd.phi_order is not None:
        if sym.is_additive and rd.phi_order not in (1, 2, 3, 4):
            return False
        if rd.phi_order != sym.phi_order:
            return False
    return True


POTENTIALLY_ORDINARY = "potentially_ordinary"
POTENTIALLY_SUPERSINGULAR = "potentially_supersingular"
POTENTIALLY_MULTIPLICATIVE = "potentially_multiplicative"


def potential_reduction(E: WeierstrassEq, v: Place | None = None) -> str:
    from .torsion import is_supersingular_j

    j = E.j
    if j is None:
        raise SingularCurveError(f"singular cubic: {E}")
    if valuation(j, v) < 0:
        return POTENTIALLY_MULTIPLICATIVE
    if is_supersingular_j(residue_at(j, v), E.F):
        return POTENTIALLY_SUPERSINGULAR
    return POTENTIALLY_ORDINARY
