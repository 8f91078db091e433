"""Dense univariate polynomials over a finite field.

Coefficients are stored low degree first as a tuple of field ints with no
trailing zeros.  Over prime fields, products of large operands go through
Kronecker substitution into Python's big-int multiplication.
"""
from __future__ import annotations

from math import inf
from typing import Iterable, Sequence

from .field import FqField

_KRONECKER_MIN = 24


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _kronecker(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    la, lb = len(a), len(b)
    bound = min(la, lb) * (p - 1) ** 2
    nb = max(1, (bound.bit_length() + 7) // 8)
    A = int.from_bytes(b"".join(c.to_bytes(nb, "little") for c in a), "little")
    B = int.from_bytes(b"".join(c.to_bytes(nb, "little") for c in b), "little")
    n = la + lb - 1
    raw = (A * B).to_bytes(n * nb, "little")
    return [int.from_bytes(raw[i * nb:(i + 1) * nb], "little") % p for i in range(n)]


def _mul_lists(F: FqField, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    p = F.p
    if F.n == 1:
        if min(len(a), len(b)) >= _KRONECKER_MIN:
            return _kronecker(a, b, p)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return [c % p for c in out]
    out = [0] * (len(a) + len(b) - 1)
    mul, add = F.mul, F.add
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return out


class Poly:
    """A polynomial over ``F``; immutable, hashable."""

    __slots__ = ("F", "c")

    def __init__(self, F: FqField, coeffs: Iterable[int] = ()):
        self.F = F
        self.c = tuple(_trim(list(coeffs)))

    @classmethod
    def _raw(cls, F: FqField, coeffs: list[int]) -> "Poly":
        obj = object.__new__(cls)
        obj.F = F
        obj.c = tuple(_trim(coeffs))
        return obj

    @classmethod
    def const(cls, F: FqField, a: int) -> "Poly":
        return cls._raw(F, [a])

    @classmethod
    def x(cls, F: FqField) -> "Poly":
        return cls._raw(F, [0, 1])

    @classmethod
    def monomial(cls, F: FqField, a: int, k: int) -> "Poly":
        return cls._raw(F, [0] * k + [a])

    @classmethod
    def from_roots(cls, F: FqField, roots: Iterable[int]) -> "Poly":
        out = cls.const(F, 1)
        for r in roots:
            out = out * cls._raw(F, [F.neg(r), 1])
        return out

    # -- basic queries ----------------------------------------------------
    @property
    def deg(self) -> int:
        """Degree, with -1 for the zero polynomial (internal convention)."""
        return len(self.c) - 1

    @property
    def degree(self) -> float | int:
        """Degree with the -inf sentinel for zero."""
        return -inf if not self.c else len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return self.c == (1,)

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    @property
    def lc(self) -> int:
        return self.c[-1] if self.c else 0

    def coeff(self, i: int) -> int:
        return self.c[i] if 0 <= i < len(self.c) else 0

    def ord0(self) -> float | int:
        """Multiplicity of t as a factor (inf for zero)."""
        for i, a in enumerate(self.c):
            if a:
                return i
        return inf

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.c == other.c and self.F == other.F

    def __hash__(self) -> int:
        return hash(self.c)

    def __bool__(self) -> bool:
        return bool(self.c)

    # -- ring operations --------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(self.F, self.F.from_int(other))
        return NotImplemented

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        F = self.F
        if F.n == 1:
            p = F.p
            out = list(a)
            for i, y in enumerate(b):
                out[i] = (out[i] + y) % p
        else:
            out = list(a)
            for i, y in enumerate(b):
                out[i] = F.add(out[i], y)
        return Poly._raw(F, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        F = self.F
        return Poly._raw(F, [F.neg(x) for x in self.c])

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._raw(self.F, _mul_lists(self.F, self.c, other.c))

    __rmul__ = __mul__

    def scale(self, a: int) -> "Poly":
        if a == 0:
            return Poly._raw(self.F, [])
        if a == 1:
            return self
        F = self.F
        if F.n == 1:
            return Poly._raw(F, [x * a % F.p for x in self.c])
        return Poly._raw(F, [F.mul(x, a) for x in self.c])

    def shift(self, k: int) -> "Poly":
        """Multiply by t^k (k >= 0) or drop the k lowest terms (k < 0)."""
        if k >= 0:
            return Poly._raw(self.F, [0] * k + list(self.c)) if self.c else self
        return Poly._raw(self.F, list(self.c[-k:]))

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(self.F, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.F
        a = list(self.c)
        b = other.c
        db = len(b) - 1
        if len(a) - 1 < db:
            return Poly._raw(F, []), self
        inv = F.inv(b[-1])
        qout = [0] * (len(a) - db)
        if F.n == 1:
            p = F.p
            for k in range(len(a) - 1, db - 1, -1):
                c = a[k] * inv % p
                if c:
                    qout[k - db] = c
                    base = k - db
                    for i in range(db):
                        a[base + i] = (a[base + i] - c * b[i]) % p
                a[k] = 0
        else:
            for k in range(len(a) - 1, db - 1, -1):
                c = F.mul(a[k], inv)
                if c:
                    qout[k - db] = c
                    base = k - db
                    for i in range(db):
                        a[base + i] = F.sub(a[base + i], F.mul(c, b[i]))
                a[k] = 0
        return Poly._raw(F, qout), Poly._raw(F, a[:db])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "Poly":
        if not self.c or self.c[-1] == 1:
            return self
        return self.scale(self.F.inv(self.c[-1]))

    # -- evaluation and calculus -----------------------------------------
    def __call__(self, a: int) -> int:
        F = self.F
        acc = 0
        if F.n == 1:
            p = F.p
            for x in reversed(self.c):
                acc = (acc * a + x) % p
            return acc
        for x in reversed(self.c):
            acc = F.add(F.mul(acc, a), x)
        return acc

    def derivative(self) -> "Poly":
        F = self.F
        return Poly._raw(F, [F.mul(F.from_int(i), x) for i, x in enumerate(self.c)][1:])

    def map_coeffs(self, fn) -> "Poly":
        return Poly._raw(self.F, [fn(x) for x in self.c])

    def frobenius(self) -> "Poly":
        """f(t)^p = f^sigma(t^p)."""
        F, p = self.F, self.F.p
        out = [0] * (p * (len(self.c) - 1) + 1) if self.c else []
        for i, x in enumerate(self.c):
            out[p * i] = F.frobenius(x)
        return Poly._raw(F, out)

    def inflate(self, k: int) -> "Poly":
        """f(t^k)."""
        if not self.c:
            return self
        out = [0] * (k * (len(self.c) - 1) + 1)
        for i, x in enumerate(self.c):
            out[k * i] = x
        return Poly._raw(self.F, out)

    def reverse(self, n: int | None = None) -> "Poly":
        """t^n f(1/t), with n defaulting to the degree."""
        if n is None:
            n = self.deg
        pad = list(self.c) + [0] * (n + 1 - len(self.c))
        return Poly._raw(self.F, pad[::-1])

    def taylor_shift(self, c: int) -> "Poly":
        """f(t + c)."""
        if c == 0 or len(self.c) <= 1:
            return self
        F = self.F
        a = list(self.c)
        n = len(a)
        # repeated synthetic division
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                a[j] = F.add(a[j], F.mul(c, a[j + 1]))
        return Poly._raw(F, a)

    def valuation_at(self, c: int) -> float | int:
        """Multiplicity of the root c (inf for zero)."""
        if not self.c:
            return inf
        if c == 0:
            return self.ord0()
        return self.taylor_shift(c).ord0()

    # -- display ----------------------------------------------------------
    def to_str(self, var: str = "t") -> str:
        if not self.c:
            return "0"
        F = self.F
        terms = []
        for i in range(len(self.c) - 1, -1, -1):
            a = self.c[i]
            if not a:
                continue
            coeff = F.format(a)
            if F.n > 1 and ("+" in coeff):
                coeff = f"({coeff})"
            if i == 0:
                terms.append(coeff)
                continue
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if a == 1 else f"{coeff}*{mono}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Poly({self.to_str()})"

    def __str__(self) -> str:
        return self.to_str()


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero only if both are zero)."""
    if a.is_constant() and a.c:
        return Poly.const(a.F, 1)
    if b.is_constant() and b.c:
        return Poly.const(a.F, 1)
    while b.c:
        a, b = b, a % b
    return a.monic()


def poly_powmod(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly.const(base.F, 1)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        e >>= 1
        if e:
            base = (base * base) % mod
    return result
