"""Finite fields F_{p^n} in a fixed polynomial basis.

An element of F_{p^n} = F_p[g]/(m(g)) is stored as a plain int in [0, q):
the base-p digits are the coefficients of 1, g, g^2, ...  The prime
subfield is therefore {0, ..., p-1} with the obvious encoding, and
``FqField.from_int`` is just reduction mod p.

The modulus m is the least monic irreducible polynomial of degree n when
the low coefficients (c_0, ..., c_{n-1}) are read as a base-p integer.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Iterator, Sequence

_TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


# -- dense polynomial helpers over F_p (lists, low degree first) -------------

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: Sequence[int], p: int) -> list[int]:
    a = _ptrim(list(a))
    df = len(f) - 1
    inv = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _ptrim(a)
    return a


def _pmulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod([c % p for c in out], f, p)


def _ppowmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(list(a), f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _ptrim(out)


def is_irreducible_mod_p(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic f over F_p."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    # x^(p^n) == x mod f
    xq = x
    for _ in range(n):
        xq = _ppowmod(xq, p, f, p)
    if _psub(xq, x, p):
        return False
    for r in prime_factors(n):
        h = x
        for _ in range(n // r):
            h = _ppowmod(h, p, f, p)
        if len(_pgcd(list(f), _psub(h, x, p), p)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def least_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Least monic irreducible of degree n over F_p (coefficients low first)."""
    for k in range(p ** n):
        low = []
        m = k
        for _ in range(n):
            m, d = divmod(m, p)
            low.append(d)
        f = tuple(low) + (1,)
        if is_irreducible_mod_p(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FqField:
    """The finite field F_{p^n}; elements are ints in [0, p^n)."""

    __slots__ = ("p", "n", "q", "modulus", "_log", "_exp", "_digits")

    def __init__(self, p: int, n: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = least_irreducible(p, n)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        if not is_irreducible_mod_p(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.n = n
        self.q = p ** n
        self.modulus = modulus
        self._log = None
        self._exp = None
        self._digits = None
        if n > 1 and self.q <= _TABLE_LIMIT:
            self._build_tables()

    # -- identity ---------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        return isinstance(other, FqField) and self.p == other.p and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        if self.n == 1:
            return f"FqField({self.p})"
        return f"FqField({self.p}, {self.n})"

    def __str__(self) -> str:
        return f"F_{self.q}"

    @property
    def char(self) -> int:
        return self.p

    @property
    def deg(self) -> int:
        return self.n

    # -- encoding ---------------------------------------------------------
    def digits(self, a: int) -> tuple[int, ...]:
        if self._digits is not None:
            return self._digits[a]
        out = []
        for _ in range(self.n):
            a, d = divmod(a, self.p)
            out.append(d)
        return tuple(out)

    def from_digits(self, ds: Sequence[int]) -> int:
        a = 0
        for d in reversed(ds):
            a = a * self.p + (d % self.p)
        return a

    def from_int(self, k: int) -> int:
        return k % self.p

    @property
    def gen(self) -> int:
        """The class of g in F_p[g]/(m); only meaningful for n > 1."""
        if self.n == 1:
            raise ValueError("prime field has no declared generator")
        return self.p

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    # -- arithmetic -------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self.digits(a), self.digits(b)
        return self.from_digits([x + y for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.n == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.from_digits([-x for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self.digits(a), self.digits(b)
        return self.from_digits([x - y for x, y in zip(da, db)])

    def mul(self, a: int, b: int) -> int:
        if self.n == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._slow_mul(a, b)

    def _slow_mul(self, a: int, b: int) -> int:
        prod = _pmulmod(list(self.digits(a)), list(self.digits(b)), self.modulus, self.p)
        return self.from_digits(prod + [0] * (self.n - len(prod)))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in finite field")
        if self.n == 1:
            return pow(a, self.p - 2, self.p)
        if self._log is not None:
            return self._exp[(-self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.n == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 1 if e == 0 else 0
        if self._log is not None:
            return self._exp[self._log[a] * e % (self.q - 1)]
        result, base = 1, a
        while e:
            if e & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return result

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def pth_root(self, a: int) -> int:
        """Inverse of Frobenius; exists since finite fields are perfect."""
        return self.pow(a, self.q // self.p)

    def is_square(self, a: int) -> bool:
        if a == 0 or self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def primitive_element(self) -> int:
        order = self.q - 1
        factors = prime_factors(order)
        for a in range(1, self.q):
            if all(self.pow(a, order // r) != 1 for r in factors):
                return a
        raise AssertionError("no primitive element")  # unreachable

    def roots_of_unity(self, m: int) -> list[int]:
        """All m-th roots of unity, requires m | q-1."""
        if (self.q - 1) % m:
            raise ValueError(f"F_{self.q} does not contain the {m}-th roots of unity")
        z = self.pow(self.primitive_element(), (self.q - 1) // m)
        return sorted(self.pow(z, k) for k in range(m))

    def _build_tables(self) -> None:
        q = self.q
        self._digits = [None] * q
        for a in range(q):
            out, m = [], a
            for _ in range(self.n):
                m, d = divmod(m, self.p)
                out.append(d)
            self._digits[a] = tuple(out)
        # find a primitive element by brute force on the slow multiplier
        order = q - 1
        factors = prime_factors(order)
        prim = None
        for a in range(2, q):
            if all(self._slow_pow(a, order // r) != 1 for r in factors):
                prim = a
                break
        exp = [0] * order
        log = [0] * q
        x = 1
        for k in range(order):
            exp[k] = x
            log[x] = k
            x = self._slow_mul(x, prim)
        self._exp, self._log = exp, log

    def _slow_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return result

    # -- extensions -------------------------------------------------------
    def extension(self, m: int) -> "FqField":
        """F_{q^m}, with its own least modulus over F_p."""
        return prime_field_extension(self.p, self.n * m)

    def embedding_into(self, other: "FqField"):
        """Deterministic embedding self -> other (least image of g)."""
        if other.p != self.p or other.n % self.n:
            raise ValueError(f"{self} does not embed into {other}")
        if self.n == 1:
            return lambda a: a
        if other == self:
            return lambda a: a
        image = None
        for c in range(other.q):
            acc = 0
            for coeff in reversed(self.modulus):
                acc = other.add(other.mul(acc, c), coeff)
            if acc == 0:
                image = c
                break
        powers = [1]
        for _ in range(self.n - 1):
            powers.append(other.mul(powers[-1], image))

        def embed(a: int) -> int:
            acc = 0
            for d, gp in zip(self.digits(a), powers):
                if d:
                    acc = other.add(acc, other.mul(d, gp))
            return acc

        return embed

    def format(self, a: int) -> str:
        if self.n == 1:
            return str(a)
        terms = []
        for i, d in reversed(list(enumerate(self.digits(a)))):
            if d == 0:
                continue
            mono = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
            if not mono:
                terms.append(str(d))
            elif d == 1:
                terms.append(mono)
            else:
                terms.append(f"{d}*{mono}")
        return "+".join(terms) if terms else "0"


@lru_cache(maxsize=None)
def prime_field_extension(p: int, n: int) -> FqField:
    return FqField(p, n)


def GF(p: int, n: int = 1) -> FqField:
    """Cached constructor; fields are immutable so sharing is safe."""
    return prime_field_extension(p, n)


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1
