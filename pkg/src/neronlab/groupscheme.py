"""Finite computations around twisted forms of mu_p.

* a truncated polynomial ring F_q[x1..xk]/(x1^p, ..., xk^p);
* the Oort-Tate composition law
      a * b = a + b + (1/tau) sum_{i=1}^{p-1} a^i b^(p-i) / (i! (p-i)!)
  on nilpotents with a^p = 0, and the truncated exponential;
* the [p]-operation of the rank one twisted Lie algebra;
* the count of free mu_{p-1}-orbits on primes of k[X] under X -> zeta X.

Group axioms are checked on the generic elements x1, x2, x3 of the
truncated ring, which makes each check a full polynomial identity.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import factorial

from .algebra import FqField, GF, RatFunc

MAX_VARS = 3
MAX_P = 7


class TruncRing:
    """F[x1..xk]/(xi^p) with p = char F."""

    def __init__(self, F: FqField, k: int = 1):
        if not 1 <= k <= MAX_VARS:
            raise ValueError(f"between 1 and {MAX_VARS} variables supported")
        if F.p > MAX_P:
            raise ValueError(f"p <= {MAX_P} supported")
        self.F = F
        self.p = F.p
        self.k = k

    def __eq__(self, other):
        return isinstance(other, TruncRing) and (self.F, self.k) == (other.F, other.k)

    def __hash__(self):
        return hash((self.F, self.k))

    def elem(self, terms: dict) -> "TruncElem":
        F = self.F
        clean = {}
        for mono, c in terms.items():
            mono = tuple(mono)
            if len(mono) != self.k:
                raise ValueError("monomial of wrong arity")
            if any(e >= self.p for e in mono):
                continue
            c = c % F.q if F.n == 1 else c
            if c:
                clean[mono] = c
        return TruncElem(self, clean)

    def zero(self) -> "TruncElem":
        return TruncElem(self, {})

    def scalar(self, c: int) -> "TruncElem":
        return self.elem({(0,) * self.k: c})

    def one(self) -> "TruncElem":
        return self.scalar(1)

    def var(self, i: int) -> "TruncElem":
        mono = [0] * self.k
        mono[i] = 1
        return self.elem({tuple(mono): 1})

    def gens(self) -> list["TruncElem"]:
        return [self.var(i) for i in range(self.k)]

    def monomials(self):
        return product(range(self.p), repeat=self.k)


@dataclass(frozen=True, eq=False)
class TruncElem:
    ring: TruncRing
    terms: dict

    def _same(self, other: "TruncElem") -> None:
        if self.ring != other.ring:
            raise ValueError("elements of different truncated rings")

    def __eq__(self, other):
        return isinstance(other, TruncElem) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TruncElem") -> "TruncElem":
        self._same(other)
        F = self.ring.F
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = F.add(out.get(m, 0), c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return TruncElem(self.ring, out)

    def __neg__(self) -> "TruncElem":
        F = self.ring.F
        return TruncElem(self.ring, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "TruncElem") -> "TruncElem":
        return self + (-other)

    def __mul__(self, other) -> "TruncElem":
        F, p = self.ring.F, self.ring.p
        if isinstance(other, int):
            return TruncElem(self.ring, {m: F.mul(c, other) for m, c in self.terms.items() if F.mul(c, other)})
        self._same(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                if any(e >= p for e in m):
                    continue
                s = F.add(out.get(m, 0), F.mul(c1, c2))
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return TruncElem(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncElem":
        if n < 0:
            raise ValueError("negative power in a truncated ring")
        acc, base = self.ring.one(), self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def constant(self) -> int:
        return self.terms.get((0,) * self.ring.k, 0)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = [f"x{i + 1}" for i in range(self.ring.k)]
        parts = []
        for m in sorted(self.terms, key=lambda m: (sum(m), m)):
            c = self.ring.F.format(self.terms[m])
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e)
            if not mono:
                parts.append(c)
            elif c == "1":
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def _inv_factorial(F: FqField, n: int) -> int:
    # n < p, so n! is a unit
    return F.inv(F.from_int(factorial(n)))


def oort_tate_add(a: TruncElem, b: TruncElem, tau: int) -> TruncElem:
    R = a.ring
    F, p = R.F, R.p
    if tau == 0:
        raise ValueError("tau must be nonzero")
    if not (a ** p).is_zero() or not (b ** p).is_zero():
        raise ValueError("operands must satisfy a^p = 0")
    itau = F.inv(tau)
    s = R.zero()
    for i in range(1, p):
        coeff = F.mul(_inv_factorial(F, i), _inv_factorial(F, p - i))
        s = s + (a ** i) * (b ** (p - i)) * coeff
    return a + b + s * itau


def oort_tate_neg(a: TruncElem) -> TruncElem:
    # a * (-a) = a + (-a) + (1/tau) a^p (...) and a^p = 0
    return -a


def oort_tate_multiple(a: TruncElem, n: int, tau: int) -> TruncElem:
    acc = a.ring.zero()
    for _ in range(n):
        acc = oort_tate_add(acc, a, tau)
    return acc


def truncated_exp(a: TruncElem) -> TruncElem:
    R = a.ring
    F, p = R.F, R.p
    if not (a ** p).is_zero():
        raise ValueError("truncated_exp needs a^p = 0")
    out, power = R.one(), R.one()
    for i in range(1, p):
        power = power * a
        out = out + power * _inv_factorial(F, i)
    return out


def twisted_lie_power(tau: RatFunc, coeff: RatFunc) -> RatFunc:
    """(c u)^[p] = c^p tau^{-1} u in the basis u with u^[p] = tau^{-1} u."""
    if tau.is_zero():
        raise ValueError("tau must be nonzero")
    p = tau.F.p
    return (coeff ** p) / tau


@dataclass
class AxiomReport:
    p: int
    tau: int
    field: str
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {"p": self.p, "tau": self.tau, "field": self.field, "checks": self.checks, "ok": self.ok}


def check_axioms(F: FqField, tau: int) -> AxiomReport:
    R = TruncRing(F, 3)
    x1, x2, x3 = R.gens()
    add = lambda a, b: oort_tate_add(a, b, tau)  # noqa: E731
    zero = R.zero()
    checks = {
        "associative": add(add(x1, x2), x3) == add(x1, add(x2, x3)),
        "commutative": add(x1, x2) == add(x2, x1),
        "identity": add(x1, zero) == x1 and add(zero, x1) == x1,
        "inverse": add(x1, oort_tate_neg(x1)).is_zero(),
        "closed": (add(x1, x2) ** F.p).is_zero(),
        "p_fold_zero": oort_tate_multiple(x1, F.p, tau).is_zero(),
    }
    if tau == 1:
        checks["exp_homomorphism"] = truncated_exp(x1) * truncated_exp(x2) == truncated_exp(add(x1, x2))
        checks["exp_order_p"] = truncated_exp(x1) ** F.p == R.one()
    return AxiomReport(F.p, tau, f"F_{F.q}", checks)


# --- free orbits on primes of k[X] ---------------------------------------

def _monic_polys(F: FqField, d: int):
    for low in product(range(F.q), repeat=d):
        yield tuple(low) + (1,)


def _polymul(F: FqField, a: tuple, b: tuple) -> tuple:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return tuple(out)


def monic_irreducibles(F: FqField, bound: int) -> list[tuple]:
    """Monic irreducibles of degree <= bound (coefficients low first), by sieving."""
    irreducible: list[tuple] = []
    reducible: set[tuple] = set()
    for d in range(1, bound + 1):
        # products f*g with deg f + deg g = d of already known monic polys
        for f in irreducible:
            e = len(f) - 1
            if e > d - 1:
                continue
            for g in _monic_polys(F, d - e):
                reducible.add(_polymul(F, f, g))
        for h in _monic_polys(F, d):
            if h not in reducible:
                irreducible.append(h)
    return irreducible


def _normalize(F: FqField, h: tuple) -> tuple:
    """Representative up to scalars: h(0) = 1 if h(0) != 0, else monic."""
    c = h[0] if h[0] else h[-1]
    ic = F.inv(c)
    return tuple(F.mul(x, ic) for x in h)


def _act(F: FqField, zeta: int, h: tuple) -> tuple:
    return _normalize(F, tuple(F.mul(c, F.pow(zeta, i)) for i, c in enumerate(h)))


def mu(F: FqField, m: int) -> list[int]:
    if (F.q - 1) % m:
        raise ValueError(f"mu_{m} is not contained in F_{F.q}")
    return F.roots_of_unity(m)


def is_free_orbit(F: FqField, h: tuple, p: int) -> bool:
    """Group-action test: no nontrivial zeta in mu_{p-1} fixes h up to scalars."""
    h = _normalize(F, h)
    return all(_act(F, z, h) != h for z in mu(F, p - 1) if z != 1)


def is_free_by_subrings(F: FqField, h: tuple, p: int) -> bool:
    """Subring test: h(0) = 1 and h lies in no k[X^i] with i > 1, i | p - 1.

    The prime X is fixed up to scalars by every zeta, so it is free only for p = 2.
    """
    h = _normalize(F, h)
    if h[0] == 0:
        return p == 2
    support = [i for i, c in enumerate(h) if c and i]
    return not any(all(e % i == 0 for e in support) for i in range(2, p) if (p - 1) % i == 0)


def h1_free_orbit_count(p: int, F: FqField | None = None, degree_bound: int = 1) -> int:
    F = GF(p) if F is None else F
    if F.p != p:
        raise ValueError("field characteristic differs from p")
    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    group = mu(F, p - 1)
    primes = {_normalize(F, h) for h in monic_irreducibles(F, degree_bound)}
    seen: set[tuple] = set()
    free = 0
    for h in sorted(primes):
        if h in seen:
            continue
        orbit = {_act(F, z, h) for z in group}
        seen |= orbit
        if len(orbit) == len(group):
            free += 1
    return free


def orbit_criteria_agree(p: int, F: FqField | None = None, degree_bound: int = 1) -> bool:
    F = GF(p) if F is None else F
    return all(
        is_free_orbit(F, h, p) == is_free_by_subrings(F, h, p)
        for h in monic_irreducibles(F, degree_bound)
    )
