"""Prime-field arithmetic with p-adic valuation tracking.

Residues are plain ints in [0, p); the prime is passed explicitly.  Values
whose parts individually carry powers of p (factorials, binomials, rising
factorials) are tracked as p^e * u with u a unit mod p, so that congruence
sums can add exactly the terms with net valuation zero and detect any
negative valuation as a bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import isprime, primerange

from .errors import DenominatorDivisible, NegativeValuation, NotPrime


def require_prime(p: int) -> int:
    if p < 2 or not isprime(p):
        raise NotPrime(f"{p} is not prime")
    return p


def primes_in(lo: int, hi: int) -> list[int]:
    """All primes in [lo, hi], ascending."""
    return list(primerange(lo, hi + 1))


def inv(a: int, p: int) -> int:
    return pow(a, -1, p)


def reduce_rational(a: int, b: int, p: int) -> int:
    """Image of a/b in Z/pZ.  Requires p coprime to b."""
    if b % p == 0:
        raise DenominatorDivisible(f"denominator {b} divisible by {p}")
    return a * pow(b, -1, p) % p


def fp(c: int | Fraction, p: int) -> int:
    """Residue of an integer or a D_p rational."""
    if isinstance(c, Fraction):
        return reduce_rational(c.numerator, c.denominator, p)
    return c % p


def legendre(c: int | Fraction, p: int) -> int:
    """Legendre symbol extended to D_p: (a/b | p) := (ab | p)."""
    if isinstance(c, Fraction):
        if c.denominator % p == 0:
            raise DenominatorDivisible(f"denominator {c.denominator} divisible by {p}")
        n = c.numerator * c.denominator
    else:
        n = c
    n %= p
    if n == 0:
        return 0
    s = pow(n, (p - 1) // 2, p)
    return 1 if s == 1 else -1


class Zero:
    """Additive-identity result of a product containing an exact rational 0.

    Zero has no p-adic valuation, so it cannot be a PValued; callers treat
    it as contributing nothing to a sum.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Zero"


ZERO = Zero()


def split_p(n: int, p: int) -> tuple[int, int]:
    """n = p^e * m with p coprime to m (n != 0)."""
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e, n


@dataclass(frozen=True)
class PValued:
    """A nonzero rational seen mod p: the class p^e * u with u a unit."""

    e: int
    u: int
    p: int

    @classmethod
    def from_int(cls, n: int, p: int) -> "PValued | Zero":
        if n == 0:
            return ZERO
        e, m = split_p(n, p)
        return cls(e, m % p, p)

    @classmethod
    def from_fraction(cls, r: Fraction, p: int) -> "PValued | Zero":
        if r == 0:
            return ZERO
        en, un = split_p(r.numerator, p)
        ed, ud = split_p(r.denominator, p)
        return cls(en - ed, un * pow(ud, -1, p) % p, p)

    @classmethod
    def one(cls, p: int) -> "PValued":
        return cls(0, 1, p)

    def __mul__(self, other: "PValued") -> "PValued":
        return PValued(self.e + other.e, self.u * other.u % self.p, self.p)

    def __truediv__(self, other: "PValued") -> "PValued":
        return PValued(self.e - other.e, self.u * pow(other.u, -1, self.p) % self.p, self.p)

    def to_fp(self) -> int:
        """Image in F_p: 0 when e > 0, u when e = 0, undefined when e < 0."""
        if self.e < 0:
            raise NegativeValuation(f"p^{self.e} has no image in F_{self.p}")
        return self.u if self.e == 0 else 0


def factorial_valued(n: int, p: int) -> PValued:
    e, u = 0, 1
    for i in range(2, n + 1):
        ei, ui = split_p(i, p)
        e += ei
        u = u * ui % p
    return PValued(e, u, p)


def binomial_valued(n: int, k: int, p: int) -> PValued:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n} k={k}")
    return factorial_valued(n, p) / (factorial_valued(k, p) * factorial_valued(n - k, p))


def pochhammer_valued(r: Fraction, k: int, p: int) -> PValued | Zero:
    """Rising factorial (r)_k = r (r+1) ... (r+k-1) as a PValued.

    Returns ZERO when some factor is exactly 0 in Q.
    """
    a, m = r.numerator, r.denominator
    if m % p == 0:
        raise DenominatorDivisible(f"denominator {m} divisible by {p}")
    e, u = 0, 1
    for l in range(k):
        num = a + m * l
        if num == 0:
            return ZERO
        ei, ui = split_p(num, p)
        e += ei
        u = u * ui % p
    u = u * pow(pow(m, k, p), -1, p) % p
    return PValued(e, u, p)


class FactTable:
    """Factorials 0!..n! as (valuation, unit) arrays, built incrementally.

    Backbone for O(1) binomials with arguments far beyond p.
    """

    def __init__(self, p: int, n: int):
        self.p = p
        e = [0] * (n + 1)
        u = [1] * (n + 1)
        for i in range(2, n + 1):
            ei, ui = split_p(i, p)
            e[i] = e[i - 1] + ei
            u[i] = u[i - 1] * ui % p
        self.e = e
        self.u = u

    def fact(self, n: int) -> PValued:
        return PValued(self.e[n], self.u[n], self.p)

    def binom(self, n: int, k: int) -> PValued:
        p = self.p
        return PValued(
            self.e[n] - self.e[k] - self.e[n - k],
            self.u[n] * pow(self.u[k] * self.u[n - k] % p, -1, p) % p,
            p,
        )


@lru_cache(maxsize=8)
def fact_table(p: int, n: int) -> FactTable:
    return FactTable(p, n)
