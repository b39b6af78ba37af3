"""Arithmetic in Z[w] (w = e^{2pi i/3}): primary primes, cubic residue
characters, the cubic Jacobi symbol, and the cubic-class partition of D_m.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from sympy import factorint

from .errors import (
    ClassificationFailure,
    DenominatorNotCoprime,
    DivisionByZero,
    NoRepresentation,
    NormDivisibleByThree,
    NormThree,
    ParityViolation,
)


@dataclass(frozen=True)
class Eis:
    """a + b*w with w^2 + w + 1 = 0."""

    a: int
    b: int

    def __add__(self, other: "Eis") -> "Eis":
        return Eis(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Eis") -> "Eis":
        return Eis(self.a - other.a, self.b - other.b)

    def __mul__(self, other: "Eis") -> "Eis":
        # (a + bw)(c + dw) = ac - bd + (ad + bc - bd) w, using w^2 = -1 - w
        a, b, c, d = self.a, self.b, other.a, other.b
        return Eis(a * c - b * d, a * d + b * c - b * d)

    def __neg__(self) -> "Eis":
        return Eis(-self.a, -self.b)

    def conj(self) -> "Eis":
        return Eis(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    @classmethod
    def from_int(cls, n: int) -> "Eis":
        return cls(n, 0)


ONE = Eis(1, 0)
OMEGA = Eis(0, 1)
UNITS = (Eis(1, 0), Eis(-1, 0), Eis(0, 1), Eis(0, -1), Eis(-1, -1), Eis(1, 1))


def eis_divmod(alpha: Eis, beta: Eis) -> tuple[Eis, Eis]:
    """q, r with alpha = q*beta + r and N(r) < N(beta)."""
    if beta.is_zero():
        raise DivisionByZero("division by zero in Z[w]")
    n = beta.norm()
    t = alpha * beta.conj()
    # round both coordinates of t/n to the nearest integer
    qa = (2 * t.a + n) // (2 * n)
    qb = (2 * t.b + n) // (2 * n)
    q = Eis(qa, qb)
    r = alpha - q * beta
    return q, r


def eis_mod(alpha: Eis, beta: Eis) -> Eis:
    return eis_divmod(alpha, beta)[1]


def divides(beta: Eis, alpha: Eis) -> bool:
    return eis_mod(alpha, beta).is_zero()


def is_primary(alpha: Eis) -> bool:
    return alpha.a % 3 == 2 and alpha.b % 3 == 0


def make_primary(alpha: Eis) -> tuple[Eis, Eis]:
    """(u, pi) with alpha = u * pi and pi = 2 (mod 3)."""
    if alpha.norm() % 3 == 0:
        raise NormDivisibleByThree(f"{alpha} has norm divisible by 3")
    for u in UNITS:
        uinv = u.conj() if u.norm() == 1 else u  # all units: inverse = conjugate
        cand = uinv * alpha
        if is_primary(cand):
            return u, cand
    raise AssertionError("no primary associate found")  # unreachable for 3 coprime norm


@lru_cache(maxsize=None)
def cornacchia_4p(p: int) -> tuple[int, int]:
    """The unique (L, M) with 4p = L^2 + 27 M^2, L = 1 (mod 3), M > 0."""
    if p % 3 != 1:
        raise NoRepresentation(f"{p} is not 1 mod 3")
    for m in range(1, isqrt(4 * p // 27) + 1):
        l2 = 4 * p - 27 * m * m
        l = isqrt(l2)
        if l * l == l2:
            if l % 3 != 1:
                l = -l
            if l % 3 != 1:
                continue
            return l, m
    raise NoRepresentation(f"no L, M with 4*{p} = L^2 + 27 M^2")


def pi_from_LM(L: int, M: int) -> Eis:
    """Primary prime (L + 3M)/2 + 3M w above the prime (L^2 + 27 M^2)/4."""
    if (L + 3 * M) % 2 != 0:
        raise ParityViolation(f"L + 3M odd for L={L}, M={M}")
    pi = Eis((L + 3 * M) // 2, 3 * M)
    assert is_primary(pi)
    return pi


def eis_pow_mod(base: Eis, n: int, mod: Eis) -> Eis:
    r = ONE
    b = eis_mod(base, mod)
    while n:
        if n & 1:
            r = eis_mod(r * b, mod)
        b = eis_mod(b * b, mod)
        n >>= 1
    return r


_OMEGA_POWERS = (Eis(1, 0), Eis(0, 1), Eis(-1, -1))


def cubic_char(alpha: Eis, pi: Eis) -> int | None:
    """The exponent j with alpha^{(N(pi)-1)/3} = w^j (mod pi); None if pi | alpha."""
    n = pi.norm()
    if n == 3:
        raise NormThree("modulus has norm 3")
    if divides(pi, alpha):
        return None
    r = eis_pow_mod(alpha, (n - 1) // 3, pi)
    for j, wj in enumerate(_OMEGA_POWERS):
        if divides(pi, r - wj):
            return j
    raise AssertionError(f"{alpha}^((N-1)/3) not a cube root of unity mod {pi}")


@lru_cache(maxsize=None)
def primary_factors(m: int) -> tuple[Eis, ...]:
    """Primary prime factors of the rational integer m, with multiplicity."""
    m = abs(m)
    if m % 3 == 0:
        raise NormDivisibleByThree(f"3 divides {m}")
    out: list[Eis] = []
    for q, e in factorint(m).items():
        if q % 3 == 2:
            out.extend([Eis(q, 0)] * e)
        else:
            pi = pi_from_LM(*cornacchia_4p(q))
            out.extend([pi, pi.conj()] * e)
    return tuple(out)


def cubic_jacobi(alpha: Eis, m: int) -> int | None:
    """Cubic Jacobi symbol (alpha | m)_3 for a rational integer modulus,
    as the exponent j of w^j; None when gcd(alpha, m) is not a unit."""
    j = 0
    for pi in primary_factors(m):
        cj = cubic_char(alpha, pi)
        if cj is None:
            return None
        j += cj
    return j % 3


class CjClass(enum.Enum):
    C0 = 0
    C1 = 1
    C2 = 2
    EXCLUDED = "excluded"


def classify_c(c: int | Fraction, m: int) -> CjClass:
    """Cubic class of c in D_m: the j with ((c+1+2w) | m)_3 = w^j.

    Rational c = a/b is handled multiplicatively:
    ((c+1+2w)|m)_3 = (((a+b)+2bw)|m)_3 * ((b|m)_3)^{-1}.
    """
    c = Fraction(c)
    a, b = c.numerator, c.denominator
    if gcd(b, m) != 1:
        raise DenominatorNotCoprime(f"denominator {b} not coprime to {m}")
    if gcd(a * a + 3 * b * b, m) != 1:
        return CjClass.EXCLUDED
    j1 = cubic_jacobi(Eis(a + b, 2 * b), m)
    j2 = cubic_jacobi(Eis(b, 0), m)
    assert j1 is not None and j2 is not None
    return CjClass((j1 - j2) % 3)


def euler_cubic_class(m: int, p: int) -> int:
    """0, 1 or 2 according to m^{(p-1)/3} being 1, (-1 - L/(3M))/2 or
    (-1 + L/(3M))/2 mod p, with 4p = L^2 + 27 M^2."""
    if m % p == 0:
        raise ValueError(f"{p} divides {m}")
    L, M = cornacchia_4p(p)
    s = pow(m, (p - 1) // 3, p)
    ratio = L * pow(3 * M, -1, p) % p
    if s == 1:
        return 0
    if s == (-1 - ratio) * pow(2, -1, p) % p:
        return 1
    if s == (-1 + ratio) * pow(2, -1, p) % p:
        return 2
    raise ClassificationFailure(f"m={m}, p={p}: no branch matched")
