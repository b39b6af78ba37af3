"""The recurrence w_{n+1} = 2x w_n - w_{n-1} (w_0 = 1, w_1 = 1 + 2x) over F_p.

Matrix exponentiation is the canonical O(log n) path and works uniformly,
including at x = +-1.  The closed form via alpha = x + sqrt(x^2 - 1) lives
in F_p or F_p(sqrt(d)) and exists only for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy.ntheory import sqrt_mod

from .errors import DegenerateX
from .modarith import fp, legendre


@dataclass(frozen=True)
class Fp2:
    """s + t*sqrt(d) over F_p, with d a fixed non-residue."""

    s: int
    t: int
    d: int
    p: int

    def __add__(self, other: "Fp2") -> "Fp2":
        return Fp2((self.s + other.s) % self.p, (self.t + other.t) % self.p, self.d, self.p)

    def __sub__(self, other: "Fp2") -> "Fp2":
        return Fp2((self.s - other.s) % self.p, (self.t - other.t) % self.p, self.d, self.p)

    def __mul__(self, other: "Fp2") -> "Fp2":
        p, d = self.p, self.d
        return Fp2(
            (self.s * other.s + self.t * other.t % p * d) % p,
            (self.s * other.t + self.t * other.s) % p,
            d,
            p,
        )

    def norm(self) -> int:
        return (self.s * self.s - self.t * self.t % self.p * self.d) % self.p

    def inverse(self) -> "Fp2":
        n = pow(self.norm(), -1, self.p)
        return Fp2(self.s * n % self.p, -self.t * n % self.p, self.d, self.p)

    def __pow__(self, n: int) -> "Fp2":
        if n < 0:
            return self.inverse() ** (-n)
        r = Fp2(1, 0, self.d, self.p)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    @classmethod
    def embed(cls, a: int, d: int, p: int) -> "Fp2":
        return cls(a % p, 0, d, p)


def _mat_pow_apply(x: int, n: int, v1: int, v0: int, p: int) -> int:
    """Second component of [[2x,-1],[1,0]]^n (v1, v0)^T, i.e. the n-th term."""
    a, b, c, d = 1, 0, 0, 1  # identity
    ma, mb, mc, md = 2 * x % p, p - 1, 1, 0
    while n:
        if n & 1:
            a, b, c, d = (a * ma + b * mc) % p, (a * mb + b * md) % p, (c * ma + d * mc) % p, (c * mb + d * md) % p
        ma, mb, mc, md = (
            (ma * ma + mb * mc) % p,
            (ma * mb + mb * md) % p,
            (mc * ma + md * mc) % p,
            (mc * mb + md * md) % p,
        )
        n >>= 1
    return (c * v1 + d * v0) % p


def w_eval(n: int, x: int, p: int) -> int:
    """w_n(x) mod p in O(log n)."""
    if n == 0:
        return 1 % p
    return _mat_pow_apply(x, n, (1 + 2 * x) % p, 1, p)


def u_eval(n: int, x: int, p: int) -> int:
    """Chebyshev U_n(x) mod p; U_{-1} := 0."""
    if n == -1:
        return 0
    if n == 0:
        return 1 % p
    return _mat_pow_apply(x, n, 2 * x % p, 1, p)


# w_n at 1/2 has period 6 in n, at -1/2 period 3; see w_special.
_W_HALF = (1, 2, 1, -1, -2, -1)
_W_MINUS_HALF = (1, 0, -1)


def w_special(n: int, point: int | Fraction, p: int) -> int:
    """Closed-form w_n at the five points with periodic values."""
    if point == 1:
        return (2 * n + 1) % p
    if point == -1:
        return (-1) ** n % p
    if point == 0:
        return (-1) ** (n // 2 % 2) % p
    if point == Fraction(1, 2):
        return _W_HALF[n % 6] % p
    if point == Fraction(-1, 2):
        return _W_MINUS_HALF[n % 3] % p
    raise ValueError(f"no closed form stored for point {point!r}")


def alpha_of(x: int, p: int) -> int | Fp2:
    """alpha = x + sqrt(x^2 - 1), in F_p when x^2-1 is a square, else in Fp2."""
    x %= p
    if x == 1 % p or x == (p - 1) % p:
        raise DegenerateX(f"x = {x} is +-1 mod {p}")
    d = (x * x - 1) % p
    if legendre(d, p) == 1:
        return (x + sqrt_mod(d, p)) % p
    return Fp2(x, 1, d, p)


def w_closed_form(n: int, x: int, p: int) -> int:
    """((a+1)a^n - (a^{-1}+1)a^{-n}) / (a - a^{-1}) with a = alpha_of(x)."""
    a = alpha_of(x, p)
    if isinstance(a, Fp2):
        one = Fp2(1, 0, a.d, p)
        ai = a.inverse()
        num = (a + one) * a**n - (ai + one) * ai**n
        res = num * (a - ai).inverse()
        assert res.t == 0, "w_n must land in the prime subfield"
        return res.s
    ai = pow(a, -1, p)
    num = ((a + 1) * pow(a, n, p) - (ai + 1) * pow(ai, n, p)) % p
    return num * pow(a - ai, -1, p) % p


def w_naive(n: int, x: int, p: int) -> int:
    """Iterative recurrence; test oracle only."""
    w0, w1 = 1 % p, (1 + 2 * x) % p
    if n == 0:
        return w0
    for _ in range(n - 1):
        w0, w1 = w1, (2 * x * w1 - w0) % p
    return w1
