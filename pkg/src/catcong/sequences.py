"""Exact-rational and mod-p evaluators for the binomial-product sequences,
plus coefficient-level verification of their generating functions.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import comb, factorial

from .errors import IndexOutOfDomain, PoleInC
from .modarith import ZERO, FactTable, PValued, Zero, fact_table


class SeqKind(enum.Enum):
    CATALAN = "catalan"
    CATALAN_EVEN = "catalan_even"      # C_{2k}
    CATALAN2 = "catalan2"              # C_k^{(2)} = C(3k,k)/(2k+1)
    BINOM3K_K = "binom3k_k"
    BINOM4K_2K = "binom4k_2k"
    S = "s"                            # C(6k,3k)C(3k,k) / (2 C(2k,k) (2k+1))
    S_WEIGHTED = "s_weighted"          # (2k+1) S_k
    T = "t"                            # 16^{k-1}/k * C(3k-2, 2k-1)


# largest factorial argument needed at index k, as a multiple of k
_MAX_ARG_FACTOR = {
    SeqKind.CATALAN: 2,
    SeqKind.CATALAN_EVEN: 4,
    SeqKind.CATALAN2: 3,
    SeqKind.BINOM3K_K: 3,
    SeqKind.BINOM4K_2K: 4,
    SeqKind.S: 6,
    SeqKind.S_WEIGHTED: 6,
    SeqKind.T: 3,
}


def seq_exact(kind: SeqKind, n: int) -> Fraction:
    if n < 0:
        raise IndexOutOfDomain(f"n = {n}")
    if kind is SeqKind.CATALAN:
        return Fraction(comb(2 * n, n), n + 1)
    if kind is SeqKind.CATALAN_EVEN:
        return Fraction(comb(4 * n, 2 * n), 2 * n + 1)
    if kind is SeqKind.CATALAN2:
        return Fraction(comb(3 * n, n), 2 * n + 1)
    if kind is SeqKind.BINOM3K_K:
        return Fraction(comb(3 * n, n))
    if kind is SeqKind.BINOM4K_2K:
        return Fraction(comb(4 * n, 2 * n))
    if kind is SeqKind.S:
        return Fraction(comb(6 * n, 3 * n) * comb(3 * n, n), 2 * comb(2 * n, n) * (2 * n + 1))
    if kind is SeqKind.S_WEIGHTED:
        return (2 * n + 1) * seq_exact(SeqKind.S, n)
    if kind is SeqKind.T:
        if n == 0:
            raise IndexOutOfDomain("T is defined for n >= 1")
        return Fraction(16 ** (n - 1) * comb(3 * n - 2, 2 * n - 1), n)
    raise ValueError(kind)


def seq_valued(kind: SeqKind, k: int, table: FactTable) -> PValued | Zero:
    """The k-th term as p^e * u, via a shared factorial table."""
    p = table.p
    if kind is SeqKind.CATALAN:
        return table.binom(2 * k, k) / PValued.from_int(k + 1, p)
    if kind is SeqKind.CATALAN_EVEN:
        return table.binom(4 * k, 2 * k) / PValued.from_int(2 * k + 1, p)
    if kind is SeqKind.CATALAN2:
        return table.binom(3 * k, k) / PValued.from_int(2 * k + 1, p)
    if kind is SeqKind.BINOM3K_K:
        return table.binom(3 * k, k)
    if kind is SeqKind.BINOM4K_2K:
        return table.binom(4 * k, 2 * k)
    if kind is SeqKind.S:
        num = table.binom(6 * k, 3 * k) * table.binom(3 * k, k)
        den = PValued.from_int(2 * (2 * k + 1), p) * table.binom(2 * k, k)
        return num / den
    if kind is SeqKind.S_WEIGHTED:
        num = table.binom(6 * k, 3 * k) * table.binom(3 * k, k)
        return num / (PValued.from_int(2, p) * table.binom(2 * k, k))
    if kind is SeqKind.T:
        if k == 0:
            raise IndexOutOfDomain("T is defined for n >= 1")
        v = PValued.from_int(16, p)
        sixteen = PValued(v.e * (k - 1), pow(v.u, k - 1, p), p)
        return sixteen * table.binom(3 * k - 2, 2 * k - 1) / PValued.from_int(k, p)
    raise ValueError(kind)


def seq_table(kind: SeqKind, p: int, kmax: int) -> FactTable:
    return fact_table(p, _MAX_ARG_FACTOR[kind] * max(kmax, 1))


def seq_mod(kind: SeqKind, k: int, p: int) -> int:
    """F_p image of the k-th term (0 when the term has positive valuation)."""
    return seq_valued(kind, k, seq_table(kind, p, k)).to_fp()


def pochhammer_exact(r: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for l in range(k):
        out *= r + l
    return out


def hyper_coeff(a: Fraction, b: Fraction, c: Fraction, k: int) -> Fraction:
    """(a)_k (b)_k / ((c)_k k!), the k-th Gauss series coefficient."""
    ck = pochhammer_exact(c, k)
    if ck == 0:
        raise PoleInC(f"(c)_k = 0 for c = {c}, k = {k}")
    return pochhammer_exact(a, k) * pochhammer_exact(b, k) / (ck * factorial(k))


def gf_coefficient_check(max_index: int = 64) -> dict[str, list[bool]]:
    """Coefficient-wise verification, in exact rationals, that each sequence
    matches its hypergeometric generating function."""
    half, third = Fraction(1, 2), Fraction(1, 3)
    report: dict[str, list[bool]] = {"s": [], "catalan_even": [], "catalan2": [], "t": []}
    for k in range(max_index + 1):
        report["s"].append(
            seq_exact(SeqKind.S, k)
            == 108**k * hyper_coeff(Fraction(1, 6), Fraction(5, 6), Fraction(3, 2), k) / 2
        )
        report["catalan_even"].append(
            2 * seq_exact(SeqKind.CATALAN_EVEN, k) * Fraction(1, 4) ** (2 * k + 1)
            == hyper_coeff(Fraction(1, 4), Fraction(3, 4), Fraction(3, 2), k) / 2
        )
        report["catalan2"].append(
            seq_exact(SeqKind.CATALAN2, k) * Fraction(4, 27) ** k
            == hyper_coeff(third, 2 * third, Fraction(3, 2), k)
        )
        if k >= 1:
            report["t"].append(
                seq_exact(SeqKind.T, k)
                == -Fraction(1, 24) * 108**k * hyper_coeff(-third, third, half, k)
            )
    return report
