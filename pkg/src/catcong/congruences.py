"""The congruence registry: truncated-sum evaluators, closed-form right-hand
sides, and deterministic prime-sweep machinery.

Every check pairs two independent code paths: the left-hand side is a plain
modular summation of sequence terms (modarith + sequences only), while the
right-hand side goes through the w_n(x) closed forms, Legendre symbols, or the
cubic-class machinery (wseq + eisenstein).  A passing check means both paths
landed on the same residue.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .eisenstein import CjClass, classify_c, cornacchia_4p
from .errors import ClassificationFailure, NegativeValuation, ParameterOutOfDomain
from .modarith import ZERO, Zero, fp, inv, legendre, primes_in, require_prime
from .sequences import SeqKind, seq_table, seq_valued
from .wseq import w_eval

__all__ = [
    "CheckResult",
    "Report",
    "REGISTRY",
    "registry_ids",
    "resolve_selector",
    "run_check",
    "sweep",
]


# ----------------------------------------------------------------------------
# results


@dataclass(frozen=True)
class CheckResult:
    """One theorem instance: identifier, prime, parameters, both residues."""

    theorem: str
    p: int
    params: dict
    lhs: int | None
    rhs: int | None
    passed: bool
    skipped: bool = False
    reason: str | None = None

    def sort_key(self) -> tuple:
        return (self.p, self.theorem, sorted(self.params.items()))


def _result(tid: str, p: int, params: dict, lhs: int, rhs: int) -> CheckResult:
    return CheckResult(tid, p, params, lhs, rhs, passed=(lhs == rhs))


def _skip(tid: str, p: int, params: dict, reason: str) -> CheckResult:
    return CheckResult(tid, p, params, None, None, passed=False, skipped=True, reason=reason)


@dataclass(frozen=True)
class Report:
    meta: dict
    results: tuple[CheckResult, ...]

    @property
    def summary(self) -> dict:
        passed = sum(1 for r in self.results if r.passed)
        skipped = sum(1 for r in self.results if r.skipped)
        return {
            "total": len(self.results),
            "passed": passed,
            "skipped": skipped,
            "failed": len(self.results) - passed - skipped,
        }

    @property
    def all_passed(self) -> bool:
        return self.summary["failed"] == 0


# ----------------------------------------------------------------------------
# shared summation machinery


@lru_cache(maxsize=24)
def _seq_coeffs(kind: SeqKind, p: int) -> tuple[tuple[int, int], ...]:
    """(valuation, unit) of the k-th term for k = 0..p-1."""
    table = seq_table(kind, p, p - 1)
    out = []
    for k in range(p):
        v = seq_valued(kind, k, table)
        if isinstance(v, Zero):
            out.append((1, 0))
        else:
            if v.e < 0:
                raise NegativeValuation(f"{kind.value} term {k} mod {p}")
            out.append((v.e, v.u))
    return tuple(out)


def _range_sums(
    coeffs: tuple[tuple[int, int], ...],
    t: int,
    p: int,
    ranges: dict[str, tuple[int, int]],
) -> dict[str, int]:
    """Partial sums of coeff[k] * t^k over several index windows in one pass."""
    acc = dict.fromkeys(ranges, 0)
    hi_max = max(hi for _, hi in ranges.values())
    t %= p
    tk = 1
    for k in range(hi_max + 1):
        e, u = coeffs[k]
        if e == 0 and tk:
            v = u * tk % p
            for name, (lo, hi) in ranges.items():
                if lo <= k <= hi:
                    acc[name] = (acc[name] + v) % p
        tk = tk * t % p
    return acc


def _seq_sums(kind: SeqKind, t: int, p: int, ranges: dict[str, tuple[int, int]]) -> dict[str, int]:
    return _range_sums(_seq_coeffs(kind, p), t, p, ranges)


@lru_cache(maxsize=8)
def _main_coeffs(m: int, p: int) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
    """(1/m)_k((m-1)/m)_k / (2k+1)!  and  / (2k)!  for k = 0..p-1."""
    from .modarith import PValued

    odd = [(0, 1)]
    even = [(0, 1)]
    r = PValued.one(p)
    for k in range(1, p):
        r = r * PValued.from_fraction(Fraction(1 + m * (k - 1), m), p)
        r = r * PValued.from_fraction(Fraction(m * k - 1, m), p)
        r = r / PValued.from_int(2 * k * (2 * k + 1), p)
        odd.append((r.e, r.u))
        s = r * PValued.from_int(2 * k + 1, p)
        even.append((s.e, s.u))
    return tuple(odd), tuple(even)


# ----------------------------------------------------------------------------
# w-based parametric families


def check_main(p: int, m: int, t: int) -> list[CheckResult]:
    """The four truncated hypergeometric congruences for phi(m) = 2."""
    require_prime(p)
    t %= p
    n1, n2 = p // m, p - 1 - p // m
    codd, ceven = _main_coeffs(m, p)
    so = _range_sums(codd, t, p, {"head": (0, n1), "tail": ((p - 1) // 2, n2)})
    se = _range_sums(ceven, t, p, {"head": (0, n1), "tail": ((p + 1) // 2, n2)})
    x1 = (1 - t * inv(2, p)) % p
    x2 = -x1 % p
    w1a, w2a = w_eval(n1, x1, p), w_eval(n2, x1, p)
    w1b, w2b = w_eval(n1, x2, p), w_eval(n2, x2, p)
    sgn = -1 if n1 % 2 else 1
    rhs = {
        "head_odd": inv(1 + 2 * n1, p) * w1a,
        "head_even": sgn * w1b,
        "tail_odd": -inv(m * (1 + 2 * n1), p) * (w2a + w1a),
        "tail_even": sgn * inv(m, p) * (w2b - w1b),
    }
    lhs = {
        "head_odd": so["head"],
        "head_even": se["head"],
        "tail_odd": so["tail"],
        "tail_even": se["tail"],
    }
    return [
        _result("MAIN", p, {"m": m, "variant": v, "t": t}, lhs[v], rhs[v] % p)
        for v in lhs
    ]


def check_full(p: int, m: int, t: int) -> list[CheckResult]:
    """Complete sums k = 0..p-1 of both hypergeometric kernels."""
    require_prime(p)
    t %= p
    n1, n2 = p // m, p - 1 - p // m
    codd, ceven = _main_coeffs(m, p)
    so = _range_sums(codd, t, p, {"full": (0, p - 1)})
    se = _range_sums(ceven, t, p, {"full": (0, p - 1)})
    x1 = (1 - t * inv(2, p)) % p
    x2 = -x1 % p
    sgn = -1 if n1 % 2 else 1
    rhs_odd = inv(m * (1 + 2 * n1), p) * ((m - 1) * w_eval(n1, x1, p) - w_eval(n2, x1, p))
    rhs_even = sgn * inv(m, p) * ((m - 1) * w_eval(n1, x2, p) + w_eval(n2, x2, p))
    return [
        _result("FULL", p, {"m": m, "variant": "full_odd", "t": t}, so["full"], rhs_odd % p),
        _result("FULL", p, {"m": m, "variant": "full_even", "t": t}, se["full"], rhs_even % p),
    ]


def _sgn_half(p: int) -> int:
    return -1 if (p - 1) // 2 % 2 else 1


def _pm3(p: int) -> int:
    return 1 if p % 3 == 1 else -1


def check_m4(p: int, t: int) -> list[CheckResult]:
    """Even-indexed Catalan numbers and central C(4k,2k) sums (m = 4 case)."""
    require_prime(p)
    t %= p
    n1, n2 = p // 4, p - 1 - p // 4
    y1 = (1 - 32 * t) % p
    y2 = -y1 % p
    sC = _seq_sums(SeqKind.CATALAN_EVEN, t, p,
                   {"head": (0, n1), "tail": ((p - 1) // 2, n2), "full": (0, p - 1)})
    sB = _seq_sums(SeqKind.BINOM4K_2K, t, p,
                   {"head": (0, n1), "tail": ((p + 1) // 2, n2), "full": (0, p - 1)})
    w1a, w2a = w_eval(n1, y1, p), w_eval(n2, y1, p)
    w1b, w2b = w_eval(n1, y2, p), w_eval(n2, y2, p)
    sg = _sgn_half(p)
    lm1, lm2 = legendre(-1, p), legendre(-2, p)
    cases = [
        ("head_c2k", sC["head"], 2 * sg * w1a),
        ("tail_c2k", sC["tail"], -sg * inv(2, p) * (w2a + w1a)),
        ("head_b4", sB["head"], lm2 * w1b),
        ("tail_b4", sB["tail"], inv(4, p) * lm2 * (w2b - w1b)),
        ("full_c2k", sC["full"], inv(2, p) * lm1 * (3 * w1a - w2a)),
        ("full_b4", sB["full"], inv(4, p) * lm2 * (w2b + 3 * w1b)),
    ]
    return [_result("M4", p, {"variant": v, "t": t}, l, r % p) for v, l, r in cases]


def check_m3(p: int, t: int) -> list[CheckResult]:
    """Second-order Catalan numbers and C(3k,k) sums (m = 3 case)."""
    require_prime(p)
    t %= p
    n1, n2 = p // 3, p - 1 - p // 3
    y1 = (1 - 27 * t * inv(2, p)) % p
    y2 = -y1 % p
    sC = _seq_sums(SeqKind.CATALAN2, t, p,
                   {"head": (0, n1), "tail": ((p - 1) // 2, n2), "full": (0, p - 1)})
    sB = _seq_sums(SeqKind.BINOM3K_K, t, p,
                   {"head": (0, n1), "tail": ((p + 1) // 2, n2), "full": (0, p - 1)})
    w1a, w2a = w_eval(n1, y1, p), w_eval(n2, y1, p)
    w1b, w2b = w_eval(n1, y2, p), w_eval(n2, y2, p)
    e = _pm3(p)
    cases = [
        ("head_c2", sC["head"], 3 * e * w1a),
        ("tail_c2", sC["tail"], -e * (w2a + w1a)),
        ("head_b3", sB["head"], e * w1b),
        ("tail_b3", sB["tail"], inv(3, p) * e * (w2b - w1b)),
        ("full_c2", sC["full"], e * (2 * w1a - w2a)),
        ("full_b3", sB["full"], inv(3, p) * e * (2 * w1b + w2b)),
    ]
    return [_result("M3", p, {"variant": v, "t": t}, l, r % p) for v, l, r in cases]


def check_m6(p: int, t: int) -> list[CheckResult]:
    """S_k and (2k+1)S_k sums (m = 6 case)."""
    require_prime(p)
    t %= p
    n1, n2 = p // 6, p - 1 - p // 6
    y1 = (1 - 216 * t) % p
    y2 = -y1 % p
    sS = _seq_sums(SeqKind.S, t, p,
                   {"head": (0, n1), "tail": ((p - 1) // 2, n2), "full": (0, p - 1)})
    sW = _seq_sums(SeqKind.S_WEIGHTED, t, p,
                   {"head": (0, n1), "tail": ((p + 1) // 2, n2), "full": (0, p - 1)})
    w1a, w2a = w_eval(n1, y1, p), w_eval(n2, y1, p)
    w1b, w2b = w_eval(n1, y2, p), w_eval(n2, y2, p)
    e, sg = _pm3(p), _sgn_half(p)
    cases = [
        ("head_s", sS["head"], 3 * inv(4, p) * e * w1a),
        ("tail_s", sS["tail"], -inv(8, p) * e * (w2a + w1a)),
        ("head_sw", sW["head"], inv(2, p) * sg * w1b),
        ("tail_sw", sW["tail"], inv(12, p) * sg * (w2b - w1b)),
        ("full_s", sS["full"], inv(8, p) * e * (5 * w1a - w2a)),
        ("full_sw", sW["full"], inv(12, p) * sg * (w2b + 5 * w1b)),
    ]
    return [_result("M6", p, {"variant": v, "t": t}, l, r % p) for v, l, r in cases]


def check_m4quad(p: int, t: int) -> list[CheckResult]:
    """Quadratic-point evaluations of the full m = 4 sums."""
    require_prime(p)
    t %= p
    u1 = (1 - t * t) * inv(16, p) % p
    u2 = t * t % p
    lhs1 = _seq_sums(SeqKind.CATALAN_EVEN, u1, p, {"full": (0, p - 1)})["full"]
    lhs2 = _seq_sums(SeqKind.BINOM4K_2K, u2, p, {"full": (0, p - 1)})["full"]
    rhs1 = (inv(2, p) * legendre(2, p)
            * (legendre(1 - t, p) * (1 - t) + legendre(1 + t, p) * (1 + t))) % p
    rhs2 = (inv(2, p)
            * (legendre(1 - 4 * t, p) * (1 + 2 * t) + legendre(1 + 4 * t, p) * (1 - 2 * t))) % p
    return [
        _result("M4QUAD", p, {"variant": "c2k", "t": t}, lhs1, rhs1),
        _result("M4QUAD", p, {"variant": "b4", "t": t}, lhs2, rhs2),
    ]


def check_m4ab(p: int, a: int, b: int) -> list[CheckResult]:
    """Two-parameter evaluations of the full m = 4 sums."""
    require_prime(p)
    params1 = {"variant": "c2k", "a": a, "b": b}
    params2 = {"variant": "b4", "a": a, "b": b}
    if a * b % p == 0:
        return [_skip("M4AB", p, q, "ab divisible by p") for q in (params1, params2)]
    if (a - b) % p == 0:
        return [_skip("M4AB", p, q, "a congruent to b") for q in (params1, params2)]
    u1 = fp(Fraction((a - b) ** 2, -64 * a * b), p)
    u2 = fp(Fraction((a + b) ** 2, 64 * a * b), p)
    lhs1 = _seq_sums(SeqKind.CATALAN_EVEN, u1, p, {"full": (0, p - 1)})["full"]
    lhs2 = _seq_sums(SeqKind.BINOM4K_2K, u2, p, {"full": (0, p - 1)})["full"]
    la, lb, l2 = legendre(a, p), legendre(b, p), legendre(2, p)
    if p % 4 == 1:
        pw = pow(a * b % p, (p - 1) // 4, p)
        rhs1 = pw * inv(2 * (a - b), p) * ((3 * a + b) * lb - (3 * b + a) * la)
        rhs2 = l2 * pw * inv(4 * (a - b), p) * ((3 * a - b) * lb - (3 * b - a) * la)
    else:
        pw = pow(a * b % p, (p + 1) // 4, p)
        rhs1 = pw * inv(2 * (b - a), p) * (
            (3 * a + b) * inv(a, p) * lb - (3 * b + a) * inv(b, p) * la)
        rhs2 = l2 * pw * inv(4 * (b - a), p) * (
            (3 * a - b) * inv(a, p) * lb - (3 * b - a) * inv(b, p) * la)
    return [
        _result("M4AB", p, params1, lhs1, rhs1 % p),
        _result("M4AB", p, params2, lhs2, rhs2 % p),
    ]


def check_m3cubic(p: int, t: int) -> list[CheckResult]:
    """Cubic-point evaluations of the m = 3 sums (index starts at 1)."""
    require_prime(p)
    t %= p
    u = t * t * (t + 1) % p
    lg = legendre((1 + t) * (1 - 3 * t) % p, p)
    out = []
    if t % p == 0:
        out.append(_skip("M3CUBIC", p, {"variant": "head_c2", "t": t}, "t divisible by p"))
        out.append(_skip("M3CUBIC", p, {"variant": "full_c2", "t": t}, "t divisible by p"))
    else:
        s = _seq_sums(SeqKind.CATALAN2, u, p, {"head": (1, p // 3), "full": (1, p - 1)})
        i2t = inv(2 * t, p)
        rhs_h = ((1 + t) * i2t - (1 - 3 * t) * i2t * lg) % p
        rhs_f = (1 + t) * (1 - 3 * t) * i2t * (1 - lg) % p
        out.append(_result("M3CUBIC", p, {"variant": "head_c2", "t": t}, s["head"], rhs_h))
        out.append(_result("M3CUBIC", p, {"variant": "full_c2", "t": t}, s["full"], rhs_f))
    if (3 * t + 2) % p == 0:
        out.append(_skip("M3CUBIC", p, {"variant": "head_b3", "t": t}, "3t+2 divisible by p"))
        out.append(_skip("M3CUBIC", p, {"variant": "full_b3", "t": t}, "3t+2 divisible by p"))
    else:
        s = _seq_sums(SeqKind.BINOM3K_K, u, p, {"head": (1, p // 3), "full": (1, p - 1)})
        den = inv(2 * (3 * t + 2), p)
        rhs_h = 3 * (t + 1) * den * (lg - 1) % p
        rhs_f = 3 * (t + 1) ** 2 * den * (lg - 1) % p
        out.append(_result("M3CUBIC", p, {"variant": "head_b3", "t": t}, s["head"], rhs_h))
        out.append(_result("M3CUBIC", p, {"variant": "full_b3", "t": t}, s["full"], rhs_f))
    return out


def check_m6sextic(p: int, t: int) -> list[CheckResult]:
    """Sextic-point evaluations of the m = 6 sums."""
    require_prime(p)
    t %= p
    u = t * t * (4 * t + 1) % p
    la = legendre(1 + 4 * t, p)
    lb = legendre(1 - 12 * t, p)
    out = []
    if t % p == 0:
        out.append(_skip("M6SEXTIC", p, {"variant": "head_s", "t": t}, "t divisible by p"))
        out.append(_skip("M6SEXTIC", p, {"variant": "full_s", "t": t}, "t divisible by p"))
    else:
        s = _seq_sums(SeqKind.S, u, p, {"head": (0, p // 6), "full": (0, p - 1)})
        i32t = inv(32 * t, p)
        rhs_h = ((1 + 12 * t) * i32t * la - (1 - 12 * t) * i32t * lb) % p
        rhs_f = ((1 + 12 * t) * (1 + 4 * t) * (1 - 6 * t) * i32t * la
                 - (1 - 12 * t) * (24 * t * t + 6 * t + 1) * i32t * lb) % p
        out.append(_result("M6SEXTIC", p, {"variant": "head_s", "t": t}, s["head"], rhs_h))
        out.append(_result("M6SEXTIC", p, {"variant": "full_s", "t": t}, s["full"], rhs_f))
    if (6 * t + 1) % p == 0:
        out.append(_skip("M6SEXTIC", p, {"variant": "head_sw", "t": t}, "6t+1 divisible by p"))
        out.append(_skip("M6SEXTIC", p, {"variant": "full_sw", "t": t}, "6t+1 divisible by p"))
    else:
        s = _seq_sums(SeqKind.S_WEIGHTED, u, p, {"head": (0, p // 6), "full": (0, p - 1)})
        d8 = inv(8 * (1 + 6 * t), p)
        rhs_h = ((1 + 12 * t) * d8 * lb + 3 * (1 + 4 * t) * d8 * la) % p
        rhs_f = ((1 + 12 * t) * (24 * t * t + 6 * t + 1) * d8 * lb
                 + 3 * (1 - 6 * t) * (1 + 4 * t) ** 2 * d8 * la) % p
        out.append(_result("M6SEXTIC", p, {"variant": "head_sw", "t": t}, s["head"], rhs_h))
        out.append(_result("M6SEXTIC", p, {"variant": "full_sw", "t": t}, s["full"], rhs_f))
    return out


# ----------------------------------------------------------------------------
# cubic-class criteria


def check_tr(p: int, c: int) -> list[CheckResult]:
    """Cubic-class criterion via the central-range C(3k,k) sum."""
    require_prime(p)
    c %= p
    params = {"c": c}
    if (c * c + 3) % p == 0:
        return [_skip("TR", p, params, "c^2 + 3 divisible by p")]
    u = 4 * inv(9 * (c * c + 3), p) % p
    total = _seq_sums(SeqKind.BINOM3K_K, u, p,
                      {"tail": ((p + 1) // 2, 2 * p // 3)})["tail"]
    lhs = c * total % p
    cls = classify_c(c, p)
    rhs = {CjClass.C0: 0, CjClass.C1: 1, CjClass.C2: p - 1}[cls]
    return [CheckResult("TR", p, {"c": c, "class": cls.name}, lhs, rhs, passed=(lhs == rhs))]


def check_cat(p: int, c: int) -> list[CheckResult]:
    """Cubic-class values of the full C(3k,k) and C_k^(2) sums."""
    require_prime(p)
    c %= p
    if (c * c + 3) % p == 0:
        return [_skip("CAT", p, {"variant": v, "c": c}, "c^2 + 3 divisible by p")
                for v in ("b3", "c2")]
    if c % p == 0:
        return [_skip("CAT", p, {"variant": v, "c": c}, "branch values require c nonzero mod p")
                for v in ("b3", "c2")]
    cls = classify_c(c, p)
    u1 = 4 * inv(9 * (c * c + 3), p) % p
    u2 = 4 * c * c * inv(27 * (c * c + 3), p) % p
    lhs1 = _seq_sums(SeqKind.BINOM3K_K, u1, p, {"full": (0, p - 1)})["full"]
    lhs2 = _seq_sums(SeqKind.CATALAN2, u2, p, {"full": (0, p - 1)})["full"]
    if cls is CjClass.C0:
        rhs1, rhs2 = 1, 1
    else:
        i2c = inv(2 * c, p)
        if cls is CjClass.C1:
            rhs1, rhs2 = -(1 + c) * i2c, -(9 + c) * i2c
        else:
            rhs1, rhs2 = (1 - c) * i2c, (9 - c) * i2c
    return [
        _result("CAT", p, {"variant": "b3", "c": c, "class": cls.name}, lhs1, rhs1 % p),
        _result("CAT", p, {"variant": "c2", "c": c, "class": cls.name}, lhs2, rhs2 % p),
    ]


def check_sc(p: int, c: int) -> list[CheckResult]:
    """Cubic-class values of the full S_k and (2k+1)S_k sums."""
    require_prime(p)
    c %= p
    if (c * c + 3) % p == 0:
        return [_skip("SC", p, {"variant": v, "c": c}, "c^2 + 3 divisible by p")
                for v in ("s", "sw")]
    if c % p == 0:
        return [_skip("SC", p, {"variant": v, "c": c}, "branch values require c nonzero mod p")
                for v in ("s", "sw")]
    cls = classify_c(c, p)
    u1 = c * c * inv(108 * (c * c + 3), p) % p
    u2 = inv(36 * (3 + c * c), p)
    pre1 = legendre(3 * (c * c + 3) % p, p)
    pre2 = legendre((c * c + 3) % p, p)
    lhs1 = pre1 * _seq_sums(SeqKind.S, u1, p, {"full": (0, p - 1)})["full"] % p
    lhs2 = pre2 * _seq_sums(SeqKind.S_WEIGHTED, u2, p, {"full": (0, p - 1)})["full"] % p
    if cls is CjClass.C0:
        rhs1 = rhs2 = inv(2, p)
    else:
        if cls is CjClass.C1:
            rhs1 = (9 - 2 * c) * inv(8 * c, p)
            rhs2 = (2 - c) * inv(4 * c, p)
        else:
            rhs1 = -(9 + 2 * c) * inv(8 * c, p)
            rhs2 = -(2 + c) * inv(4 * c, p)
    return [
        _result("SC", p, {"variant": "s", "c": c, "class": cls.name}, lhs1, rhs1 % p),
        _result("SC", p, {"variant": "sw", "c": c, "class": cls.name}, lhs2, rhs2 % p),
    ]


# ----------------------------------------------------------------------------
# L, M families (4q = L^2 + 27 M^2)

LM_PRIMES = (7, 13, 19, 31, 37)


def _lm_branch(s: int, q: int, num: int, den: int) -> int:
    """0 for the trivial branch, else the sign of the matching nontrivial one.

    Matches s = p^((q-1)/3) mod q against (-1 +/- num/den)/2 mod q.
    """
    if s == 1:
        return 0
    r = num * pow(den, -1, q) % q
    half = pow(2, -1, q)
    if s == (-1 + r) * half % q:
        return 1
    if s == (-1 - r) * half % q:
        return -1
    raise ClassificationFailure(f"p^((q-1)/3) = {s} matches no branch mod {q}")


def _lm_context(p: int, q: int) -> tuple[int, int, int, int] | None:
    require_prime(p)
    L, M = cornacchia_4p(q)
    if p in (2, 3, q) or L % p == 0 or M % p == 0:
        return None
    s = pow(p % q, (q - 1) // 3, q)
    return L, M, s, q


def check_mql(p: int, q: int) -> list[CheckResult]:
    """Central-range C(3k,k) sums at M^2/q and L^2/27q."""
    ctx = _lm_context(p, q)
    variants = ("tail_b3_m", "tail_b3_l")
    if ctx is None:
        return [_skip("MQL", p, {"variant": v, "q": q}, "p in {2,3,q} or p | LM")
                for v in variants]
    L, M, s, q = ctx
    rng = {"tail": ((p + 1) // 2, 2 * p // 3)}
    u1 = M * M * inv(q, p) % p
    u2 = L * L * inv(27 * q, p) % p
    lhs1 = _seq_sums(SeqKind.BINOM3K_K, u1, p, rng)["tail"]
    lhs2 = _seq_sums(SeqKind.BINOM3K_K, u2, p, rng)["tail"]
    e1 = _lm_branch(s, q, 9 * M, L)
    e2 = _lm_branch(s, q, L, 3 * M)
    rhs1 = e1 * 3 * M * inv(L, p)
    rhs2 = e2 * L * inv(9 * M, p)
    return [
        _result("MQL", p, {"variant": "tail_b3_m", "q": q}, lhs1, rhs1 % p),
        _result("MQL", p, {"variant": "tail_b3_l", "q": q}, lhs2, rhs2 % p),
    ]


def check_mql2(p: int, q: int) -> list[CheckResult]:
    """Full C(3k,k) and C_k^(2) sums at M^2/q and L^2/27q."""
    ctx = _lm_context(p, q)
    variants = ("full_b3_m", "full_b3_l", "full_c2_m", "full_c2_l")
    if ctx is None:
        return [_skip("MQL2", p, {"variant": v, "q": q}, "p in {2,3,q} or p | LM")
                for v in variants]
    L, M, s, q = ctx
    u_m = M * M * inv(q, p) % p
    u_l = L * L * inv(27 * q, p) % p
    sb = {k: _seq_sums(SeqKind.BINOM3K_K, u, p, {"full": (0, p - 1)})["full"]
          for k, u in (("m", u_m), ("l", u_l))}
    sc = {k: _seq_sums(SeqKind.CATALAN2, u, p, {"full": (0, p - 1)})["full"]
          for k, u in (("m", u_m), ("l", u_l))}
    eL = _lm_branch(s, q, L, 3 * M)       # branch keyed by (-1 +/- L/3M)/2
    e9 = _lm_branch(s, q, 9 * M, L)       # branch keyed by (-1 +/- 9M/L)/2
    rhs = {
        "full_b3_m": 1 if eL == 0 else (eL * 3 * M - L) * inv(2 * L, p),
        "full_b3_l": 1 if e9 == 0 else (e9 * L - 9 * M) * inv(18 * M, p),
        "full_c2_m": 1 if e9 == 0 else (e9 * L - M) * inv(2 * M, p),
        "full_c2_l": 1 if eL == 0 else (eL * 27 * M - L) * inv(2 * L, p),
    }
    lhs = {
        "full_b3_m": sb["m"], "full_b3_l": sb["l"],
        "full_c2_m": sc["m"], "full_c2_l": sc["l"],
    }
    return [_result("MQL2", p, {"variant": v, "q": q}, lhs[v], rhs[v] % p) for v in variants]


def check_mqls(p: int, q: int) -> list[CheckResult]:
    """Full S_k and (2k+1)S_k sums at M^2/16q and L^2/432q."""
    ctx = _lm_context(p, q)
    variants = ("full_s_m", "full_s_l", "full_sw_m", "full_sw_l")
    if ctx is None:
        return [_skip("MQLS", p, {"variant": v, "q": q}, "p in {2,3,q} or p | LM")
                for v in variants]
    L, M, s, q = ctx
    u_m = M * M * inv(16 * q, p) % p
    u_l = L * L * inv(432 * q, p) % p
    lq = legendre(q, p)
    l3q = legendre(3 * q, p)
    lhs = {
        "full_s_m": lq * _seq_sums(SeqKind.S, u_m, p, {"full": (0, p - 1)})["full"] % p,
        "full_s_l": l3q * _seq_sums(SeqKind.S, u_l, p, {"full": (0, p - 1)})["full"] % p,
        "full_sw_m": lq * _seq_sums(SeqKind.S_WEIGHTED, u_m, p, {"full": (0, p - 1)})["full"] % p,
        "full_sw_l": l3q * _seq_sums(SeqKind.S_WEIGHTED, u_l, p, {"full": (0, p - 1)})["full"] % p,
    }
    eL = _lm_branch(s, q, L, 3 * M)
    e9 = _lm_branch(s, q, 9 * M, L)
    half = inv(2, p)
    rhs = {
        "full_s_m": half if eL == 0 else (eL * L - 2 * M) * inv(8 * M, p),
        "full_s_l": half if e9 == 0 else (e9 * 27 * M - 2 * L) * inv(8 * L, p),
        "full_sw_m": half if e9 == 0 else (e9 * 6 * M - L) * inv(4 * L, p),
        "full_sw_l": half if eL == 0 else (eL * 2 * L - 9 * M) * inv(36 * M, p),
    }
    return [_result("MQLS", p, {"variant": v, "q": q}, lhs[v], rhs[v] % p) for v in variants]


# ----------------------------------------------------------------------------
# fixed-point corollaries (one table entry per displayed congruence)


def _pm_set(mod: int, *residues: int) -> frozenset[int]:
    out = set()
    for r in residues:
        out.add(r % mod)
        out.add(-r % mod)
    return frozenset(out)


_G7 = (_pm_set(7, 1), _pm_set(7, 2), _pm_set(7, 3))
_G9 = (_pm_set(9, 1), _pm_set(9, 2), _pm_set(9, 4))
_G13 = (_pm_set(13, 1, 5), _pm_set(13, 2, 3), _pm_set(13, 4, 6))
_G19 = (_pm_set(19, 1, 7, 8), _pm_set(19, 2, 3, 5), _pm_set(19, 4, 6, 9))
_G31 = (_pm_set(31, 1, 2, 4, 8, 15), _pm_set(31, 3, 6, 7, 12, 14),
        _pm_set(31, 5, 9, 10, 11, 13))
_G37 = (_pm_set(37, 1, 6, 8, 10, 11, 14), _pm_set(37, 2, 9, 12, 15, 16, 17),
        _pm_set(37, 3, 4, 5, 7, 13, 18))


def _cases(p: int, mod: int, groups, values):
    r = p % mod
    for g, v in zip(groups, values):
        if r in g:
            return v
    raise ClassificationFailure(f"p = {p} falls in no residue group mod {mod}")


F = Fraction


@dataclass(frozen=True)
class PointEntry:
    """A single numeric congruence: fixed evaluation point, fixed range."""

    name: str
    kind: SeqKind
    t: Fraction
    span: str                      # head | full | tail_even
    rhs: Callable[[int], Fraction | int]
    exclude: tuple[int, ...] = ()


_HEAD_DIV = {
    SeqKind.CATALAN_EVEN: 4, SeqKind.BINOM4K_2K: 4,
    SeqKind.CATALAN2: 3, SeqKind.BINOM3K_K: 3,
    SeqKind.S: 6, SeqKind.S_WEIGHTED: 6,
}

CE, B4 = SeqKind.CATALAN_EVEN, SeqKind.BINOM4K_2K
C2, B3 = SeqKind.CATALAN2, SeqKind.BINOM3K_K
S, SW = SeqKind.S, SeqKind.S_WEIGHTED

POINT_ENTRIES: tuple[PointEntry, ...] = (
    # m = 4 points
    PointEntry("M4PT t=1/16 full c2k", CE, F(1, 16), "full", lambda p: legendre(2, p)),
    PointEntry("M4PT t=1/16 head c2k", CE, F(1, 16), "head", lambda p: 2 * legendre(2, p)),
    PointEntry("M4PT t=1/16 full b4", B4, F(1, 16), "full", lambda p: F(legendre(2, p), 4)),
    PointEntry("M4PT t=1/16 tail b4", B4, F(1, 16), "tail_even",
               lambda p: F(-legendre(2, p), 4)),
    PointEntry("M4PT t=1/32 head c2k", CE, F(1, 32), "head",
               lambda p: 2 * legendre(-1, p) * (-1) ** (p // 8)),
    PointEntry("M4PT t=1/32 head b4", B4, F(1, 32), "head",
               lambda p: legendre(-2, p) * (-1) ** (p // 8)),
    PointEntry("M4PT t=1/32 full c2k", CE, F(1, 32), "full",
               lambda p: (-1) ** ((p - 1) // 2 + p // 8) * (1 if p % 8 in (1, 7) else 2)),
    PointEntry("M4PT t=1/32 full b4", B4, F(1, 32), "full",
               lambda p: legendre(-2, p) * (-1) ** (p // 8)
               * (1 if p % 8 in (1, 7) else F(1, 2))),
    PointEntry("M4PT t=1/64 full c2k", CE, F(1, 64), "full",
               lambda p: legendre(2, p) * (1 if p % 12 in (1, 11) else F(-7, 2))),
    PointEntry("M4PT t=1/64 full b4", B4, F(1, 64), "full",
               lambda p: legendre(2, p) * (1 if p % 12 in (1, 11) else F(1, 4))),
    PointEntry("M4PT t=3/64 full c2k", CE, F(3, 64), "full",
               lambda p: 1 if p % 12 in (1, 11) else F(-1, 2)),
    PointEntry("M4PT t=3/64 full b4", B4, F(3, 64), "full",
               lambda p: 1 if p % 12 in (1, 11) else F(-5, 4)),
    # m = 3 points
    PointEntry("M3PT t=4/27 full c2", C2, F(4, 27), "full", lambda p: 1),
    PointEntry("M3PT t=4/27 head c2", C2, F(4, 27), "head", lambda p: 3),
    PointEntry("M3PT t=4/27 full b3", B3, F(4, 27), "full", lambda p: F(1, 9)),
    PointEntry("M3PT t=4/27 head b3", B3, F(4, 27), "head", lambda p: F(1, 3)),
    PointEntry("M3PT t=2/27 full c2", C2, F(2, 27), "full",
               lambda p: 2 * legendre(3, p) - 1),
    PointEntry("M3PT t=2/27 head c2", C2, F(2, 27), "head",
               lambda p: 3 * legendre(3, p)),
    PointEntry("M3PT t=2/27 full b3", B3, F(2, 27), "full",
               lambda p: F(2 * legendre(3, p) + 1, 3)),
    PointEntry("M3PT t=2/27 head b3", B3, F(2, 27), "head", lambda p: legendre(3, p)),
    PointEntry("M3PT t=1/27 head c2", C2, F(1, 27), "head",
               lambda p: -6 if p % 9 in _G9[2] else 3),
    PointEntry("M3PT t=1/27 full c2", C2, F(1, 27), "full",
               lambda p: _cases(p, 9, _G9, (1, 4, -5))),
    PointEntry("M3PT t=1/27 full b3", B3, F(1, 27), "full",
               lambda p: _cases(p, 9, _G9, (1, F(-2, 3), F(-1, 3)))),
    PointEntry("M3PT t=1/9 full c2", C2, F(1, 9), "full",
               lambda p: -2 if p % 9 in _G9[1] else 1),
    PointEntry("M3PT t=1/9 head c2", C2, F(1, 9), "head",
               lambda p: _cases(p, 9, _G9, (3, -3, 0))),
    PointEntry("M3PT t=1/9 full b3", B3, F(1, 9), "full",
               lambda p: _cases(p, 9, _G9, (1, 0, -1))),
    # m = 6 points
    PointEntry("M6PT t=1/108 full s", S, F(1, 108), "full",
               lambda p: F(legendre(3, p), 2)),
    PointEntry("M6PT t=1/108 head s", S, F(1, 108), "head",
               lambda p: F(3 * legendre(3, p), 4)),
    PointEntry("M6PT t=1/216 full s", S, F(1, 216), "full",
               lambda p: F(legendre(2, p), 2)),
    PointEntry("M6PT t=1/216 head s", S, F(1, 216), "head",
               lambda p: F(3 * legendre(2, p), 4)),
    PointEntry("M6PT t=1/108 full sw", SW, F(1, 108), "full",
               lambda p: F(2 * legendre(3, p), 9)),
    PointEntry("M6PT t=1/108 head sw", SW, F(1, 108), "head",
               lambda p: F(legendre(3, p), 3)),
    PointEntry("M6PT t=1/216 full sw", SW, F(1, 216), "full",
               lambda p: F(legendre(6, p), 2)),
    PointEntry("M6PT t=1/216 head sw", SW, F(1, 216), "head",
               lambda p: F(legendre(6, p), 2)),
    PointEntry("M6PT t=1/432 full s", S, F(1, 432), "full",
               lambda p: legendre(3, p) * _cases(p, 9, _G9, (F(1, 2), F(-11, 8), F(7, 8)))),
    PointEntry("M6PT t=3/432 full s", S, F(3, 432), "full",
               lambda p: _cases(p, 9, _G9, (F(1, 2), F(1, 8), F(-5, 8)))),
    PointEntry("M6PT t=1/432 full sw", SW, F(1, 432), "full",
               lambda p: legendre(3, p) * _cases(p, 9, _G9, (F(1, 2), F(-1, 12), F(-5, 12)))),
    PointEntry("M6PT t=3/432 full sw", SW, F(3, 432), "full",
               lambda p: _cases(p, 9, _G9, (F(1, 2), F(-3, 4), F(1, 4)))),
    # L, M specializations at fixed q
    PointEntry("LMPT t=1/7 full b3", B3, F(1, 7), "full",
               lambda p: -2 if p % 7 in _G7[1] else 1, exclude=(7,)),
    PointEntry("LMPT t=1/189 full c2", C2, F(1, 189), "full",
               lambda p: _cases(p, 7, _G7, (1, -14, 13)), exclude=(7,)),
    PointEntry("LMPT t=1/19 full b3", B3, F(1, 19), "full",
               lambda p: _cases(p, 19, _G19, (1, F(-2, 7), F(-5, 7))), exclude=(7, 19)),
    PointEntry("LMPT t=4/31 full b3", B3, F(4, 31), "full",
               lambda p: _cases(p, 31, _G31, (1, F(-5, 4), F(1, 4))), exclude=(31,)),
    PointEntry("LMPT t=1/37 full b3", B3, F(1, 37), "full",
               lambda p: _cases(p, 37, _G37, (1, F(-4, 11), F(-7, 11))), exclude=(11, 37)),
    PointEntry("LMPT t=1/37 full c2", C2, F(1, 37), "full",
               lambda p: _cases(p, 37, _G37, (1, -6, 5)), exclude=(11, 37)),
    # L, M specializations of the S-sum theorem (Legendre prefactor folded
    # into the RHS, legitimate since the prefactor squares to 1)
    PointEntry("LMSPT t=1/112 full s", S, F(1, 112), "full",
               lambda p: legendre(7, p) * _cases(p, 7, _G7, (F(1, 2), F(-3, 8), F(-1, 8))),
               exclude=(7,)),
    PointEntry("LMSPT t=1/3024 full s", S, F(1, 3024), "full",
               lambda p: legendre(21, p) * _cases(p, 7, _G7, (F(1, 2), F(25, 8), F(-29, 8))),
               exclude=(7,)),
    PointEntry("LMSPT t=1/112 full sw", SW, F(1, 112), "full",
               lambda p: legendre(7, p) * _cases(p, 7, _G7, (F(1, 2), F(5, 4), F(-7, 4))),
               exclude=(7,)),
    PointEntry("LMSPT t=1/3024 full sw", SW, F(1, 3024), "full",
               lambda p: legendre(21, p) * _cases(p, 7, _G7, (F(1, 2), F(-11, 36), F(-7, 36))),
               exclude=(7,)),
    PointEntry("LMSPT t=1/208 full s", S, F(1, 208), "full",
               lambda p: legendre(13, p) * _cases(p, 13, _G13, (F(1, 2), F(-7, 8), F(3, 8))),
               exclude=(5, 13)),
    PointEntry("LMSPT t=25/5616 full s", S, F(25, 5616), "full",
               lambda p: legendre(39, p) * _cases(p, 13, _G13, (F(1, 2), F(17, 40), F(-37, 40))),
               exclude=(5, 13)),
    PointEntry("LMSPT t=1/208 full sw", SW, F(1, 208), "full",
               lambda p: legendre(13, p) * _cases(p, 13, _G13, (F(1, 2), F(1, 20), F(-11, 20))),
               exclude=(5, 13)),
    PointEntry("LMSPT t=25/5616 full sw", SW, F(25, 5616), "full",
               lambda p: legendre(39, p) * _cases(p, 13, _G13, (F(1, 2), F(-19, 36), F(1, 36))),
               exclude=(5, 13)),
    PointEntry("LMSPT t=1/304 full s", S, F(1, 304), "full",
               lambda p: legendre(19, p) * _cases(p, 19, _G19, (F(1, 2), F(5, 8), F(-9, 8))),
               exclude=(7, 19)),
    PointEntry("LMSPT t=1/304 full sw", SW, F(1, 304), "full",
               lambda p: legendre(19, p) * _cases(p, 19, _G19, (F(1, 2), F(-13, 28), F(-1, 28))),
               exclude=(7, 19)),
    PointEntry("LMSPT t=1/124 full s", S, F(1, 124), "full",
               lambda p: legendre(31, p) * _cases(p, 31, _G31, (F(1, 2), F(-1, 2), 0)),
               exclude=(31,)),
    PointEntry("LMSPT t=1/837 full s", S, F(1, 837), "full",
               lambda p: legendre(93, p) * _cases(p, 31, _G31, (F(1, 2), F(23, 16), F(-31, 16))),
               exclude=(31,)),
    PointEntry("LMSPT t=1/124 full sw", SW, F(1, 124), "full",
               lambda p: legendre(31, p) * (-1 if p % 31 in _G31[2] else F(1, 2)),
               exclude=(31,)),
    PointEntry("LMSPT t=1/837 full sw", SW, F(1, 837), "full",
               lambda p: legendre(93, p) * _cases(p, 31, _G31, (F(1, 2), F(-13, 36), F(-5, 36))),
               exclude=(31,)),
)


def check_point(entry: PointEntry, p: int) -> list[CheckResult]:
    require_prime(p)
    params = {"t": str(entry.t), "span": entry.span, "seq": entry.kind.value}
    if p in entry.exclude:
        return [_skip(entry.name, p, params, "excluded prime for this statement")]
    t = fp(entry.t, p)
    if entry.span == "full":
        lo, hi = 0, p - 1
    elif entry.span == "head":
        lo, hi = 0, p // _HEAD_DIV[entry.kind]
    elif entry.span == "tail_even":
        lo, hi = (p + 1) // 2, p - 1 - p // _HEAD_DIV[entry.kind]
    else:
        raise ValueError(entry.span)
    lhs = _seq_sums(entry.kind, t, p, {"r": (lo, hi)})["r"]
    rhs = fp(Fraction(entry.rhs(p)), p)
    return [_result(entry.name, p, params, lhs, rhs)]


# ----------------------------------------------------------------------------
# registry and sweeps


@dataclass(frozen=True)
class TheoremFamily:
    id: str
    family: str
    description: str
    instances: Callable  # (p, rng, samples, exhaustive) -> list[CheckResult]
    check: Callable      # (p, **params) -> list[CheckResult]


def _t_values(p: int, rng: random.Random, samples: int, exhaustive: bool) -> list[int]:
    if exhaustive:
        return list(range(p))
    fixed = {0, 1, 2, p - 1}
    want = min(p, max(samples, len(fixed)))
    while len(fixed) < want:
        fixed.add(rng.randrange(p))
    return sorted(fixed)


def _mt_family(fid: str, desc: str, fn) -> TheoremFamily:
    def instances(p, rng, samples, exhaustive):
        out = []
        for m in (3, 4, 6):
            for t in _t_values(p, rng, samples, exhaustive):
                out.extend(fn(p, m, t))
        return out

    def check(p, m=4, t=0, **_):
        return fn(p, int(m), int(t))

    return TheoremFamily(fid, fid, desc, instances, check)


def _t_family(fid: str, desc: str, fn) -> TheoremFamily:
    def instances(p, rng, samples, exhaustive):
        out = []
        for t in _t_values(p, rng, samples, exhaustive):
            out.extend(fn(p, t))
        return out

    def check(p, t=0, **_):
        return fn(p, int(t))

    return TheoremFamily(fid, fid, desc, instances, check)


def _c_family(fid: str, desc: str, fn) -> TheoremFamily:
    def instances(p, rng, samples, exhaustive):
        out = []
        for c in _t_values(p, rng, samples, exhaustive):
            out.extend(fn(p, c))
        return out

    def check(p, c=0, **_):
        return fn(p, int(c))

    return TheoremFamily(fid, fid, desc, instances, check)


def _ab_family(fid: str, desc: str, fn) -> TheoremFamily:
    def instances(p, rng, samples, exhaustive):
        out = []
        for a in range(1, 12):
            for b in range(a + 1, 13):
                out.extend(fn(p, a, b))
        return out

    def check(p, a=1, b=2, **_):
        return fn(p, int(a), int(b))

    return TheoremFamily(fid, fid, desc, instances, check)


def _lm_family(fid: str, desc: str, fn) -> TheoremFamily:
    def instances(p, rng, samples, exhaustive):
        out = []
        for q in LM_PRIMES:
            out.extend(fn(p, q))
        return out

    def check(p, q=7, **_):
        return fn(p, int(q))

    return TheoremFamily(fid, fid, desc, instances, check)


def _pt_family(entry: PointEntry) -> TheoremFamily:
    family = entry.name.split()[0]
    desc = (f"{entry.name}: sum of {entry.kind.value} * t^k over the "
            f"{entry.span} range at t = {entry.t}")

    def instances(p, rng, samples, exhaustive):
        return check_point(entry, p)

    def check(p, **_):
        return check_point(entry, p)

    return TheoremFamily(entry.name, family, desc, instances, check)


def _build_registry() -> dict[str, TheoremFamily]:
    fams = [
        _mt_family("MAIN", "four truncated hypergeometric sums vs. w_n closed forms, m in {3,4,6}", check_main),
        _mt_family("FULL", "complete sums k=0..p-1 of both hypergeometric kernels, m in {3,4,6}", check_full),
        _t_family("M4", "C_2k and C(4k,2k) sums vs. w at 1-32t and 32t-1", check_m4),
        _t_family("M4QUAD", "full m=4 sums at quadratic points (1-t^2)/16 and t^2", check_m4quad),
        _ab_family("M4AB", "full m=4 sums at (a-b)^2/(-64ab) and (a+b)^2/(64ab)", check_m4ab),
        _t_family("M3", "C_k^(2) and C(3k,k) sums vs. w at 1-27t/2 and 27t/2-1", check_m3),
        _t_family("M3CUBIC", "m=3 sums at the cubic point t^2(t+1), Legendre-valued", check_m3cubic),
        _t_family("M6", "S_k and (2k+1)S_k sums vs. w at 1-216t and 216t-1", check_m6),
        _t_family("M6SEXTIC", "m=6 sums at the sextic point t^2(4t+1), Legendre-valued", check_m6sextic),
        _c_family("TR", "cubic-class criterion: c * central C(3k,k) sum in {0,1,-1}", check_tr),
        _c_family("CAT", "cubic-class values of full C(3k,k) and C_k^(2) sums", check_cat),
        _c_family("SC", "cubic-class values of full S_k and (2k+1)S_k sums", check_sc),
        _lm_family("MQL", "central C(3k,k) sums at M^2/q and L^2/27q, 4q = L^2+27M^2", check_mql),
        _lm_family("MQL2", "full C(3k,k) and C_k^(2) sums at M^2/q and L^2/27q", check_mql2),
        _lm_family("MQLS", "full S-sums at M^2/16q and L^2/432q with Legendre prefactors", check_mqls),
    ]
    fams.extend(_pt_family(e) for e in POINT_ENTRIES)
    reg = {}
    for f in fams:
        if f.id in reg:
            raise ValueError(f"duplicate registry id {f.id}")
        reg[f.id] = f
    return reg


REGISTRY: dict[str, TheoremFamily] = _build_registry()

_ALIASES = {
    "LM-MQL": "MQL",
    "LM-MQL2": "MQL2",
    "LMS": "MQLS",
    "CAT2": "CAT",
}


def registry_ids() -> list[str]:
    return list(REGISTRY)


def resolve_selector(selector: str) -> list[TheoremFamily]:
    """Match a family id, an exact entry id, or 'all' (case-insensitive)."""
    sel = selector.strip()
    if sel.lower() == "all":
        return list(REGISTRY.values())
    up = _ALIASES.get(sel.upper(), sel.upper())
    hits = [f for f in REGISTRY.values()
            if f.id.upper() == up or f.family.upper() == up]
    if not hits:
        raise KeyError(f"no theorem matches selector {selector!r}")
    return hits


def run_check(selector: str, p: int, **params) -> list[CheckResult]:
    """Run one family at explicit parameters (CLI 'check' entry point)."""
    out = []
    for fam in resolve_selector(selector):
        out.extend(fam.check(p, **params))
    return out


def _sweep_prime(args) -> list[CheckResult]:
    ids, p, samples, seed, exhaustive = args
    out = []
    for fid in ids:
        fam = REGISTRY[fid]
        rng = random.Random(f"{seed}:{fid}:{p}")
        out.extend(fam.instances(p, rng, samples, exhaustive))
    return out


def sweep(
    selector: str,
    p_lo: int,
    p_hi: int,
    *,
    samples: int = 25,
    seed: int = 0,
    exhaustive: bool = False,
    workers: int = 1,
) -> Report:
    """Check every selected theorem for all primes in [p_lo, p_hi].

    Deterministic for a fixed (selector, range, samples, seed): parameters are
    drawn from a per-(theorem, prime) seeded generator and results are emitted
    in (prime, registry) order regardless of worker count.
    """
    fams = resolve_selector(selector)
    ids = [f.id for f in fams]
    primes = [p for p in primes_in(p_lo, p_hi) if p > 3]
    tasks = [(ids, p, samples, seed, exhaustive) for p in primes]
    if workers > 1 and len(primes) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_sweep_prime, tasks))
    else:
        chunks = [_sweep_prime(t) for t in tasks]
    results = tuple(r for chunk in chunks for r in chunk)
    meta = {
        "selector": selector,
        "range": [p_lo, p_hi],
        "samples": samples,
        "seed": seed,
        "exhaustive": exhaustive,
    }
    return Report(meta=meta, results=results)
