"""Top-level acceptance battery.

One test per criterion; each emits a single CRITERION n: PASS/FAIL line and
asserts it. These run the full-scale sweeps (larger prime ranges than the
unit tests) and therefore dominate suite runtime.
"""

import os
import random
from fractions import Fraction
from math import comb, gcd

import pytest

from catcong.congruences import LM_PRIMES, check_tr, sweep
from catcong.eisenstein import (
    CjClass,
    Eis,
    classify_c,
    cornacchia_4p,
    cubic_char,
    cubic_jacobi,
    eis_mod,
    eis_pow_mod,
    euler_cubic_class,
    pi_from_LM,
)
from catcong.modarith import inv, legendre, primes_in
from catcong.sequences import SeqKind, gf_coefficient_check, hyper_coeff, seq_exact
from catcong.wseq import Fp2, alpha_of, u_eval, w_eval, w_naive, w_special

F = Fraction
WORKERS = min(4, os.cpu_count() or 1)


def _verdict(n: int, ok: bool, desc: str) -> None:
    print(f"CRITERION {n}: {'PASS' if ok else 'FAIL'} - {desc}")
    assert ok, f"criterion {n} failed: {desc}"


def test_criterion_1_four_range_congruences_to_500():
    rep = sweep("MAIN", 5, 500, samples=25, seed=0, workers=WORKERS)
    ok = rep.summary["failed"] == 0 and rep.summary["total"] > 0
    _verdict(1, ok, f"all four range variants, m in {{3,4,6}}, primes to 500 "
                    f"({rep.summary['total']} checks, {rep.summary['failed']} failures)")


def test_criterion_2_parametric_theorems_to_500():
    fams = ("FULL", "M4", "M4QUAD", "M4AB", "M3", "M3CUBIC", "M6", "M6SEXTIC")
    total = failed = 0
    for fam in fams:
        rep = sweep(fam, 5, 500, samples=25, seed=0, workers=WORKERS)
        total += rep.summary["total"]
        failed += rep.summary["failed"]
    ok = failed == 0 and total > 0
    _verdict(2, ok, f"parametric families incl. every (a,b) pair, primes to 500 "
                    f"({total} checks, {failed} failures)")


def test_criterion_3_numeric_point_values():
    deep = sweep("M6PT t=1/108 full s", 5, 5000, workers=WORKERS)
    total = deep.summary["total"]
    failed = deep.summary["failed"]
    for fam in ("M4PT", "M3PT", "M6PT", "LMPT", "LMSPT"):
        rep = sweep(fam, 5, 1000, workers=WORKERS)
        total += rep.summary["total"]
        failed += rep.summary["failed"]
    ok = failed == 0 and deep.summary["total"] >= 665
    _verdict(3, ok, f"58 numeric points to 1000 and the 1/108 sum to 5000 "
                    f"({total} checks, {failed} failures)")


def test_criterion_4_cubic_class_branches_exhaustive_to_300():
    total = failed = 0
    for fam in ("TR", "CAT", "SC"):
        rep = sweep(fam, 5, 300, exhaustive=True, workers=WORKERS)
        total += rep.summary["total"]
        failed += rep.summary["failed"]
    zero_iff_c0 = True
    for p in primes_in(5, 300):
        for c in range(p):
            if (c * c + 3) % p == 0:
                continue
            (r,) = check_tr(p, c)
            if (r.rhs == 0) != (r.params["class"] == "C0"):
                zero_iff_c0 = False
    ok = failed == 0 and total > 0 and zero_iff_c0
    _verdict(4, ok, f"cubic-branch checks exhaustive in c to 300; zero branch "
                    f"exactly on class 0 ({total} checks, {failed} failures)")


def test_criterion_5_lm_branch_theorems_to_1000():
    total = failed = 0
    for fam in ("MQL", "MQL2", "MQLS"):
        rep = sweep(fam, 5, 1000, workers=WORKERS)
        total += rep.summary["total"]
        failed += rep.summary["failed"]
    ok = failed == 0 and total > 0
    _verdict(5, ok, f"L,M-branch sums for q in {LM_PRIMES}, primes to 1000 "
                    f"({total} checks, {failed} failures)")


def test_criterion_6_cubic_character_battery():
    ok = True
    rng = random.Random(2024)
    pis = [pi_from_LM(*cornacchia_4p(p)) for p in primes_in(7, 400) if p % 3 == 1]
    pis += [Eis(p, 0) for p in primes_in(5, 100) if p % 3 == 2]
    for _ in range(10_000):
        pi = rng.choice(pis)
        a = Eis(rng.randrange(-60, 60), rng.randrange(-60, 60))
        b = Eis(rng.randrange(-60, 60), rng.randrange(-60, 60))
        ca, cb, cab = cubic_char(a, pi), cubic_char(b, pi), cubic_char(a * b, pi)
        if ca is None or cb is None:
            ok &= cab is None
        else:
            ok &= cab == (ca + cb) % 3 and cubic_char(a * a * a, pi) == 0

    omega = (Eis(1, 0), Eis(0, 1), Eis(-1, -1))
    for p in primes_in(5, 200):
        if p == 3:
            continue
        cs = [rng.randrange(p) for _ in range(5)]
        if p % 3 == 1:
            pi = pi_from_LM(*cornacchia_4p(p))
            for c in cs:
                if (c * c + 3) % p == 0:
                    continue
                lhs = cubic_jacobi(Eis(c + 1, 2), p)
                ok &= lhs == cubic_char(Eis(c * c + 3, 0) * Eis(c - 1, -2), pi)
        else:
            mod = Eis(p, 0)
            for c in cs:
                if (c * c + 3) % p == 0:
                    continue
                j = cubic_jacobi(Eis(c + 1, 2), p)
                scalar = pow(c * c + 3, (p - 2) // 3, p)
                power = eis_pow_mod(Eis(c + 1, 2), (p + 1) // 3, mod)
                ok &= eis_mod(power * Eis(scalar, 0) - omega[j], mod) == Eis(0, 0)

    for m in (5, 7, 11, 13, 49):
        coprime = {c for c in range(m) if gcd(c * c + 3, m) == 1}
        classed = {c for c in range(m) if classify_c(c, m) is not CjClass.EXCLUDED}
        ok &= coprime == classed
        swap = {CjClass.C0: CjClass.C0, CjClass.C1: CjClass.C2,
                CjClass.C2: CjClass.C1, CjClass.EXCLUDED: CjClass.EXCLUDED}
        for c in range(m):
            ok &= classify_c(-c, m) == swap[classify_c(c, m)]
            if c in classed and gcd(c, m) == 1:
                ok &= classify_c(-3 * pow(c, -1, m) % m, m) == classify_c(c, m)

    for q in LM_PRIMES:
        for p in [r for r in primes_in(7, 500) if r % 3 == 1 and r != q]:
            L, M = cornacchia_4p(p)
            if M % q == 0:
                ok &= euler_cubic_class(q, p) == 0
            else:
                ok &= euler_cubic_class(q, p) == classify_c(F(L, 3 * M), q).value
    _verdict(6, ok, "character multiplicativity (10^4 cases), split/inert "
                    "identities to 200, class-partition laws, residuacity "
                    "criterion to 500")


def test_criterion_7_w_identity_battery():
    ok = True
    rng = random.Random(7)
    primes = primes_in(5, 300)

    # 200 seeded triples: matrix path vs naive vs alpha-power compositions
    for _ in range(200):
        p = rng.choice(primes)
        n = rng.randrange(0, 1000)
        x = rng.randrange(p)
        ok &= w_eval(n, x, p) == w_naive(n, x, p)
        ok &= w_eval(n, (2 * x * x - 1) % p, p) == u_eval(2 * n, x, p)
        if x not in (1, p - 1) and (2 * x + 1) % p != 0:
            a = alpha_of(x, p)
            w = w_eval(n, (4 * x**3 - 3 * x) % p, p)
            if isinstance(a, int):
                ai = inv(a, p)
                ok &= (pow(a, 2, p) - ai) * w % p == (pow(a, 3 * n + 2, p) - pow(ai, 3 * n + 1, p)) % p
            else:
                we = Fp2.embed(w, a.d, p)
                ok &= (a**2 - a**-1) * we == a ** (3 * n + 2) - a ** (-3 * n - 1)

    # floor-index congruence forms for every residue, primes to 300
    for p in primes:
        e3 = 1 if p % 3 == 1 else -1
        s4 = inv(2, p) * legendre(-2, p)
        for x in range(p):
            q2 = (2 * x * x - 1) % p
            ok &= w_eval(p // 4, q2, p) == s4 * (legendre(1 - x, p) + legendre(1 + x, p)) % p
            ok &= w_eval(3 * p // 4, q2, p) == s4 * (
                legendre(1 - x, p) * (1 + 2 * x) + legendre(1 + x, p) * (1 - 2 * x)
            ) % p
            y = (4 * x**3 - 3 * x) % p
            m = (2 * x + 1) % p
            lq = legendre(x * x - 1, p)
            ok &= m * w_eval(p // 3, y, p) % p == (e3 * x + lq * (x + 1)) % p
            ok &= m * w_eval(2 * p // 3, y, p) % p == (e3 * (1 - 2 * x * x) + 2 * lq * x * (x + 1)) % p
            la, lb = legendre(2 * x - 2, p), legendre(-6 * x - 6, p)
            ok &= m * w_eval(p // 6, y, p) % p == (la * x + lb * (x + 1)) % p
            ok &= m * w_eval(5 * p // 6, y, p) % p == (
                la * x * (4 * x * x + 2 * x - 1) - lb * (x + 1) * (4 * x * x - 2 * x - 1)
            ) % p

    # closed-form special values for n to 1000
    for p in (1009, 613):
        i2 = inv(2, p)
        for n in range(1001):
            ok &= w_eval(n, 1, p) == (2 * n + 1) % p
            ok &= w_eval(n, p - 1, p) == (-1) ** n % p
            ok &= w_eval(n, 0, p) == (-1) ** (n // 2) % p == w_special(n, 0, p)
            ok &= w_eval(n, i2, p) == w_special(n, F(1, 2), p)
            ok &= w_eval(n, p - i2, p) == w_special(n, F(-1, 2), p)
    _verdict(7, ok, "composition identities on 200 seeded triples, floor-index "
                    "congruences for all residues to 300, special values to n=1000")


def test_criterion_8_companion_sequence_closed_forms():
    ok = [seq_exact(SeqKind.T, n) for n in range(1, 7)] == [
        1, 32, 1792, 122880, 9371648, 763363328,
    ]
    for k in range(1, 65):
        t = seq_exact(SeqKind.T, k)
        ok &= t.denominator == 1 and t > 0
        ok &= t == F(16 ** (k - 1), k) * comb(3 * k - 2, 2 * k - 1)
        ok &= t == 16 ** (k - 1) * (2 * comb(3 * k - 2, k - 1) - comb(3 * k - 2, k))
        ok &= t == F(-1, 24) * 108**k * hyper_coeff(F(-1, 3), F(1, 3), F(1, 2), k)
    _verdict(8, bool(ok), "companion sequence: first six values, integrality and "
                          "three closed forms to k=64")


def test_criterion_9_generating_function_coefficients():
    report = gf_coefficient_check(64)
    ok = bool(report) and all(all(flags) for flags in report.values())
    _verdict(9, ok, "generating-function coefficient identities to index 64 "
                    f"({', '.join(sorted(report))})")
