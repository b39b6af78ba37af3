"""Prime-field arithmetic and valuation-tracked rationals."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from catcong.errors import DenominatorDivisible, NegativeValuation, NotPrime
from catcong.modarith import (
    ZERO,
    FactTable,
    PValued,
    binomial_valued,
    fact_table,
    factorial_valued,
    fp,
    inv,
    legendre,
    pochhammer_valued,
    primes_in,
    reduce_rational,
    require_prime,
    split_p,
)

PRIMES = primes_in(5, 200)
prime_st = st.sampled_from(PRIMES)


def test_primes_in_matches_sieve():
    assert primes_in(1, 30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_in(90, 100) == [97]


def test_require_prime_rejects_composites():
    assert require_prime(101) == 101
    for n in (1, 0, -7, 91, 561, 2**32 + 1):
        with pytest.raises(NotPrime):
            require_prime(n)


@given(prime_st, st.integers(1, 10**9))
def test_inverse_inverts(p, a):
    if a % p == 0:
        a += 1
    assert a * inv(a, p) % p == 1


@given(prime_st, st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_reduce_rational_is_fraction_image(p, a, b):
    if b % p == 0:
        b += 1
    assert reduce_rational(a, b, p) == a * inv(b, p) % p
    assert fp(Fraction(a, b), p) == reduce_rational(a, b, p)


@given(prime_st, st.integers(-50, 50), st.integers(-50, 50))
def test_legendre_multiplicative(p, a, b):
    assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


@given(prime_st, st.integers(1, 10**6))
def test_legendre_euler_criterion(p, a):
    if a % p == 0:
        a += 1
    assert legendre(a, p) % p == pow(a, (p - 1) // 2, p)
    assert legendre(a * a, p) == 1


def test_legendre_conventions():
    # symbol of 0 is 0; a fraction a/b maps to the symbol of a*b
    assert legendre(0, 7) == 0
    assert legendre(Fraction(2, 3), 11) == legendre(6, 11)
    assert legendre(Fraction(-1, 2), 7) == legendre(-2, 7)


@given(prime_st, st.integers(-10**9, 10**9))
def test_split_p_reconstructs(p, n):
    if n == 0:
        n = 1
    e, m = split_p(n, p)
    assert n == p**e * m and m % p != 0


@given(prime_st, st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**6))
def test_pvalued_fraction_image(p, r):
    v = PValued.from_fraction(r, p)
    if r == 0:
        assert v is ZERO
        return
    num, den = r.numerator, r.denominator
    if num % p != 0 and den % p != 0:
        assert v.e == 0
        assert v.to_fp() == reduce_rational(num, den, p)


def test_pvalued_negative_valuation_has_no_image():
    v = PValued.from_fraction(Fraction(1, 7), 7)
    assert v.e == -1
    with pytest.raises(NegativeValuation):
        v.to_fp()


def test_pvalued_positive_valuation_maps_to_zero():
    assert PValued.from_int(49, 7).to_fp() == 0
    assert PValued.from_int(14, 7) == PValued(1, 2, 7)


@given(prime_st, st.integers(0, 400))
def test_factorial_valuation_and_unit(p, n):
    v = factorial_valued(n, p)
    e_expected = 0
    q = p
    while q <= n:
        e_expected += n // q
        q *= p
    assert v.e == e_expected
    assert v.u == math.factorial(n) // p**e_expected % p


@given(prime_st, st.data())
def test_binomial_matches_lucas_product(p, data):
    n = data.draw(st.integers(0, min(p**3 - 1, 30000)))
    k = data.draw(st.integers(0, n))
    v = binomial_valued(n, k, p)
    if v.e == 0:
        prod = 1
        nn, kk = n, k
        while nn or kk:
            prod = prod * math.comb(nn % p, kk % p) % p
            nn //= p
            kk //= p
        assert v.to_fp() == prod
    else:
        # positive valuation <=> some base-p digit of k exceeds that of n
        assert v.e > 0


@given(prime_st, st.data())
def test_pochhammer_three_halves_valuation_threshold(p, data):
    k = data.draw(st.integers(0, p - 1))
    v = pochhammer_valued(Fraction(3, 2), k, p)
    assert (v.e > 0) == (k >= (p - 1) // 2)


def test_pochhammer_zero_factor_and_bad_denominator():
    assert pochhammer_valued(Fraction(-3), 5, 11) is ZERO
    assert pochhammer_valued(Fraction(-3), 3, 11) != ZERO
    with pytest.raises(DenominatorDivisible):
        pochhammer_valued(Fraction(1, 7), 2, 7)


@settings(max_examples=30)
@given(prime_st, st.data())
def test_fact_table_agrees_with_direct(p, data):
    n = data.draw(st.integers(0, 300))
    table = FactTable(p, n)
    m = data.draw(st.integers(0, n))
    assert table.fact(m) == factorial_valued(m, p)
    k = data.draw(st.integers(0, m))
    assert table.binom(m, k) == binomial_valued(m, k, p)


def test_fact_table_cache_returns_same_object():
    assert fact_table(101, 50) is fact_table(101, 50)
