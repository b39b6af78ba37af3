"""The recurrence w_{n+1} = 2x w_n - w_{n-1} over F_p: evaluators, special
values, and the quadratic/cubic composition identities."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from catcong.errors import DegenerateX
from catcong.modarith import fp, inv, legendre, primes_in
from catcong.wseq import Fp2, alpha_of, u_eval, w_closed_form, w_eval, w_naive, w_special

PRIMES = primes_in(5, 200)
prime_st = st.sampled_from(PRIMES)


@given(prime_st, st.integers(0, 1000), st.integers(0, 10**6))
def test_matrix_path_equals_naive_recurrence(p, n, x):
    x %= p
    assert w_eval(n, x, p) == w_naive(n, x, p)


@given(prime_st, st.integers(0, 1000), st.integers(0, 10**6))
def test_closed_form_equals_matrix_path(p, n, x):
    x %= p
    if x in (1, p - 1):
        with pytest.raises(DegenerateX):
            w_closed_form(n, x, p)
    else:
        assert w_closed_form(n, x, p) == w_eval(n, x, p)


@given(prime_st, st.integers(0, 1000), st.integers(0, 10**6))
def test_w_is_sum_of_adjacent_chebyshev_u(p, n, x):
    x %= p
    prev = u_eval(n - 1, x, p) if n > 0 else 0
    assert w_eval(n, x, p) == (u_eval(n, x, p) + prev) % p


def test_chebyshev_u_seeds():
    assert u_eval(0, 4, 11) == 1
    assert u_eval(1, 4, 11) == 8
    assert u_eval(3, 2, 7) == 0  # 8x^3 - 4x at x = 2


def test_special_values_against_direct_evaluation():
    for p in (5, 13, 1009):
        i2 = inv(2, p)
        for n in range(0, 1001, 7):
            assert w_eval(n, 1, p) == (2 * n + 1) % p
            assert w_eval(n, p - 1, p) == (-1) ** n % p
            assert w_eval(n, 0, p) == (-1) ** (n // 2) % p
            assert w_eval(n, i2, p) == w_special(n, Fraction(1, 2), p)
            assert w_eval(n, p - i2, p) == w_special(n, Fraction(-1, 2), p)
            assert w_special(n, 0, p) == (-1) ** (n // 2) % p
            assert w_special(n, 1, p) == (2 * n + 1) % p
            assert w_special(n, -1, p) == (-1) ** n % p


def test_half_point_patterns():
    # period 6 at 1/2 with values 2,1,-1,-2,-1,1; period 3 at -1/2 with 1,0,-1
    p = 101
    assert [w_special(n, Fraction(1, 2), p) for n in range(6)] == [
        v % p for v in (1, 2, 1, -1, -2, -1)
    ]
    assert [w_special(n, Fraction(-1, 2), p) for n in range(6)] == [
        v % p for v in (1, 0, -1, 1, 0, -1)
    ]
    assert w_special(1, Fraction(1, 2), p) == 2  # 2cos(0)
    assert w_special(1, Fraction(-1, 2), p) == 0


@given(prime_st, st.integers(2, 10**6))
def test_alpha_satisfies_quadratic(p, x):
    x %= p
    if x in (1, p - 1):
        return
    a = alpha_of(x, p)
    if isinstance(a, Fp2):
        assert legendre(x * x - 1, p) == -1
        two_x = Fp2.embed(2 * x, a.d, p)
        one = Fp2.embed(1, a.d, p)
        assert a * a + one == two_x * a
    else:
        assert (a * a + 1) % p == 2 * x * a % p


@given(prime_st, st.integers(0, 500), st.integers(0, 10**6))
def test_quadratic_composition(p, n, x):
    # w_n(2x^2 - 1) equals U_{2n}(x)
    x %= p
    assert w_eval(n, (2 * x * x - 1) % p, p) == u_eval(2 * n, x, p)


@settings(max_examples=200)
@given(prime_st, st.integers(0, 500), st.integers(0, 10**6))
def test_cubic_composition_via_alpha_powers(p, n, x):
    # (alpha^2 - alpha^{-1}) w_n(4x^3 - 3x) = alpha^{3n+2} - alpha^{-3n-1}
    x %= p
    if x == 1 or (2 * x + 1) % p == 0:
        return
    y = (4 * x**3 - 3 * x) % p
    w = w_eval(n, y, p)
    a = alpha_of(x, p) if x != p - 1 else None
    if a is None:
        return
    if isinstance(a, int):
        ainv = inv(a, p)
        lhs = (pow(a, 2, p) - ainv) * w % p
        rhs = (pow(a, 3 * n + 2, p) - pow(ainv, 3 * n + 1, p)) % p
    else:
        we = Fp2.embed(w, a.d, p)
        lhs = (a**2 - a**-1) * we
        rhs = a ** (3 * n + 2) - a ** (-3 * n - 1)
    assert lhs == rhs


def _dp(p):
    return range(p)


@pytest.mark.parametrize("p", primes_in(5, 60))
def test_quarter_index_values_from_legendre_symbols(p):
    for x in _dp(p):
        s = inv(2, p) * legendre(-2, p)
        w1 = w_eval(p // 4, (2 * x * x - 1) % p, p)
        w3 = w_eval(3 * p // 4, (2 * x * x - 1) % p, p)
        assert w1 == s * (legendre(1 - x, p) + legendre(1 + x, p)) % p
        assert w3 == s * (legendre(1 - x, p) * (1 + 2 * x) + legendre(1 + x, p) * (1 - 2 * x)) % p


@pytest.mark.parametrize("p", primes_in(5, 60))
def test_third_index_values_from_legendre_symbols(p):
    e3 = 1 if p % 3 == 1 else -1
    for x in _dp(p):
        y = (4 * x**3 - 3 * x) % p
        m = (2 * x + 1) % p
        lq = legendre(x * x - 1, p)
        assert m * w_eval(p // 3, y, p) % p == (e3 * x + lq * (x + 1)) % p
        assert m * w_eval(2 * p // 3, y, p) % p == (e3 * (1 - 2 * x * x) + 2 * lq * x * (x + 1)) % p


@pytest.mark.parametrize("p", primes_in(5, 60))
def test_sixth_index_values_from_legendre_symbols(p):
    for x in _dp(p):
        y = (4 * x**3 - 3 * x) % p
        m = (2 * x + 1) % p
        la = legendre(2 * x - 2, p)
        lb = legendre(-6 * x - 6, p)
        assert m * w_eval(p // 6, y, p) % p == (la * x + lb * (x + 1)) % p
        assert (
            m * w_eval(5 * p // 6, y, p) % p
            == (la * x * (4 * x * x + 2 * x - 1) - lb * (x + 1) * (4 * x * x - 2 * x - 1)) % p
        )


def test_alpha_rejects_degenerate_arguments():
    with pytest.raises(DegenerateX):
        alpha_of(1, 11)
    with pytest.raises(DegenerateX):
        alpha_of(10, 11)


def test_fp2_norm_multiplicative():
    p, d = 11, 2
    a = Fp2(3, 5, d, p)
    b = Fp2(7, 1, d, p)
    assert (a * b).norm() == a.norm() * b.norm() % p
    assert (a * a.inverse()) == Fp2.embed(1, d, p)
