import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from balanced_pairing.modular_core import (
    PrimeContext,
    alpha_beta,
    discrete_log,
    half_factorial_t,
    half_reduce,
    is_prime,
    legendre,
    multiplicative_order,
    prime_context,
    primes_between,
    primitive_root,
    primitive_roots,
    prod_mod,
    quartic_character,
    two_squares,
    _bsgs,
)

SMALL_PRIMES = primes_between(3, 400)
ONE_MOD_FOUR = [p for p in SMALL_PRIMES if p % 4 == 1]


def trial_division_is_prime(n):
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def test_is_prime_against_trial_division():
    for n in range(-3, 5000):
        assert is_prime(n) == trial_division_is_prime(n), n


@pytest.mark.parametrize("n", [2**31 - 1, 2**61 - 1, 1_000_000_007, 998_244_353])
def test_is_prime_large_primes(n):
    assert is_prime(n)


@pytest.mark.parametrize("n", [3215031751, 2**31 + 1, 561, 41041, 3825123056546413051])
def test_is_prime_rejects_strong_pseudoprimes(n):
    assert not is_prime(n)


def test_primes_between():
    assert primes_between(5, 30) == [5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_between(10, 5) == []
    assert len(primes_between(1, 10_000)) == 1229


@pytest.mark.parametrize("x, p, expected", [(8, 13, 5), (-1, 29, 1), (32, 13, 6), (20, 13, 6), (6, 13, 6)])
def test_half_reduce_examples(x, p, expected):
    assert half_reduce(x, p) == expected


def test_half_reduce_product_is_well_defined_p13():
    assert half_reduce(4 * 8, 13) == half_reduce(half_reduce(4, 13) * half_reduce(8, 13), 13) == 6
    # addition is not compatible with the reduction
    assert half_reduce(half_reduce(4, 13) + half_reduce(8, 13), 13) == 4 != half_reduce(4 + 8, 13) == 1


@pytest.mark.parametrize("x, p", [(0, 13), (26, 13), (3, 4), (3, 1)])
def test_half_reduce_errors(x, p):
    with pytest.raises(ValueError):
        half_reduce(x, p)


@given(st.sampled_from(SMALL_PRIMES), st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_half_reduce_properties(p, x, y):
    if x % p == 0 or y % p == 0:
        return
    r = half_reduce(x, p)
    assert 1 <= r <= (p - 1) // 2
    assert r == min(x % p, p - x % p)
    assert r == half_reduce(-x, p) == half_reduce(x + p, p)
    assert half_reduce(x * y, p) == half_reduce(half_reduce(x, p) * half_reduce(y, p), p)


@pytest.mark.parametrize("p, t", [(29, 12), (13, 5), (5, 2)])
def test_half_factorial_examples(p, t):
    assert half_factorial_t(p) == t


def test_half_factorial_matches_factorial_and_squares():
    for p in SMALL_PRIMES:
        t = half_factorial_t(p)
        assert t == math.factorial((p - 1) // 2) % p
        if p % 4 == 1:
            assert t * t % p == p - 1
        else:
            assert t in (1, p - 1)


@pytest.mark.parametrize("p, g", [(13, 2), (29, 2), (7, 3), (17, 3), (41, 6)])
def test_primitive_root_examples(p, g):
    assert primitive_root(p) == g


def test_primitive_root_is_smallest_full_order():
    for p in SMALL_PRIMES:
        g = primitive_root(p)
        assert multiplicative_order(g, p) == p - 1
        assert all(multiplicative_order(h, p) < p - 1 for h in range(2, g))


def test_primitive_roots_two_smallest():
    assert primitive_roots(13, 2) == [2, 6]
    assert primitive_roots(5, 2) == [2, 3]


def test_half_group_is_cyclic():
    for p in SMALL_PRIMES[:30]:
        g, h = primitive_root(p), (p - 1) // 2
        seen, x = [], 1
        for _ in range(h):
            x = half_reduce(g * x, p)
            seen.append(x)
        assert sorted(seen) == list(range(1, h + 1))


def test_legendre_examples():
    assert legendre(2, 13) == -1
    assert legendre(2, 17) == 1
    for p in SMALL_PRIMES:
        assert legendre(4, p) == 1
    with pytest.raises(ValueError):
        legendre(26, 13)


def test_legendre_against_squares():
    for p in SMALL_PRIMES[:40]:
        squares = {x * x % p for x in range(1, p)}
        for m in range(1, p):
            assert legendre(m, p) == (1 if m in squares else -1)


def test_discrete_log_paths_agree():
    for p in [13, 101, 997, 7919]:
        g = primitive_root(p)
        for m in range(1, p, max(1, p // 50)):
            k = discrete_log(m, p, g)
            assert pow(g, k, p) == m
            assert _bsgs(m, p, g) == k


def test_discrete_log_above_table_bound():
    p = 1_000_003
    g = primitive_root(p)
    for m in (2, 12345, p - 1):
        assert pow(g, discrete_log(m, p, g), p) == m


def test_quartic_character_examples():
    ctx = prime_context(13)
    assert quartic_character(ctx.g, ctx) == 1
    assert quartic_character(3, 13) == 0
    for a in range(1, 13):
        assert quartic_character(pow(a, 4, 13), 13) == 0
    with pytest.raises(ValueError):
        quartic_character(13, 13)
    with pytest.raises(ValueError):
        quartic_character(2, 7)


def test_quartic_character_multiplicative_and_squares_to_legendre():
    for p in ONE_MOD_FOUR[:15]:
        for m in range(1, p):
            e = quartic_character(m, p)
            assert (e % 2 == 0) == (legendre(m, p) == 1)
            for n in (2, 3, p - 1):
                assert quartic_character(m * n, p) == (e + quartic_character(n, p)) % 4


def test_two_squares():
    for p in ONE_MOD_FOUR:
        a, b = two_squares(p)
        assert a * a + b * b == p and a % 2 == 1
    with pytest.raises(ValueError):
        two_squares(7)


@pytest.mark.parametrize("p, g, alpha, beta", [(13, 2, -3, 2), (5, 2, 1, 2), (29, 2, 5, 2), (17, 3, -1, 4)])
def test_alpha_beta_examples(p, g, alpha, beta):
    sig = alpha_beta(p, g)
    assert (sig.alpha4, sig.beta4) == (alpha, beta)


def test_alpha_beta_invariants():
    for p in ONE_MOD_FOUR:
        for g in primitive_roots(p, 2):
            sig = alpha_beta(p, g)
            a, b = sig.alpha4, sig.beta4
            assert a * a + b * b == p
            assert a % 2 == 1 and b % 2 == 0
            assert (a + legendre(2, p)) % 4 == 0
            assert (b - a * pow(g, (p - 1) // 4, p)) % p == 0


def test_prime_context_fields():
    ctx = PrimeContext(29)
    assert (ctx.residue_class_mod4, ctx.half, ctx.t, ctx.g, ctx.L_p, ctx.M_p) == (1, 14, 12, 2, 7, 105)
    assert PrimeContext(7).L_p is None
    for p in ONE_MOD_FOUR:
        if p > 5:
            assert (p - 1) * (p - 5) % 96 == 0 and prime_context(p).L_p > 0


@pytest.mark.parametrize("p", [1, 2, 4, 9, 15, 2**31 + 11])
def test_prime_context_rejects(p):
    with pytest.raises(ValueError):
        PrimeContext(p)


@settings(max_examples=50)
@given(st.lists(st.integers(0, 2**31 - 2), max_size=40))
def test_prod_mod_exact_near_bound(values):
    p = 2**31 - 1
    expected = 1
    for v in values:
        expected = expected * v % p
    assert prod_mod(values, p) == expected
