"""Exact modular arithmetic over odd primes.

Half-system reduction, the half-factorial, primitive roots, Legendre and
quartic characters, and the normalized two-squares decomposition of a
prime p = 1 (mod 4).

All values are Python ints, so products are exact for any modulus; the
supported range is p < 2**31, which keeps the numpy helpers inside int64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

MAX_MODULUS = 2**31

# Deterministic for n < 3.3e24, which covers 2**64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_DLOG_TABLE_BOUND = 10**5


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact below 2**64)."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """All primes in the inclusive range [lo, hi], by sieve."""
    if hi < 2 or hi < lo:
        return []
    sieve = np.ones(hi + 1, dtype=bool)
    sieve[:2] = False
    for q in range(2, math.isqrt(hi) + 1):
        if sieve[q]:
            sieve[q * q :: q] = False
    return [int(q) for q in np.flatnonzero(sieve) if q >= lo]


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending (trial division)."""
    factors = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            factors.append(q)
            while n % q == 0:
                n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def _require_odd_modulus(p: int) -> None:
    if p < 3 or p % 2 == 0:
        raise ValueError(f"modulus must be odd and >= 3, got {p}")


def _require_odd_prime(p: int) -> None:
    _require_odd_modulus(p)
    if p >= MAX_MODULUS:
        raise ValueError(f"modulus {p} exceeds supported bound 2**31")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def half_reduce(x: int, p: int) -> int:
    """Map a nonzero residue to its representative in [1, (p-1)/2].

    Returns ``x mod p`` if that is below p/2, else ``p - (x mod p)``, so
    ``half_reduce(x) == half_reduce(-x)``.  Works for any odd modulus.
    """
    _require_odd_modulus(p)
    r = x % p
    if r == 0:
        raise ValueError(f"half_reduce undefined at 0 (mod {p})")
    return p - r if 2 * r > p else r


def half_factorial_t(p: int) -> int:
    """((p-1)/2)! mod p by running product."""
    _require_odd_prime(p)
    t = 1
    for x in range(2, (p - 1) // 2 + 1):
        t = t * x % p
    return t


def multiplicative_order(a: int, p: int) -> int:
    """Order of a in (Z/pZ)* by brute-force powering; slow, used as an oracle."""
    a %= p
    if a == 0:
        raise ValueError("0 has no multiplicative order")
    k, x = 1, a
    while x != 1:
        x = x * a % p
        k += 1
    return k


def is_primitive_root(g: int, p: int) -> bool:
    if g % p == 0:
        return False
    return all(pow(g, (p - 1) // q, p) != 1 for q in prime_factors(p - 1))


def primitive_roots(p: int, count: int = 1) -> list[int]:
    """The ``count`` smallest primitive roots of p (fewer if p has fewer)."""
    _require_odd_prime(p)
    roots = []
    for g in range(2, p):
        if is_primitive_root(g, p):
            roots.append(g)
            if len(roots) == count:
                break
    return roots


def primitive_root(p: int) -> int:
    """Smallest primitive root of p."""
    return primitive_roots(p, 1)[0]


def legendre(m: int, p: int) -> int:
    """Legendre symbol (m|p) via Euler's criterion, as +1 or -1."""
    if m % p == 0:
        raise ValueError(f"Legendre symbol needs p not dividing m (m={m}, p={p})")
    return 1 if pow(m, (p - 1) // 2, p) == 1 else -1


@lru_cache(maxsize=32)
def _dlog_table(p: int, g: int) -> tuple[int, ...]:
    table = [0] * p
    x = 1
    for k in range(p - 1):
        table[x] = k
        x = x * g % p
    return tuple(table)


def _bsgs(m: int, p: int, g: int) -> int:
    n = p - 1
    step = math.isqrt(n) + 1
    baby = {}
    x = 1
    for j in range(step):
        baby.setdefault(x, j)
        x = x * g % p
    giant = pow(g, -step, p)
    y = m
    for i in range(step):
        if y in baby:
            return (i * step + baby[y]) % n
        y = y * giant % p
    raise ArithmeticError(f"no discrete log of {m} base {g} mod {p}")


def discrete_log(m: int, p: int, g: int) -> int:
    """Index k in [0, p-2] with g**k = m (mod p).

    Direct table scan below 10**5, baby-step/giant-step above.
    """
    m %= p
    if m == 0:
        raise ValueError(f"no discrete log of 0 (mod {p})")
    if p < _DLOG_TABLE_BOUND:
        return _dlog_table(p, g)[m]
    return _bsgs(m, p, g)


@dataclass(frozen=True)
class PrimeContext:
    """A validated odd prime together with the constants derived from it."""

    p: int
    residue_class_mod4: int = field(init=False)
    half: int = field(init=False)
    t: int = field(init=False)
    g: int = field(init=False)
    L_p: Optional[int] = field(init=False)
    M_p: int = field(init=False)

    def __post_init__(self) -> None:
        p = self.p
        _require_odd_prime(p)
        set_ = object.__setattr__
        set_(self, "residue_class_mod4", p % 4)
        set_(self, "half", (p - 1) // 2)
        set_(self, "t", half_factorial_t(p))
        set_(self, "g", primitive_root(p))
        set_(self, "L_p", (p - 1) * (p - 5) // 96 if p % 4 == 1 else None)
        set_(self, "M_p", (p * p - 1) // 8)

    @property
    def is_one_mod_four(self) -> bool:
        return self.residue_class_mod4 == 1

    def require_one_mod_four(self) -> None:
        if not self.is_one_mod_four:
            raise ValueError(f"p = {self.p} is not 1 (mod 4)")


@lru_cache(maxsize=256)
def prime_context(p: int) -> PrimeContext:
    """Cached :class:`PrimeContext` constructor."""
    return PrimeContext(p)


def as_context(p_or_ctx: "int | PrimeContext") -> PrimeContext:
    if isinstance(p_or_ctx, PrimeContext):
        return p_or_ctx
    return prime_context(int(p_or_ctx))


def quartic_character(m: int, ctx: "int | PrimeContext", g: Optional[int] = None) -> int:
    """Exponent e in {0,1,2,3} with chi(m) = i**e, where chi(g) = i.

    ``g`` defaults to the smallest primitive root of p.
    """
    ctx = as_context(ctx)
    ctx.require_one_mod_four()
    if m % ctx.p == 0:
        raise ValueError(f"quartic character needs p not dividing m (m={m}, p={ctx.p})")
    g = ctx.g if g is None else g
    return discrete_log(m, ctx.p, g) % 4


def two_squares(p: int) -> tuple[int, int]:
    """Cornacchia: (a, b) with a**2 + b**2 = p, a odd, both positive."""
    if p == 2:
        return 1, 1
    if p % 4 != 1:
        raise ValueError(f"{p} is not a sum of two squares")
    # sqrt(-1) from any non-residue c: c**((p-1)/4)
    c = 2
    while pow(c, (p - 1) // 2, p) != p - 1:
        c += 1
    r = pow(c, (p - 1) // 4, p)
    a, b = p, r
    bound = math.isqrt(p)
    while b > bound:
        a, b = b, a % b
    rest = p - b * b
    s = math.isqrt(rest)
    if s * s != rest:
        raise ArithmeticError(f"Cornacchia failed for p = {p}; is it prime?")
    return (b, s) if b % 2 == 1 else (s, b)


@dataclass(frozen=True)
class QuarticSignature:
    """Normalized p = alpha4**2 + beta4**2 tied to a primitive root g."""

    p: int
    g: int
    alpha4: int
    beta4: int

    def chi_exponent_of(self, m: int) -> int:
        return discrete_log(m, self.p, self.g) % 4


def alpha_beta(p: int, g: Optional[int] = None) -> QuarticSignature:
    """The unique (alpha4, beta4) with

    * alpha4**2 + beta4**2 = p,
    * alpha4 = -(2|p) (mod 4),
    * beta4 = alpha4 * g**((p-1)/4) (mod p).
    """
    ctx = as_context(p)
    ctx.require_one_mod_four()
    p = ctx.p
    g = ctx.g if g is None else g
    a, b = two_squares(p)
    alpha = a if a % 4 == (-legendre(2, p)) % 4 else -a
    beta = b
    if (alpha * pow(g, (p - 1) // 4, p) - beta) % p != 0:
        beta = -b
    if (alpha * pow(g, (p - 1) // 4, p) - beta) % p != 0:
        raise ArithmeticError(f"no normalized (alpha4, beta4) for p={p}, g={g}")
    return QuarticSignature(p=p, g=g, alpha4=alpha, beta4=beta)


def prod_mod(values: Iterable[int], p: int) -> int:
    """Product of ``values`` reduced mod p, exact for p < 2**31.

    Uses pairwise tree reduction on int64 arrays; every intermediate is a
    product of two residues below 2**31.
    """
    arr = np.asarray(list(values) if not isinstance(values, np.ndarray) else values,
                     dtype=np.int64) % p
    if arr.size == 0:
        return 1 % p
    while arr.size > 1:
        if arr.size % 2:
            arr = np.append(arr, np.int64(1))
        arr = (arr[0::2] * arr[1::2]) % p
    return int(arr[0])
