"""Solution counts for x**4 - y**4 = m (mod p) and their quartic-residue refinement.

``N(m)`` counts all (x, y) in [0, p-1]**2; ``N'(m)`` counts ordered pairs of
exponents 1 <= r, s <= (p-1)/4 with g**(4r) - g**(4s) = m.  Each has a
brute-force counter and a closed form in terms of (alpha4, beta4); the
module exists to show they agree.

Closed forms, with e the quartic-character exponent of m (chi(m) = i**e):

    p = 1 (mod 8):  e=0: p-3+6a   e=2: p-3-2a   e=1: p-3-2a+4b   e=3: p-3-2a-4b
    p = 5 (mod 8):  (m|p)=1: p-3+2a   (m|p)=-1: p-3-2a

N'(m) = (N(m) - axis(m)) / 16 where axis(m) counts the solutions with
x*y = 0: 8 when chi(m) = 1 and p = 1 (mod 8), 4 when (m|p) = 1 and
p = 5 (mod 8), else 0.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .modular_core import (
    QuarticSignature,
    alpha_beta,
    as_context,
    legendre,
    quartic_character,
)


@dataclass(frozen=True)
class SolutionCount:
    m: int
    chi_case: int
    brute: int
    formula: int


def _check(m: int, p: int) -> None:
    ctx = as_context(p)
    ctx.require_one_mod_four()
    if m % p == 0:
        raise ValueError(f"p = {p} divides m = {m}")


@lru_cache(maxsize=64)
def fourth_power_histogram(p: int) -> tuple[int, ...]:
    """hist[v] = #{x in [0, p-1] : x**4 = v (mod p)}."""
    hist = [0] * p
    for x in range(p):
        hist[pow(x, 4, p)] += 1
    return tuple(hist)


def brute_N(m: int, p: int) -> int:
    """N(m) by convolving the fourth-power histogram with itself: O(p)."""
    _check(m, p)
    hist = fourth_power_histogram(p)
    m %= p
    return sum(hist[v] * hist[(v - m) % p] for v in range(p) if hist[v])


def brute_N_all(p: int) -> np.ndarray:
    """N(m) for every m in [0, p-1] at once, by differencing the support of
    the fourth-power histogram: O(((p-1)/4)**2)."""
    as_context(p).require_one_mod_four()
    hist = np.asarray(fourth_power_histogram(p), dtype=np.int64)
    support = np.flatnonzero(hist)
    w = hist[support]
    diffs = (support[:, None] - support[None, :]) % p
    return np.bincount(diffs.ravel(), weights=np.outer(w, w).ravel(), minlength=p).astype(np.int64)


def brute_N_loop(m: int, p: int) -> int:
    """N(m) by the O(p**2) double loop; the oracle for :func:`brute_N`."""
    _check(m, p)
    m %= p
    fourth = [pow(x, 4, p) for x in range(p)]
    return sum(1 for u in fourth for v in fourth if (u - v) % p == m)


def _signature(p: int, sig: Optional[QuarticSignature]) -> QuarticSignature:
    return alpha_beta(p) if sig is None else sig


def chi_case(m: int, p: int, sig: Optional[QuarticSignature] = None) -> int:
    """Case key: quartic exponent e for p = 1 (mod 8), Legendre sign for p = 5 (mod 8)."""
    sig = _signature(p, sig)
    if p % 8 == 1:
        return quartic_character(m, p, sig.g)
    return legendre(m, p)


def formula_N(m: int, p: int, sig: Optional[QuarticSignature] = None) -> int:
    _check(m, p)
    sig = _signature(p, sig)
    a, b = sig.alpha4, sig.beta4
    case = chi_case(m, p, sig)
    if p % 8 == 1:
        return {0: p - 3 + 6 * a,
                2: p - 3 - 2 * a,
                1: p - 3 - 2 * a + 4 * b,
                3: p - 3 - 2 * a - 4 * b}[case]
    return p - 3 + 2 * a if case == 1 else p - 3 - 2 * a


def axis_correction(m: int, p: int, sig: Optional[QuarticSignature] = None) -> int:
    """Number of solutions of x**4 - y**4 = m with x*y = 0."""
    case = chi_case(m, p, sig)
    if p % 8 == 1:
        return 8 if case == 0 else 0
    return 4 if case == 1 else 0


def quartic_residues(p: int, g: int) -> list[int]:
    """g**(4r) mod p for r = 1..(p-1)/4."""
    step = pow(g, 4, p)
    out, x = [], 1
    for _ in range((p - 1) // 4):
        x = x * step % p
        out.append(x)
    return out


def brute_Nprime(m: int, p: int, g: Optional[int] = None) -> int:
    """N'(m) by the double loop over exponent pairs (r, s)."""
    _check(m, p)
    g = as_context(p).g if g is None else g
    m %= p
    q = quartic_residues(p, g)
    return sum(1 for u in q for v in q if (u - v) % p == m)


@lru_cache(maxsize=64)
def nprime_table(p: int, g: int) -> Counter:
    """Histogram of g**(4r) - g**(4s) mod p over all r != s."""
    q = quartic_residues(p, g)
    return Counter((u - v) % p for u in q for v in q if u != v)


def formula_Nprime(m: int, p: int, sig: Optional[QuarticSignature] = None) -> int:
    """Closed-form N'(m); raises if the formula is not a non-negative integer."""
    sig = _signature(p, sig)
    numer = formula_N(m, p, sig) - axis_correction(m, p, sig)
    if numer % 16 or numer < 0:
        raise ArithmeticError(
            f"N'({m}) numerator {numer} not a non-negative multiple of 16 "
            f"(p={p}, alpha4={sig.alpha4}, beta4={sig.beta4})")
    return numer // 16


def solution_count(m: int, p: int, sig: Optional[QuarticSignature] = None) -> SolutionCount:
    sig = _signature(p, sig)
    return SolutionCount(m=m % p, chi_case=chi_case(m, p, sig),
                         brute=brute_N(m, p), formula=formula_N(m, p, sig))


def exponent_weighted_sum(p: int, g: Optional[int] = None) -> int:
    """sum_{n=1}^{p-1} n * N'(g**n), with N' taken from the closed form."""
    ctx = as_context(p)
    g = ctx.g if g is None else g
    sig = alpha_beta(p, g)
    total, x = 0, 1
    for n in range(1, p):
        x = x * g % p
        total += n * formula_Nprime(x, p, sig)
    return total


# Rows keyed by p mod 32: admissible (alpha4 mod 16, beta4 mod M) with M
# = 8 for p = 1 (mod 8) and M = 4 for p = 5 (mod 8).
RESIDUE_TABLE: dict[int, tuple[int, tuple[tuple[int, int], ...]]] = {
    1: (8, ((7, 4), (15, 0))),
    9: (8, ((3, 0), (11, 4))),
    17: (8, ((7, 0), (15, 4))),
    25: (8, ((3, 4), (11, 0))),
    5: (4, ((1, 2),)),
    13: (4, ((13, 2),)),
    21: (4, ((9, 2),)),
    29: (4, ((5, 2),)),
}


def table_row(sig: QuarticSignature) -> tuple[int, int, int]:
    """(p mod 32, alpha4 mod 16, beta4 mod M) for comparison with RESIDUE_TABLE."""
    row = sig.p % 32
    modulus = RESIDUE_TABLE[row][0]
    return row, sig.alpha4 % 16, sig.beta4 % modulus


def matches_table(sig: QuarticSignature) -> bool:
    row, a16, bm = table_row(sig)
    return (a16, bm) in RESIDUE_TABLE[row][1]
