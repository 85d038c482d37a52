"""The half-factorial pairing of {1, ..., (p-1)/2} and its statistics.

For p = 1 (mod 4), t = ((p-1)/2)! satisfies t**2 = -1, so x -> half_reduce(t*x)
is an involution without fixed points on the half system.  Each orbit
{a, abar} with a < abar is a chord; pairs of chords are classified as

* X (crossing)  a < b < abar < bbar
* Y (disjoint)  a < abar < b < bbar
* Z (nesting)   a < b < bbar < abar

The module also carries the inversion-count statistics that relate to
these classes: the quadratic sequence count ``s_prime``, the linear count
``gamma`` and the Gauss-lemma count ``gauss_count``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np
from numba import njit

from .modular_core import PrimeContext, as_context, half_reduce


@dataclass(frozen=True)
class ClassCounts:
    x_count: int
    y_count: int
    z_count: int

    @property
    def total(self) -> int:
        return self.x_count + self.y_count + self.z_count

    @property
    def is_balanced(self) -> bool:
        return self.x_count == self.y_count == self.z_count

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x_count, self.y_count, self.z_count)

    def __str__(self) -> str:
        return f"({self.x_count},{self.y_count},{self.z_count})"


@dataclass(frozen=True)
class Pairing:
    """Chords <a, abar> of the half system for one prime p = 1 (mod 4).

    ``V`` is ascending and ``partners[i]`` is the partner of ``V[i]``.
    """

    ctx: PrimeContext
    V: tuple[int, ...]
    partners: tuple[int, ...]

    def partner(self, a: int) -> int:
        return half_reduce(self.ctx.t * a, self.ctx.p)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.V, self.partners))

    def __len__(self) -> int:
        return len(self.V)


def build_pairing(ctx: "int | PrimeContext") -> Pairing:
    ctx = as_context(ctx)
    ctx.require_one_mod_four()
    p, t = ctx.p, ctx.t
    V, partners = [], []
    for x in range(1, ctx.half + 1):
        xbar = half_reduce(t * x, p)
        if x < xbar:
            V.append(x)
            partners.append(xbar)
    return Pairing(ctx, tuple(V), tuple(partners))


class FenwickTree:
    """Prefix counts over indices 1..size."""

    def __init__(self, size: int):
        self.size = size
        self.tree = [0] * (size + 1)

    def add(self, i: int, delta: int = 1) -> None:
        tree, n = self.tree, self.size
        while i <= n:
            tree[i] += delta
            i += i & -i

    def prefix(self, i: int) -> int:
        """Sum over indices 1..i."""
        tree = self.tree
        s = 0
        while i > 0:
            s += tree[i]
            i -= i & -i
        return s


def classify_chords(chords: Iterable[tuple[int, int]]) -> ClassCounts:
    """Crossing/disjoint/nesting counts of chords with distinct endpoints.

    Sweeps chords by left endpoint; for each chord (a, abar) the earlier
    chords are split by where their right endpoint falls.  O(k log k).
    """
    chords = sorted((min(c), max(c)) for c in chords)
    if not chords:
        return ClassCounts(0, 0, 0)
    size = max(r for _, r in chords)
    rights = FenwickTree(size)
    x = z = 0
    for placed, (a, abar) in enumerate(chords):
        below_a = rights.prefix(a)
        below_abar = rights.prefix(abar)
        x += below_abar - below_a
        z += placed - below_abar
        rights.add(abar)
    k = len(chords)
    y = k * (k - 1) // 2 - x - z
    return ClassCounts(x, y, z)


def classify_chords_naive(chords: Iterable[tuple[int, int]]) -> ClassCounts:
    """O(k**2) reference classifier, straight from the interleaving patterns."""
    chords = sorted((min(c), max(c)) for c in chords)
    x = y = z = 0
    for i, (a, abar) in enumerate(chords):
        for b, bbar in chords[i + 1 :]:
            if b < abar < bbar:
                x += 1
            elif abar < b:
                y += 1
            elif bbar < abar:
                z += 1
            else:
                raise ValueError(f"chords ({a},{abar}) and ({b},{bbar}) share an endpoint")
    return ClassCounts(x, y, z)


def classify(pairing: Pairing, method: str = "fast") -> ClassCounts:
    if method == "fast":
        return classify_chords(pairing.pairs)
    if method == "naive":
        return classify_chords_naive(pairing.pairs)
    raise ValueError(f"unknown method {method!r}")


def count_inversions(seq: Sequence[int]) -> int:
    """Number of i < j with seq[i] > seq[j] (strict; ties are not counted).

    Bottom-up merge sort.
    """
    arr = list(seq)
    n = len(arr)
    inv = 0
    width = 1
    buf = [0] * n
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if arr[j] < arr[i]:
                    buf[k] = arr[j]
                    inv += mid - i
                    j += 1
                else:
                    buf[k] = arr[i]
                    i += 1
                k += 1
            buf[k : k + mid - i] = arr[i:mid]
            k += mid - i
            buf[k : k + hi - j] = arr[j:hi]
        arr, buf = buf, arr
        width *= 2
    return inv


def count_inversions_naive(seq: Sequence[int]) -> int:
    n = len(seq)
    return sum(1 for i in range(n) for j in range(i + 1, n) if seq[i] > seq[j])


@njit(cache=True)
def _fenwick_rows(rows, size):
    n_rows, width = rows.shape
    out = np.zeros(n_rows, dtype=np.int64)
    tree = np.zeros(size + 1, dtype=np.int64)
    for r in range(n_rows):
        tree[:] = 0
        inv = 0
        for col in range(width):
            v = rows[r, col]
            i = v
            le = 0
            while i > 0:
                le += tree[i]
                i -= i & -i
            inv += col - le
            i = v
            while i <= size:
                tree[i] += 1
                i += i & -i
        out[r] = inv
    return out


def batch_inversions(rows: np.ndarray) -> np.ndarray:
    """Strict inversion counts of each row of a 2-D array of positive ints.

    A Fenwick tree per row, O(width log max) each, compiled with numba.
    """
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    if rows.ndim != 2:
        raise ValueError("rows must be 2-D")
    if rows.size == 0:
        return np.zeros(rows.shape[0], dtype=np.int64)
    if rows.min() < 1:
        raise ValueError("values must be positive")
    return _fenwick_rows(rows, int(rows.max()))


def quadratic_sequence(ctx: "int | PrimeContext", m: int) -> list[int]:
    """half_reduce(m * i**2) for i = 1..(p-1)/2."""
    ctx = as_context(ctx)
    p = ctx.p
    if m % p == 0:
        raise ValueError(f"p = {p} divides m = {m}")
    return [half_reduce(m * i * i, p) for i in range(1, ctx.half + 1)]


def s_prime(ctx: "int | PrimeContext", m: int) -> int:
    """Strict inversion count of i -> half_reduce(m * i**2), 1 <= i <= (p-1)/2."""
    return count_inversions(quadratic_sequence(ctx, m))


def _require_linear_modulus(x: int, n: int) -> None:
    if n < 5 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 5, got {n}")
    if math.gcd(x, n) != 1:
        raise ValueError(f"gcd({x}, {n}) != 1")


def linear_sequence(x: int, n: int) -> list[int]:
    """half_reduce(x * i) mod n for i = 1..(n-1)/2."""
    _require_linear_modulus(x, n)
    return [half_reduce(x * i, n) for i in range(1, (n - 1) // 2 + 1)]


def gamma(x: int, n: int) -> int:
    """Inversion count of i -> half_reduce(x*i) mod n over 1 <= i <= (n-1)/2.

    n is an odd prime in the supported case; composite odd n is accepted
    but results there are experimental.
    """
    return count_inversions(linear_sequence(x, n))


def gauss_count(x: int, n: int) -> int:
    """#{1 <= i <= (n-1)/2 : x*i mod n > n/2}.

    For prime n this is the Gauss-lemma exponent: (-1)**count == (x|n).
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 3, got {n}")
    if x % n == 0:
        raise ValueError(f"{n} divides {x}")
    return sum(1 for i in range(1, (n - 1) // 2 + 1) if 2 * (x * i % n) > n)


def gamma_and_gauss_rows(n: int, xs: Optional[Sequence[int]] = None) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized (xs, gamma(x, n), gauss_count(x, n)) for many x at once.

    ``xs`` defaults to every x in [1, n-1] coprime to n.
    """
    if n < 5 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 5, got {n}")
    if xs is None:
        xs = [x for x in range(1, n) if math.gcd(x, n) == 1]
    xs_arr = np.asarray(xs, dtype=np.int64)
    if np.any(np.gcd(xs_arr, n) != 1):
        raise ValueError(f"every x must be coprime to {n}")
    i = np.arange(1, (n - 1) // 2 + 1, dtype=np.int64)
    residues = np.outer(xs_arr, i) % n
    high = 2 * residues > n
    reduced = np.where(high, n - residues, residues)
    return xs_arr, batch_inversions(reduced), high.sum(axis=1)


@dataclass(frozen=True)
class PartnerDifferenceResult:
    passed: bool
    differences: tuple[int, ...]
    reduced_sums: tuple[int, ...]
    counterexample: Optional[str] = None


def partner_difference_check(pairing: Pairing) -> PartnerDifferenceResult:
    """Check that a -> abar - a permutes V with partner half_reduce(abar + a).

    Also checks that the reduced sums half_reduce(abar + a) are exactly the
    complement of V in the half system.
    """
    p = pairing.ctx.p
    V = set(pairing.V)
    partner_of = dict(pairing.pairs)
    diffs, sums = [], []
    for a, abar in pairing.pairs:
        b = abar - a
        s = half_reduce(abar + a, p)
        diffs.append(b)
        sums.append(s)
        if b not in V:
            return PartnerDifferenceResult(False, tuple(diffs), tuple(sums),
                                           f"a={a}: abar-a={b} not in V")
        if partner_of[b] != s:
            return PartnerDifferenceResult(
                False, tuple(diffs), tuple(sums),
                f"a={a}: partner({b})={partner_of[b]} != half_reduce(abar+a)={s}")
    if set(diffs) != V or len(set(diffs)) != len(diffs):
        return PartnerDifferenceResult(False, tuple(diffs), tuple(sums),
                                       "a -> abar - a is not a bijection of V")
    complement = set(range(1, pairing.ctx.half + 1)) - V
    if set(sums) != complement or len(set(sums)) != len(sums):
        return PartnerDifferenceResult(False, tuple(diffs), tuple(sums),
                                       "reduced sums are not the complement of V")
    return PartnerDifferenceResult(True, tuple(diffs), tuple(sums))


def v2_count(pairing: Pairing) -> int:
    """#{a in V : a + abar > p/2}."""
    p = pairing.ctx.p
    return sum(1 for a, abar in pairing.pairs if 2 * (a + abar) > p)
