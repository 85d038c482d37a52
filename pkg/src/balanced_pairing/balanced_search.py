"""Balanced perfect matchings of {1, ..., n} for general even n.

A matching is balanced when its crossing, disjoint and nesting counts over
all pairs of pairs coincide.  That forces 3 | C(n/2, 2), i.e. n = 0 or
2 (mod 6).  This module enumerates matchings exhaustively for small n and
runs a pruned backtracking search for larger n.

Matchings are built by always pairing the smallest unmatched element, so
each of the (n-1)!! matchings is reached exactly once.  When the pair
(a, b) is added, every placed pair (c, d) has c < a, so its relation to
the new pair is fixed at once:

    d < a        disjoint
    a < d < b    crossing
    d > b        nesting
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .pairing import ClassCounts, build_pairing, classify_chords, classify_chords_naive

EXHAUSTIVE_BOUND = 16
DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class GeneralMatching:
    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n = self.n
        if n < 2 or n % 2:
            raise ValueError(f"n must be even and >= 2, got {n}")
        pairs = tuple(sorted((min(a, b), max(a, b)) for a, b in self.pairs))
        points = sorted(x for pair in pairs for x in pair)
        if points != list(range(1, n + 1)):
            raise ValueError(f"pairs do not partition 1..{n}")
        object.__setattr__(self, "pairs", pairs)

    def counts(self) -> ClassCounts:
        return classify_general(self)

    def serialize(self) -> str:
        body = "".join(f"({a},{b})" for a, b in self.pairs)
        return f"n={self.n} pairs={body} counts={self.counts()}"

    @classmethod
    def parse(cls, line: str) -> "GeneralMatching":
        m = re.fullmatch(r"\s*n=(\d+) pairs=((?:\(\d+,\d+\))*) counts=\((\d+),(\d+),(\d+)\)\s*", line)
        if not m:
            raise ValueError(f"malformed certificate: {line!r}")
        pairs = tuple((int(a), int(b)) for a, b in re.findall(r"\((\d+),(\d+)\)", m.group(2)))
        matching = cls(int(m.group(1)), pairs)
        stated = tuple(int(m.group(i)) for i in (3, 4, 5))
        if matching.counts().as_tuple() != stated:
            raise ValueError(f"certificate counts {stated} do not match the pairs")
        return matching

    def reversed(self) -> "GeneralMatching":
        """Image under i -> n + 1 - i."""
        n = self.n
        return GeneralMatching(n, tuple((n + 1 - b, n + 1 - a) for a, b in self.pairs))

    def has_difference_property(self) -> bool:
        """Whether a -> abar - a permutes the set of smaller endpoints."""
        firsts = {a for a, _ in self.pairs}
        return sorted(b - a for a, b in self.pairs) == sorted(firsts)


@dataclass
class SearchResult:
    n: int
    found: list[GeneralMatching] = field(default_factory=list)
    exhausted: bool = False
    total_matchings_examined: int = 0
    balanced_count: Optional[int] = None
    nodes_expanded: int = 0

    def summary(self) -> str:
        count = "unknown" if self.balanced_count is None else str(self.balanced_count)
        return (f"n={self.n} exhausted={str(self.exhausted).lower()} "
                f"examined={self.total_matchings_examined} nodes={self.nodes_expanded} "
                f"balanced_count={count} certificates={len(self.found)}")


def classify_general(matching: GeneralMatching, method: str = "fast") -> ClassCounts:
    if method == "naive":
        return classify_chords_naive(matching.pairs)
    return classify_chords(matching.pairs)


def feasibility_precheck(n: int) -> bool:
    """True iff 3 divides C(n/2, 2), i.e. n = 0 or 2 (mod 6)."""
    if n < 2 or n % 2:
        raise ValueError(f"n must be even and >= 2, got {n}")
    k = n // 2
    return (k * (k - 1) // 2) % 3 == 0


def from_prime(p: int) -> GeneralMatching:
    """The half-factorial pairing for p = 1 (mod 4) as a matching of 1..(p-1)/2."""
    pairing = build_pairing(p)
    return GeneralMatching((p - 1) // 2, pairing.pairs)


def _walk(n: int, first_partner: Optional[int], target: Optional[int], limit: int,
          budget: Optional[int], visitor: Optional[Callable]) -> SearchResult:
    """Depth-first walk of the canonical matching tree.

    ``target`` enables pruning and the certificate ``limit`` (search mode);
    with ``target=None`` every leaf is visited.  ``first_partner`` restricts
    the walk to one subtree below element 1.
    """
    k = n // 2
    used = [False] * (n + 2)
    pairs: list[tuple[int, int]] = []
    result = SearchResult(n)
    balanced = 0
    nodes = 0
    cut = False

    def rec(a: int, u: int, x: int, y: int, z: int) -> None:
        # a is the smallest unmatched element; u pairs are placed
        nonlocal balanced, nodes, cut
        if u == k:
            result.total_matchings_examined += 1
            if x == y == z:
                balanced += 1
                if len(result.found) < limit:
                    result.found.append(GeneralMatching(n, tuple(pairs)))
                elif target is not None:
                    cut = True
            if visitor is not None:
                visitor(tuple(pairs), (x, y, z))
            return
        used[a] = True
        # every element below a is matched and all u lefts are below a
        below = a - 1 - u
        open_rights = u - below
        ny = y + below
        remaining = k - u - 1
        between = 0
        for b in range(a + 1, n + 1):
            if b > a + 1:
                between += used[b - 1]
            if used[b] or (u == 0 and first_partner is not None and b != first_partner):
                continue
            nx = x + between
            nz = z + open_rights - between
            used[b] = True
            c = a + 1
            while used[c]:
                c += 1
            if target is not None:
                # pairs ending before c are disjoint from every later pair
                closed = c - u - 2
                if nx > target or nz > target or ny + closed * remaining > target:
                    used[b] = False
                    continue
                if budget is not None and nodes >= budget:
                    used[b] = False
                    cut = True
                    break
            nodes += 1
            pairs.append((a, b))
            rec(c, u + 1, nx, ny, nz)
            pairs.pop()
            used[b] = False
            if cut:
                break
        used[a] = False

    rec(1, 0, 0, 0, 0)
    result.nodes_expanded = nodes
    result.exhausted = not cut
    result.balanced_count = balanced if result.exhausted else None
    return result


def enumerate_all(n: int, visitor: Optional[Callable] = None, bound: int = EXHAUSTIVE_BOUND,
                  jobs: int = 1, limit: int = 1) -> SearchResult:
    """Visit every perfect matching of 1..n once and count the balanced ones.

    ``visitor(pairs, (x, y, z))`` is called on each leaf if given.  With
    ``jobs > 1`` the n-1 subtrees below element 1 run in worker processes
    (no visitor allowed) and are merged in subtree order.
    """
    if n < 2 or n % 2:
        raise ValueError(f"n must be even and >= 2, got {n}")
    if n > bound:
        raise ValueError(f"n={n} exceeds the exhaustive bound {bound}; use search()")
    if jobs <= 1:
        return _walk(n, None, None, limit, None, visitor)
    if visitor is not None:
        raise ValueError("visitor is not supported with jobs > 1")
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_subtree, [(n, b, limit) for b in range(2, n + 1)]))
    return _merge(n, parts, limit)


def _subtree(args: tuple[int, int, int]) -> SearchResult:
    n, b, limit = args
    return _walk(n, b, None, limit, None, None)


def _merge(n: int, parts: list[SearchResult], limit: int) -> SearchResult:
    out = SearchResult(n, exhausted=all(r.exhausted for r in parts))
    for r in parts:
        out.found.extend(r.found)
        out.total_matchings_examined += r.total_matchings_examined
        out.nodes_expanded += r.nodes_expanded
    out.found = out.found[:limit]
    out.balanced_count = sum(r.balanced_count for r in parts) if out.exhausted else None
    return out


def search(n: int, limit: int = 1, budget: Optional[int] = DEFAULT_BUDGET) -> SearchResult:
    """Pruned backtracking for balanced matchings of 1..n.

    Stops when a balanced leaf beyond the first ``limit`` certificates is
    seen, or after ``budget`` expanded nodes.  If the tree is fully explored
    (``exhausted``) the balanced count is exact.  Infeasible n (n = 4 mod 6)
    returns at once with a count of 0.
    """
    if n < 2 or n % 2:
        raise ValueError(f"n must be even and >= 2, got {n}")
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if not feasibility_precheck(n):
        return SearchResult(n, exhausted=True, balanced_count=0)
    k = n // 2
    return _walk(n, None, k * (k - 1) // 6, limit, budget, None)
