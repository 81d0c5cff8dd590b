"""Exact weighted perfect-matching counts by frontier dynamic programming.

This is the package's independent oracle: it never sees a product formula or
a determinant, only a bipartite graph with positive rational edge weights.
`count_matchings` sweeps the vertices in a fixed scanline order and keeps, for
every prefix, the exact weighted count of partial matchings per "frontier
profile" (the set of still-unmatched swept vertices that can yet be matched).
The profile is a bitmask, so the cost is exponential only in the frontier
width, which for hexagon regions is the height of one lattice column.

A second, independently coded oracle (`count_matchings_backtrack`) does plain
exhaustive backtracking; it is capped at 40 vertices and exists to guard the
DP in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

MatchCount = Fraction

BACKTRACK_CAP = 40


@dataclass(frozen=True)
class DualGraph:
    """Bipartite weighted graph; for tilings, the inner dual of a region.

    verts holds arbitrary hashable keys in scanline order, classes the
    bipartition class of each vertex, edges triples (i, j, weight) of vertex
    indices with exact positive rational weights.
    """

    verts: tuple
    classes: tuple
    edges: tuple

    def __post_init__(self):
        for i, j, w in self.edges:
            if self.classes[i] == self.classes[j]:
                raise ValueError(f"edge ({i},{j}) is not bipartite")
            if w <= 0:
                raise ValueError(f"edge ({i},{j}) has nonpositive weight {w}")

    def adjacency(self) -> list:
        adj = [[] for _ in self.verts]
        for i, j, w in self.edges:
            adj[i].append((j, w))
            adj[j].append((i, w))
        return adj


def count_matchings(g: DualGraph) -> MatchCount:
    """Sum over perfect matchings of the product of edge weights, exactly.

    Returns 0 when no perfect matching exists (in particular for an odd
    number of vertices); the empty graph counts 1.
    """
    n = len(g.verts)
    if n == 0:
        return Fraction(1)
    if n % 2:
        return Fraction(0)
    adj = g.adjacency()

    # A vertex can still be matched after position p only if it has a
    # neighbor later in the order; past that point an unmatched vertex kills
    # the state.
    expire_mask = [0] * n
    for v in range(n):
        last = max((u for u, _ in adj[v]), default=-1)
        expire_mask[max(v, last)] |= 1 << v

    states = {0: Fraction(1)}
    for v in range(n):
        nxt: dict = {}

        def add(mask, val):
            cur = nxt.get(mask)
            nxt[mask] = val if cur is None else cur + val

        bit = 1 << v
        has_future = expire_mask[v] & bit == 0
        for mask, val in states.items():
            if has_future:
                add(mask | bit, val)
            for u, w in adj[v]:
                if u < v and mask & (1 << u):
                    add(mask & ~(1 << u), val * w)
        kill = expire_mask[v]
        states = {m: val for m, val in nxt.items() if not (m & kill)}
        if not states:
            return Fraction(0)
    return states.get(0, Fraction(0))


def count_matchings_backtrack(g: DualGraph) -> MatchCount:
    """Naive exhaustive matching count; independent check for the DP.

    Refuses graphs above BACKTRACK_CAP vertices, where enumeration stops
    being a sane oracle.
    """
    n = len(g.verts)
    if n > BACKTRACK_CAP:
        raise ValueError(f"backtracking oracle capped at {BACKTRACK_CAP} vertices, got {n}")
    if n % 2:
        return Fraction(0)
    adj = g.adjacency()
    matched = [False] * n

    def recurse(lo: int) -> Fraction:
        while lo < n and matched[lo]:
            lo += 1
        if lo == n:
            return Fraction(1)
        matched[lo] = True
        total = Fraction(0)
        for u, w in adj[lo]:
            if not matched[u]:
                matched[u] = True
                total += w * recurse(lo + 1)
                matched[u] = False
        matched[lo] = False
        return total

    return recurse(0)


# ---------------------------------------------------------------------------
# region-level wrappers
# ---------------------------------------------------------------------------

def count_tilings(region) -> MatchCount:
    """Weighted count of rhombus tilings of a region (1 for the empty region).

    Integral whenever the region carries no half-weight marks; in general the
    denominator divides 2^(number of marked positions).
    """
    from .geometry import dual_graph

    return count_matchings(dual_graph(region))


def find_tiling(region) -> Optional[object]:
    """One tiling of the region, deterministically, or None if untileable.

    Greedy and reproducible: repeatedly match the first uncovered triangle in
    scanline order with its smallest-keyed uncovered neighbor that leaves a
    tileable remainder (checked with the DP count).
    """
    from .geometry import Tiling, dual_graph

    g = dual_graph(region)
    n = len(g.verts)
    adj = g.adjacency()
    alive = [True] * n

    def completable() -> bool:
        live = [i for i in range(n) if alive[i]]
        relabel = {old: new for new, old in enumerate(live)}
        sub = DualGraph(
            tuple(g.verts[i] for i in live),
            tuple(g.classes[i] for i in live),
            tuple(
                (relabel[i], relabel[j], w)
                for i, j, w in g.edges
                if alive[i] and alive[j]
            ),
        )
        return count_matchings(sub) > 0

    if not completable():
        return None
    pairs = []
    for v in range(n):
        if not alive[v]:
            continue
        alive[v] = False
        for u in sorted(u for u, _ in adj[v] if alive[u]):
            alive[u] = False
            if completable():
                pairs.append(frozenset((g.verts[v], g.verts[u])))
                break
            alive[u] = True
        else:
            raise AssertionError("completable region ran out of extensions")
    return Tiling(frozenset(pairs))
