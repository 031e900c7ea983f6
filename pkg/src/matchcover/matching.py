"""Perfect matchings: exhaustive enumeration and max-weight selection.

A Matching stores sorted edge ids only; the graph is passed where
needed.  Enumeration is the oracle route (complete, deterministic,
capped).  `max_weight_perfect_matching` is the production route: it
calls the blossom algorithm on an integer-scaled weight vector, then
pins down the lexicographically least maximizer by fixing edge ids in
increasing order, so its output never depends on library internals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import networkx as nx

from .errors import CapExceededError, NoPerfectMatchingError
from .multigraph import Multigraph


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges, stored as a sorted edge-id tuple."""

    edge_ids: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "edge_ids", tuple(sorted(self.edge_ids)))

    def __len__(self) -> int:
        return len(self.edge_ids)

    def covered_vertices(self, g: Multigraph) -> frozenset[int]:
        out = set()
        for e in self.edge_ids:
            out.update(g.edges[e])
        return frozenset(out)

    def crossings(self, cut: frozenset[int]) -> int:
        """Number of this matching's edges inside an edge-id set."""
        return sum(1 for e in self.edge_ids if e in cut)


def is_perfect_matching(g: Multigraph, m: Matching) -> bool:
    """Every vertex covered exactly once."""
    seen = set()
    for e in m.edge_ids:
        if not (0 <= e < g.m):
            return False
        u, v = g.edges[e]
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return len(seen) == g.n


def matching_weight(m: Matching, weights) -> Fraction:
    return sum((Fraction(weights[e]) for e in m.edge_ids), Fraction(0))


def enumerate_perfect_matchings(
    g: Multigraph, cap: int = 100_000
) -> tuple[Matching, ...]:
    """All perfect matchings, sorted by edge-id tuple.

    Branches on the lowest uncovered vertex and prunes any state whose
    residual graph has an odd component, so each matching is produced
    exactly once.  Parallel edges give distinct matchings.  Raises
    CapExceededError as soon as the count would pass `cap`, and
    NoPerfectMatchingError for odd n (for even n an empty result is a
    valid answer, not an error).
    """
    if g.n % 2 != 0:
        raise NoPerfectMatchingError("perfect matchings need an even vertex count")
    if g.n == 0:
        return (Matching(()),)
    covered = [False] * g.n
    chosen: list[int] = []
    found: list[tuple[int, ...]] = []

    def residual_feasible() -> bool:
        # every component of the uncovered subgraph must have even order
        seen = [False] * g.n
        for start in range(g.n):
            if covered[start] or seen[start]:
                continue
            size = 0
            stack = [start]
            seen[start] = True
            while stack:
                x = stack.pop()
                size += 1
                for e in g.incident(x):
                    y = g.other_end(e, x)
                    if not covered[y] and not seen[y]:
                        seen[y] = True
                        stack.append(y)
            if size % 2 != 0:
                return False
        return True

    def rec():
        v = next((x for x in range(g.n) if not covered[x]), None)
        if v is None:
            if len(found) >= cap:
                raise CapExceededError(
                    f"perfect matching enumeration passed the cap of {cap}"
                )
            found.append(tuple(chosen))
            return
        if not residual_feasible():
            return
        covered[v] = True
        for e in g.incident(v):
            u = g.other_end(e, v)
            if covered[u]:
                continue
            covered[u] = True
            chosen.append(e)
            rec()
            chosen.pop()
            covered[u] = False
        covered[v] = False

    rec()
    return tuple(Matching(ids) for ids in sorted(tuple(sorted(f)) for f in found))


def _scale_signed(weights, m: int) -> tuple[list[int], int]:
    """Integer-scale a rational weight vector (negatives allowed here)."""
    fr = [Fraction(w) for w in weights]
    if len(fr) != m:
        raise ValueError(f"expected {m} weights, got {len(fr)}")
    den = lcm(*(f.denominator for f in fr)) if fr else 1
    return [int(f * den) for f in fr], den


def _best_value(g: Multigraph, iw: list[int], excluded: frozenset[int]) -> int | None:
    """Max total integer weight over perfect matchings of g minus `excluded`.

    None when the remaining vertices admit no perfect matching.  Among
    parallel edges only the heaviest matters for the value.
    """
    active = [v for v in range(g.n) if v not in excluded]
    if not active:
        return 0
    best_pair: dict[tuple[int, int], int] = {}
    for eid, (u, v) in enumerate(g.edges):
        if u in excluded or v in excluded:
            continue
        cur = best_pair.get((u, v))
        if cur is None or iw[eid] > cur:
            best_pair[(u, v)] = iw[eid]
    sim = nx.Graph()
    sim.add_nodes_from(active)
    shift = -min((w for w in best_pair.values()), default=0)
    if shift < 0:
        shift = 0
    for (u, v), w in best_pair.items():
        sim.add_edge(u, v, weight=w + shift)
    mate = nx.max_weight_matching(sim, maxcardinality=True)
    if 2 * len(mate) < len(active):
        return None
    return sum(best_pair[(min(u, v), max(u, v))] for u, v in mate)


def max_weight_value(g: Multigraph, weights) -> Fraction | None:
    """Maximum total weight of a perfect matching, or None if none exists."""
    if g.n % 2 != 0:
        return None
    iw, den = _scale_signed(weights, g.m)
    best = _best_value(g, iw, frozenset())
    return None if best is None else Fraction(best, den)


def max_weight_perfect_matching(g: Multigraph, weights) -> Matching:
    """The lexicographically least maximum-weight perfect matching.

    The blossom call fixes the optimal value; edge ids are then fixed
    in increasing order, keeping an id exactly when some maximizer
    contains everything fixed so far plus that id.  At most m+1 blossom
    calls.  Raises NoPerfectMatchingError when no perfect matching
    exists (odd n included).
    """
    if g.n % 2 != 0:
        raise NoPerfectMatchingError("perfect matchings need an even vertex count")
    if g.n == 0:
        return Matching(())
    iw, _ = _scale_signed(weights, g.m)
    target = _best_value(g, iw, frozenset())
    if target is None:
        raise NoPerfectMatchingError("graph has no perfect matching")
    chosen: list[int] = []
    covered: set[int] = set()
    partial = 0
    next_id = 0
    while len(covered) < g.n:
        fixed = None
        for e in range(next_id, g.m):
            u, v = g.edges[e]
            if u in covered or v in covered:
                continue
            rest = _best_value(g, iw, frozenset(covered | {u, v}))
            if rest is not None and partial + iw[e] + rest == target:
                fixed = e
                break
        if fixed is None:
            raise AssertionError("lexicographic fixing lost the optimum")
        u, v = g.edges[fixed]
        chosen.append(fixed)
        covered.update((u, v))
        partial += iw[fixed]
        next_id = fixed + 1
    return Matching(tuple(chosen))
