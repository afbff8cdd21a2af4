"""Maximal independent sets, independence number, well-covered decision.

Mirrors the forest enumeration: an exhaustive include/exclude scan per
connected component with domination pruning, canonical ascending order.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import Graph, VertexSubset, component_masks, iter_bits
from .forests import DEFAULT_MAX_ORDER, EnumerationBoundError, _require_within_bound


def is_maximal_independent_set(g: Graph, s: VertexSubset) -> bool:
    """True iff ``s`` is independent and dominates every outside vertex."""
    if s.order != g.order:
        raise ValueError("subset belongs to a graph of different order")
    covered = s.mask
    for v in iter_bits(s.mask):
        if g.adj[v] & s.mask:
            return False
        covered |= g.adj[v]
    return covered == g.vertices_mask


def _maximal_independent_masks(n: int, adj: list[int]) -> list[int]:
    """All maximal independent set masks of the graph (n, adj)."""
    full = (1 << n) - 1
    out: list[int] = []

    def decide(i: int, smask: int, undecided: int, covered: int) -> None:
        if i == n:
            if covered == full:
                out.append(smask)
            return
        bit = 1 << i
        undecided &= ~bit
        if not adj[i] & smask:
            decide(i + 1, smask | bit, undecided, covered | adj[i] | bit)
        # exclude i: dead end unless some chosen or future vertex can dominate i
        if adj[i] & (smask | undecided):
            decide(i + 1, smask, undecided, covered)

    decide(0, 0, full, 0)
    return out


@lru_cache(maxsize=256)
def _component_independent_masks(g: Graph, bound: int) -> tuple[tuple[int, ...], ...]:
    """Per connected component, the sorted global maximal-independent masks."""
    if g.order > bound:
        raise EnumerationBoundError(g.order, bound)
    per_comp = []
    for comp in component_masks(g):
        verts = list(iter_bits(comp))
        index = {v: i for i, v in enumerate(verts)}
        local_adj = []
        for v in verts:
            row = 0
            for u in iter_bits(g.adj[v] & comp):
                row |= 1 << index[u]
            local_adj.append(row)
        masks = []
        for lm in _maximal_independent_masks(len(verts), local_adj):
            gm = 0
            for i in iter_bits(lm):
                gm |= 1 << verts[i]
            masks.append(gm)
        per_comp.append(tuple(sorted(masks)))
    return tuple(per_comp)


def enumerate_maximal_independent_sets(
    g: Graph, max_order: int | None = None
) -> list[VertexSubset]:
    """Exactly the maximal independent sets, each once, ascending by bitmask."""
    _require_within_bound(g, max_order)
    bound = DEFAULT_MAX_ORDER if max_order is None else max_order
    combined = [0]
    for masks in _component_independent_masks(g, bound):
        combined = [acc | m for acc in combined for m in masks]
    combined.sort()
    return [VertexSubset(g.order, m) for m in combined]


def independence_number(g: Graph, max_order: int | None = None) -> int:
    """Size of a maximum independent set."""
    _require_within_bound(g, max_order)
    bound = DEFAULT_MAX_ORDER if max_order is None else max_order
    total = 0
    for masks in _component_independent_masks(g, bound):
        total += max(m.bit_count() for m in masks)
    return total


def is_well_covered(
    g: Graph, max_order: int | None = None
) -> tuple[bool, tuple[VertexSubset, VertexSubset] | None]:
    """Decide whether all maximal independent sets share one size.

    When they do not, also return a witness pair (smaller, larger).
    """
    _require_within_bound(g, max_order)
    bound = DEFAULT_MAX_ORDER if max_order is None else max_order
    min_mask = max_mask = 0
    min_total = max_total = 0
    for masks in _component_independent_masks(g, bound):
        lo = min(masks, key=lambda m: (m.bit_count(), m))
        hi = max(masks, key=lambda m: (m.bit_count(), -m))
        min_mask |= lo
        max_mask |= hi
        min_total += lo.bit_count()
        max_total += hi.bit_count()
    if min_total == max_total:
        return True, None
    return False, (VertexSubset(g.order, min_mask), VertexSubset(g.order, max_mask))
