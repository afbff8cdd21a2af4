"""Lexicographic (composition) product of graphs and its vertex bookkeeping.

The product G∘H puts a copy of H at every vertex of G; (g1,h1) and (g2,h2)
are adjacent iff g1g2 is an edge of G, or g1=g2 and h1h2 is an edge of H.
Product vertices are numbered row-major: (g, h) -> g*|V(H)| + h.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

from .graphs import GRAPH6_MAX_ORDER, Graph, VertexSubset, iter_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProductIndexMap:
    """Bijection between product vertices and (first, second) factor pairs."""

    g_order: int
    h_order: int

    @property
    def order(self) -> int:
        return self.g_order * self.h_order

    def encode(self, gv: int, hv: int) -> int:
        if not 0 <= gv < self.g_order:
            raise ValueError(f"first-factor vertex {gv} out of range")
        if not 0 <= hv < self.h_order:
            raise ValueError(f"second-factor vertex {hv} out of range")
        return gv * self.h_order + hv

    def decode(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.order:
            raise ValueError(f"product vertex {v} out of range")
        return divmod(v, self.h_order)

    def subset_from_pairs(self, pairs: Iterable[tuple[int, int]]) -> VertexSubset:
        """Encode a set of (g, h) pairs as a product vertex subset.

        Duplicate pairs collapse; out-of-range pairs raise ValueError.
        """
        mask = 0
        for gv, hv in pairs:
            mask |= 1 << self.encode(gv, hv)
        return VertexSubset(self.order, mask)


def relabel_product_subset(
    index_map: ProductIndexMap, pairs: Iterable[tuple[int, int]]
) -> VertexSubset:
    """Convenience alias for ProductIndexMap.subset_from_pairs."""
    return index_map.subset_from_pairs(pairs)


def lexicographic(g: Graph, h: Graph) -> tuple[Graph, ProductIndexMap]:
    """Build G∘H together with the row-major index map.

    |V| = |V(G)|*|V(H)| and |E| = |E(G)|*|V(H)|^2 + |V(G)|*|E(H)|.  Orders
    above the graph6 export limit still construct fine in memory; a warning
    is logged because such products cannot be serialized.
    """
    m, n = g.order, h.order
    order = m * n
    if order > GRAPH6_MAX_ORDER:
        logger.warning(
            "product order %d exceeds the graph6 export limit %d", order, GRAPH6_MAX_ORDER
        )
    h_block = (1 << n) - 1
    # For each first-factor vertex, the mask of all product vertices whose
    # first factor is one of its neighbours.
    cross = []
    for a in range(m):
        mask = 0
        for b in iter_bits(g.adj[a]):
            mask |= h_block << (b * n)
        cross.append(mask)
    rows = []
    for a in range(m):
        base = a * n
        for i in range(n):
            rows.append(cross[a] | (h.adj[i] << base))
    name = None
    if g.name and h.name:
        name = f"lex({g.name},{h.name})"
    return Graph(order, tuple(rows), name=name), ProductIndexMap(m, n)
