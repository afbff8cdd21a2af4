"""Shared fixtures: small-graph sources and independent brute-force oracles.

The oracles here deliberately avoid the library's own machinery: forest
checks go through networkx cycle bases, independence checks through pairwise
edge tests, so agreement is meaningful.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from networkx.generators.atlas import graph_atlas_g

from wfcover import Graph

ATLAS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.order))
    G.add_edges_from(g.edges())
    return G


def atlas_graphs(max_order: int, connected: bool | None = None) -> list[Graph]:
    """One labeled representative per isomorphism class, orders 1..max_order."""
    out = []
    counts: dict[int, int] = {}
    for G in graph_atlas_g():
        n = G.number_of_nodes()
        if not 1 <= n <= max_order:
            continue
        counts[n] = counts.get(n, 0) + 1
        if connected is not None and nx.is_connected(G) != connected:
            continue
        out.append(Graph.from_edges(n, list(G.edges())))
    for n in range(1, max_order + 1):
        assert counts[n] == ATLAS_COUNTS[n], f"atlas miscount at order {n}"
    return out


def graph_from_mask(n: int, mask: int) -> Graph:
    """Labeled graph from an upper-triangle edge mask (column-major bit order)."""
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> idx) & 1:
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)


def all_labeled_graphs(n: int):
    for mask in range(1 << (n * (n - 1) // 2)):
        yield graph_from_mask(n, mask)


def nx_is_forest(G: nx.Graph, vertices) -> bool:
    """Independent acyclicity test: empty cycle basis of the induced subgraph."""
    return not nx.cycle_basis(G.subgraph(vertices))


def naive_maximal_forests(g: Graph) -> set[frozenset[int]]:
    """Subset-filter oracle: all subsets, keep induced forests with no forest extension."""
    G = to_nx(g)
    out = set()
    universe = range(g.order)
    for r in range(g.order + 1):
        for combo in combinations(universe, r):
            s = set(combo)
            if not nx_is_forest(G, s):
                continue
            if any(nx_is_forest(G, s | {v}) for v in universe if v not in s):
                continue
            out.add(frozenset(s))
    return out


def naive_maximal_independent(g: Graph) -> set[frozenset[int]]:
    """Subset-filter oracle for maximal independent sets."""
    G = to_nx(g)
    out = set()
    universe = range(g.order)
    for r in range(g.order + 1):
        for combo in combinations(universe, r):
            s = set(combo)
            if any(G.has_edge(u, v) for u, v in combinations(s, 2)):
                continue
            if any(all(not G.has_edge(v, u) for u in s) for v in universe if v not in s):
                continue
            out.add(frozenset(s))
    return out


def dfs_has_cycle(g: Graph) -> bool:
    """Independent DFS cycle finder (back-edge detection with parent tracking)."""
    color = [0] * g.order
    for start in range(g.order):
        if color[start]:
            continue
        stack = [(start, -1, iter(range(g.order)))]
        color[start] = 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if not g.has_edge(v, u):
                    continue
                if color[u] and u != parent:
                    return True
                if not color[u]:
                    color[u] = 1
                    stack.append((u, v, iter(range(g.order))))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
    return False


@pytest.fixture(scope="session")
def atlas_le4() -> list[Graph]:
    return atlas_graphs(4)


@pytest.fixture(scope="session")
def atlas_le5() -> list[Graph]:
    return atlas_graphs(5)


@pytest.fixture(scope="session")
def atlas_le6() -> list[Graph]:
    return atlas_graphs(6)
