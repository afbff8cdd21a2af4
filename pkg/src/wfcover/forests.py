"""Maximal induced forest enumeration, forest number, and forest statistics.

"Forest" always means *induced* forest: a vertex set whose induced subgraph
is acyclic.  A forest is maximal when adding any outside vertex closes a
cycle.  Enumeration is an exhaustive scan of the subset lattice, organised
as an include/exclude walk per connected component so that cycle pruning
actually bites; results are returned in a canonical ascending-bitmask order
regardless of internal traversal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph, VertexSubset, component_masks, iter_bits

DEFAULT_MAX_ORDER = 24

Z_CHOICES = ("min", "max")


class EnumerationBoundError(ValueError):
    """Graph too large for exhaustive enumeration."""

    def __init__(self, order: int, bound: int) -> None:
        super().__init__(f"graph order {order} exceeds the enumeration bound {bound}")
        self.order = order
        self.bound = bound


@dataclass(frozen=True)
class ForestStats:
    """The four counters of a forest F.

    isolated        I(F):  vertices of degree 0 in F
    k2_components   K2(F): connected components of F that are a single edge
    outer_leaves    L(F):  degree-1 vertices in components larger than an edge
    internal        L'(F): vertices of degree at least 2 in F

    Every forest vertex falls in exactly one bucket, so
    isolated + 2*k2_components + outer_leaves + internal = |F|.
    """

    isolated: int
    k2_components: int
    outer_leaves: int
    internal: int

    @property
    def total(self) -> int:
        return self.isolated + 2 * self.k2_components + self.outer_leaves + self.internal


@dataclass(frozen=True)
class ForestPartition:
    """The proof partition of a maximal forest F.

    x  = isolated vertices and leaves of non-edge components (x1 | x2)
    x1 = isolated vertices only
    x2 = leaves of components larger than a single edge
    y  = vertices of degree >= 2
    z  = one chosen endpoint per single-edge component
    t  = the partner endpoints of z
    """

    x: VertexSubset
    x1: VertexSubset
    x2: VertexSubset
    y: VertexSubset
    z: VertexSubset
    t: VertexSubset


def _require_within_bound(g: Graph, max_order: int | None) -> None:
    bound = DEFAULT_MAX_ORDER if max_order is None else max_order
    if g.order > bound:
        raise EnumerationBoundError(g.order, bound)


def _components_within(adj: tuple[int, ...], mask: int) -> list[int]:
    """Connected components of the induced subgraph on ``mask``, as masks."""
    comps = []
    rem = mask
    while rem:
        comp = 0
        frontier = rem & -rem
        while frontier:
            comp |= frontier
            step = 0
            for u in iter_bits(frontier):
                step |= adj[u]
            frontier = step & mask & ~comp
        comps.append(comp)
        rem &= ~comp
    return comps


def _edges_within(adj: tuple[int, ...], mask: int) -> int:
    total = 0
    for v in iter_bits(mask):
        total += (adj[v] & mask).bit_count()
    return total // 2


def _is_forest_mask(adj: tuple[int, ...], mask: int) -> bool:
    if mask == 0:
        return True
    return _edges_within(adj, mask) == mask.bit_count() - len(_components_within(adj, mask))


def _is_maximal_forest_mask(order: int, adj: tuple[int, ...], mask: int) -> bool:
    comps = _components_within(adj, mask)
    if _edges_within(adj, mask) != mask.bit_count() - len(comps):
        return False
    label = [-1] * order
    for idx, comp in enumerate(comps):
        for v in iter_bits(comp):
            label[v] = idx
    outside = ((1 << order) - 1) & ~mask
    for v in iter_bits(outside):
        nb = adj[v] & mask
        if nb.bit_count() < 2:
            return False  # v extends the forest
        seen = set()
        closes_cycle = False
        for u in iter_bits(nb):
            if label[u] in seen:
                closes_cycle = True
                break
            seen.add(label[u])
        if not closes_cycle:
            return False
    return True


def is_induced_forest(g: Graph, s: VertexSubset) -> bool:
    """True iff the subgraph induced by ``s`` is acyclic (empty set included)."""
    if s.order != g.order:
        raise ValueError("subset belongs to a graph of different order")
    return _is_forest_mask(g.adj, s.mask)


def is_maximal_induced_forest(g: Graph, s: VertexSubset) -> bool:
    """True iff ``s`` induces a forest and every added vertex closes a cycle."""
    if s.order != g.order:
        raise ValueError("subset belongs to a graph of different order")
    return _is_maximal_forest_mask(g.order, g.adj, s.mask)


def _maximal_forest_masks(n: int, adj: list[int]) -> list[int]:
    """All maximal induced forest masks of the graph (n, adj).

    Include/exclude walk over vertices 0..n-1 with a rollback union-find
    tracking the components of the chosen set.  Branches are cut when an
    excluded vertex can never again lose its ability to extend the forest;
    completed subsets are kept only if no excluded vertex extends them.
    """
    full = (1 << n) - 1
    parent = list(range(n))
    size = [1] * n
    trail: list[int] = []
    out: list[int] = []

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def leaf_is_maximal(smask: int) -> bool:
        for v in iter_bits(full & ~smask):
            nb = adj[v] & smask
            if nb.bit_count() < 2:
                return False
            seen = set()
            extends = True
            for u in iter_bits(nb):
                r = find(u)
                if r in seen:
                    extends = False
                    break
                seen.add(r)
            if extends:
                return False
        return True

    def decide(i: int, smask: int, undecided: int) -> None:
        if i == n:
            if leaf_is_maximal(smask):
                out.append(smask)
            return
        bit = 1 << i
        undecided &= ~bit
        # include i unless it closes a cycle (two neighbours in one component)
        roots = []
        acyclic = True
        for u in iter_bits(adj[i] & smask):
            r = find(u)
            if r in roots:
                acyclic = False
                break
            roots.append(r)
        if acyclic:
            mark = len(trail)
            cur = i
            for r in roots:
                ra, rb = (cur, r) if size[cur] >= size[r] else (r, cur)
                parent[rb] = ra
                size[ra] += size[rb]
                trail.append(rb)
                cur = ra
            decide(i + 1, smask | bit, undecided)
            while len(trail) > mark:
                rb = trail.pop()
                ra = parent[rb]
                size[ra] -= size[rb]
                parent[rb] = rb
        # exclude i: dead end if i keeps at most one potential neighbour,
        # since it would then extend every completion of smask
        if (adj[i] & (smask | undecided)).bit_count() >= 2:
            decide(i + 1, smask, undecided)

    decide(0, 0, full)
    return out


@lru_cache(maxsize=256)
def _component_forest_masks(g: Graph, bound: int) -> tuple[tuple[int, ...], ...]:
    """Per connected component, the sorted global maximal-forest masks."""
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
        for lm in _maximal_forest_masks(len(verts), local_adj):
            gm = 0
            for i in iter_bits(lm):
                gm |= 1 << verts[i]
            masks.append(gm)
        per_comp.append(tuple(sorted(masks)))
    return tuple(per_comp)


def enumerate_maximal_induced_forests(
    g: Graph, max_order: int | None = None
) -> list[VertexSubset]:
    """Exactly the maximal induced forests, each once, ascending by bitmask.

    Maximal forests of a disconnected graph are the unions of one maximal
    forest per component, so the component results combine by product.
    """
    _require_within_bound(g, max_order)
    bound = DEFAULT_MAX_ORDER if max_order is None else max_order
    per_comp = _component_forest_masks(g, bound)
    combined = [0]
    for masks in per_comp:
        combined = [acc | m for acc in combined for m in masks]
    combined.sort()
    return [VertexSubset(g.order, m) for m in combined]


def maximal_forest_order_histogram(g: Graph, max_order: int | None = None) -> dict[int, int]:
    """Counts of maximal induced forests by order (component-wise convolution)."""
    _require_within_bound(g, max_order)
    bound = DEFAULT_MAX_ORDER if max_order is None else max_order
    hist = {0: 1}
    for masks in _component_forest_masks(g, bound):
        comp_hist: dict[int, int] = {}
        for m in masks:
            k = m.bit_count()
            comp_hist[k] = comp_hist.get(k, 0) + 1
        merged: dict[int, int] = {}
        for a, ca in hist.items():
            for b, cb in comp_hist.items():
                merged[a + b] = merged.get(a + b, 0) + ca * cb
        hist = merged
    return dict(sorted(hist.items()))


def forest_number(g: Graph, max_order: int | None = None) -> int:
    """Order of a maximum induced forest: |V| minus the minimum feedback vertex set."""
    _require_within_bound(g, max_order)
    bound = DEFAULT_MAX_ORDER if max_order is None else max_order
    total = 0
    for masks in _component_forest_masks(g, bound):
        total += max(m.bit_count() for m in masks)
    return total


def is_well_f_covered(
    g: Graph, max_order: int | None = None
) -> tuple[bool, tuple[VertexSubset, VertexSubset] | None]:
    """Decide whether all maximal induced forests share one order.

    When they do not, also return a witness pair (smaller, larger).
    """
    _require_within_bound(g, max_order)
    bound = DEFAULT_MAX_ORDER if max_order is None else max_order
    min_mask = 0
    max_mask = 0
    min_total = 0
    max_total = 0
    for masks in _component_forest_masks(g, bound):
        lo = min(masks, key=lambda m: (m.bit_count(), m))
        hi = max(masks, key=lambda m: (m.bit_count(), -m))
        min_mask |= lo
        max_mask |= hi
        min_total += lo.bit_count()
        max_total += hi.bit_count()
    if min_total == max_total:
        return True, None
    return False, (VertexSubset(g.order, min_mask), VertexSubset(g.order, max_mask))


def forest_stats(g: Graph, f: VertexSubset) -> ForestStats:
    """Count I(F), K2(F), L(F), L'(F) for an induced forest F."""
    if f.order != g.order:
        raise ValueError("subset belongs to a graph of different order")
    if not _is_forest_mask(g.adj, f.mask):
        raise ValueError("subset does not induce a forest")
    isolated = k2 = leaves = internal = 0
    for comp in _components_within(g.adj, f.mask):
        sz = comp.bit_count()
        if sz == 1:
            isolated += 1
        elif sz == 2:
            k2 += 1
        else:
            for v in iter_bits(comp):
                if (g.adj[v] & f.mask).bit_count() == 1:
                    leaves += 1
                else:
                    internal += 1
    return ForestStats(isolated, k2, leaves, internal)


def forest_partition(g: Graph, f: VertexSubset, z_choice: str = "min") -> ForestPartition:
    """Split a maximal forest into the X1/X2/Y/Z/T classes.

    ``z_choice`` picks the representative endpoint of each single-edge
    component ("min" or "max" vertex index); any choice is mathematically
    valid, fixing one makes runs reproducible.
    """
    if z_choice not in Z_CHOICES:
        raise ValueError(f"z_choice must be one of {Z_CHOICES}, got {z_choice!r}")
    if f.order != g.order:
        raise ValueError("subset belongs to a graph of different order")
    if not _is_maximal_forest_mask(g.order, g.adj, f.mask):
        raise ValueError("witness constructions require a maximal induced forest")
    x1 = x2 = y = z = t = 0
    for comp in _components_within(g.adj, f.mask):
        sz = comp.bit_count()
        if sz == 1:
            x1 |= comp
        elif sz == 2:
            lo = comp & -comp
            hi = comp ^ lo
            if z_choice == "min":
                z |= lo
                t |= hi
            else:
                z |= hi
                t |= lo
        else:
            for v in iter_bits(comp):
                if (g.adj[v] & f.mask).bit_count() == 1:
                    x2 |= 1 << v
                else:
                    y |= 1 << v
    n = g.order
    return ForestPartition(
        x=VertexSubset(n, x1 | x2),
        x1=VertexSubset(n, x1),
        x2=VertexSubset(n, x2),
        y=VertexSubset(n, y),
        z=VertexSubset(n, z),
        t=VertexSubset(n, t),
    )
