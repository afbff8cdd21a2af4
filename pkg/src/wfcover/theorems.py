"""Necessary-condition checks for well-f-covered lexicographic products.

Three condition sets are implemented, named by their report ids:

thm31  first factor edgeless on m vertices: the product is well-f-covered
       iff the second factor is, and f(G∘H) = m*f(H).  A characterization,
       so any failure against brute force is a theorem_violation.
thm32  second factor edgeless on n vertices: if G∘H is well-f-covered then
       every maximal forest F of G satisfies
           n*(I(F) + K2(F) + L(F)) + K2(F) + L'(F) = f(G∘H).
thm35  both factors have an edge: if G∘H is well-f-covered then
       (1) G is well-covered, and, when no maximal forest of G has an
           isolated vertex and H has a size-1 maximal independent set,
           G is also well-f-covered with f(G) = f(G∘H);
       (2) H is well-f-covered, and, when some maximal forest of G has a
           leaf, H is also well-covered;
       (3) f(G∘H) = alpha(G) * f(H);
       (4) every maximal forest F of G and maximal independent set M_H of H
           satisfy f(H)*I(F) + |M_H|*(K2(F)+L(F)) + K2(F) + L'(F) = f(G∘H).

The necessary conditions come with explicit witness forests inside the
product (V_M and the two V* constructions); each constructed witness is
re-verified by brute force and a failure is never silently ignored.

Ground truth is always the exhaustive enumeration: a report's verdict is
``theorem_violation`` iff brute force finds the product well-f-covered while
a necessary condition fails (or a constructed witness fails verification),
``non_sufficiency_witness`` iff every condition holds yet the product is not
well-f-covered, and ``consistent`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import FamilySpec, Graph, VertexSubset, generate, iter_bits
from .products import lexicographic
from .forests import (
    ForestPartition,
    ForestStats,
    enumerate_maximal_induced_forests,
    forest_number,
    forest_partition,
    forest_stats,
    is_maximal_induced_forest,
    is_well_f_covered,
    maximal_forest_order_histogram,
)
from .independence import (
    enumerate_maximal_independent_sets,
    independence_number,
    is_maximal_independent_set,
    is_well_covered,
)

THEOREM_IDS = ("thm31", "thm32", "thm35")

VERDICT_CONSISTENT = "consistent"
VERDICT_NON_SUFFICIENCY = "non_sufficiency_witness"
VERDICT_VIOLATION = "theorem_violation"


class HypothesisError(ValueError):
    """The inputs do not satisfy the hypotheses of the requested check."""


class WitnessVerificationError(Exception):
    """A constructed witness failed its brute-force verification."""

    def __init__(self, message: str, subset: VertexSubset | None = None) -> None:
        super().__init__(message)
        self.subset = subset


@dataclass(frozen=True)
class WitnessSpec:
    """Ingredients for a witness-forest construction.

    ``anchor`` is the fixed second-factor vertex used for the Y and T blocks;
    for thm35 constructions it must belong to ``h_independent``.
    """

    forest: VertexSubset
    partition: ForestPartition
    anchor: int
    h_forest: VertexSubset | None = None
    h_independent: VertexSubset | None = None


@dataclass(frozen=True)
class ConditionRecord:
    """One evaluated per-forest equality (lhs vs the product forest number)."""

    forest: VertexSubset
    stats: ForestStats
    lhs: int
    rhs: int
    holds: bool
    m_h: VertexSubset | None = None


@dataclass(frozen=True)
class WitnessRecord:
    """One constructed witness set and the outcome of its verification."""

    kind: str
    subset: VertexSubset | None
    size: int | None
    verified: bool
    detail: dict


@dataclass(frozen=True)
class ClaimRecord:
    """One audited example sentence with its computed adjudication."""

    example: str
    claim: str
    text: str
    status: str
    expected: str
    facts: dict


@dataclass(frozen=True)
class TheoremReport:
    """Structured verdict of one check run; pure values, no rendering."""

    theorem_id: str
    hypotheses: dict
    conditions: dict
    condition_values: tuple[ConditionRecord, ...]
    ground_truth: dict
    witnesses: tuple[WitnessRecord, ...]
    verdict: str
    claims: tuple[ClaimRecord, ...] = ()


def thm32_lhs(stats: ForestStats, n: int) -> int:
    """n*(I + K2 + L) + K2 + L' — the per-forest value of the thm32 condition."""
    if n < 1:
        raise ValueError("second-factor order must be positive")
    return (
        n * (stats.isolated + stats.k2_components + stats.outer_leaves)
        + stats.k2_components
        + stats.internal
    )


def thm35_lhs(stats: ForestStats, f_h: int, m_h_size: int) -> int:
    """f(H)*I + |M_H|*(K2 + L) + K2 + L' — condition (4)'s per-forest value."""
    return (
        f_h * stats.isolated
        + m_h_size * (stats.k2_components + stats.outer_leaves)
        + stats.k2_components
        + stats.internal
    )


def make_witness_spec(
    g: Graph,
    forest: VertexSubset,
    *,
    z_choice: str = "min",
    h_forest: VertexSubset | None = None,
    h_independent: VertexSubset | None = None,
    anchor: int | None = None,
) -> WitnessSpec:
    """Assemble a WitnessSpec, defaulting the anchor to min(M_H) or vertex 0."""
    partition = forest_partition(g, forest, z_choice=z_choice)
    if anchor is None:
        anchor = h_independent.vertices()[0] if h_independent is not None else 0
    return WitnessSpec(
        forest=forest,
        partition=partition,
        anchor=anchor,
        h_forest=h_forest,
        h_independent=h_independent,
    )


def _validate_partition(g: Graph, spec: WitnessSpec) -> None:
    p = spec.partition
    parts = (p.x1.mask, p.x2.mask, p.y.mask, p.z.mask, p.t.mask)
    union = 0
    total = 0
    for m in parts:
        union |= m
        total += m.bit_count()
    if union != spec.forest.mask or total != spec.forest.mask.bit_count():
        raise ValueError("partition does not partition the forest's vertex set")
    if p.x.mask != (p.x1.mask | p.x2.mask):
        raise ValueError("partition field x must be the union of x1 and x2")


def _verify_witness(product: Graph, mask: int, what: str) -> VertexSubset:
    subset = VertexSubset(product.order, mask)
    if not is_maximal_induced_forest(product, subset):
        raise WitnessVerificationError(
            f"constructed {what} is not a maximal induced forest of the product",
            subset=subset,
        )
    return subset


def construct_vstar_empty_second(g: Graph, spec: WitnessSpec, n: int) -> VertexSubset:
    """Witness forest in G∘(n-vertex edgeless H) for a maximal forest of G.

    V* = ((X ∪ Z) × V(H)) ∪ ((Y ∪ T) × {anchor}); its order is
    n*(|X|+|Z|) + |Y| + |T|, i.e. the thm32 left-hand side.  The returned
    set is brute-force verified to be a maximal induced forest.
    """
    if n < 1:
        raise ValueError("second-factor order must be positive")
    if not 0 <= spec.anchor < n:
        raise ValueError(f"anchor {spec.anchor} out of range for second factor of order {n}")
    if not is_maximal_induced_forest(g, spec.forest):
        raise ValueError("witness construction requires a maximal induced forest")
    _validate_partition(g, spec)
    p = spec.partition
    product, _ = lexicographic(g, generate(FamilySpec("empty", n)))
    block = (1 << n) - 1
    mask = 0
    for v in iter_bits(p.x.mask | p.z.mask):
        mask |= block << (v * n)
    for v in iter_bits(p.y.mask | p.t.mask):
        mask |= 1 << (v * n + spec.anchor)
    expected = n * (len(p.x) + len(p.z)) + len(p.y) + len(p.t)
    if mask.bit_count() != expected:
        raise WitnessVerificationError(
            f"witness size {mask.bit_count()} differs from formula value {expected}",
            subset=VertexSubset(product.order, mask),
        )
    return _verify_witness(product, mask, "V*")


def construct_vm(g: Graph, m: VertexSubset, h: Graph, f_h: VertexSubset) -> VertexSubset:
    """Witness forest M × V(F_H) in G∘H for a maximal independent set M of G.

    Requires H to contain an edge (so F_H does too, which the maximality
    argument needs).  |V_M| = |M| * |F_H|; brute-force verified.
    """
    if h.edge_count == 0:
        raise ValueError("second factor must contain an edge")
    if not is_maximal_independent_set(g, m):
        raise ValueError("witness construction requires a maximal independent set")
    if not is_maximal_induced_forest(h, f_h):
        raise ValueError("witness construction requires a maximal induced forest of H")
    product, _ = lexicographic(g, h)
    mask = 0
    for a in iter_bits(m.mask):
        mask |= f_h.mask << (a * h.order)
    if mask.bit_count() != len(m) * len(f_h):
        raise WitnessVerificationError(
            "witness size differs from |M|*|F_H|", subset=VertexSubset(product.order, mask)
        )
    return _verify_witness(product, mask, "V_M")


def construct_vstar_nonempty_second(g: Graph, spec: WitnessSpec, h: Graph) -> VertexSubset:
    """Witness forest in G∘H (both factors with an edge) for a maximal forest of G.

    V* = (X1 × V(F_H)) ∪ ((X2 ∪ Z) × M_H) ∪ ((Y ∪ T) × {anchor}) with
    anchor ∈ M_H; its order is |F_H|*I + |M_H|*(K2+L) + K2 + L'.  The
    returned set is brute-force verified to be a maximal induced forest.
    """
    if g.edge_count == 0 or h.edge_count == 0:
        raise ValueError("both factors must contain an edge")
    if spec.h_forest is None or spec.h_independent is None:
        raise ValueError("construction needs both a maximal forest and a maximal independent set of H")
    if not is_maximal_induced_forest(g, spec.forest):
        raise ValueError("witness construction requires a maximal induced forest")
    if not is_maximal_induced_forest(h, spec.h_forest):
        raise ValueError("h_forest must be a maximal induced forest of H")
    if not is_maximal_independent_set(h, spec.h_independent):
        raise ValueError("h_independent must be a maximal independent set of H")
    if spec.anchor not in spec.h_independent:
        raise ValueError(f"anchor {spec.anchor} must belong to the maximal independent set of H")
    _validate_partition(g, spec)
    p = spec.partition
    product, _ = lexicographic(g, h)
    n = h.order
    mask = 0
    for v in iter_bits(p.x1.mask):
        mask |= spec.h_forest.mask << (v * n)
    for v in iter_bits(p.x2.mask | p.z.mask):
        mask |= spec.h_independent.mask << (v * n)
    for v in iter_bits(p.y.mask | p.t.mask):
        mask |= 1 << (v * n + spec.anchor)
    expected = (
        len(spec.h_forest) * len(p.x1)
        + len(spec.h_independent) * (len(p.x2) + len(p.z))
        + len(p.y)
        + len(p.t)
    )
    if mask.bit_count() != expected:
        raise WitnessVerificationError(
            f"witness size {mask.bit_count()} differs from formula value {expected}",
            subset=VertexSubset(product.order, mask),
        )
    return _verify_witness(product, mask, "V*")


def _product_ground_truth(product: Graph, max_order: int | None) -> dict:
    f_p = forest_number(product, max_order)
    wfc_p, witness = is_well_f_covered(product, max_order)
    orders = sorted(maximal_forest_order_histogram(product, max_order))
    truth = {
        "product_order": product.order,
        "f_product": f_p,
        "well_f_covered_product": wfc_p,
        "maximal_forest_orders": orders,
    }
    if witness is not None:
        truth["product_witness"] = [sorted(witness[0].vertices()), sorted(witness[1].vertices())]
    return truth


def check_thm31(g: Graph, h: Graph, max_order: int | None = None) -> TheoremReport:
    """Check the empty-first-factor characterization against brute force."""
    if g.edge_count != 0:
        raise HypothesisError("thm31 requires an edgeless first factor")
    m = g.order
    product, _ = lexicographic(g, h)
    truth = _product_ground_truth(product, max_order)
    wfc_h, _ = is_well_f_covered(h, max_order)
    f_h = forest_number(h, max_order)
    truth.update({"f_h": f_h, "well_f_covered_h": wfc_h})
    biconditional = truth["well_f_covered_product"] == wfc_h
    formula = truth["f_product"] == m * f_h
    verdict = VERDICT_CONSISTENT if (biconditional and formula) else VERDICT_VIOLATION
    return TheoremReport(
        theorem_id="thm31",
        hypotheses={"g_empty": True, "m": m, "h_order": h.order},
        conditions={"well_f_covered_iff": biconditional, "forest_number_formula": formula},
        condition_values=(),
        ground_truth=truth,
        witnesses=(),
        verdict=verdict,
    )


def check_thm32(
    g: Graph,
    n: int,
    max_order: int | None = None,
    z_choice: str = "min",
    anchor: int | None = None,
) -> TheoremReport:
    """Evaluate the empty-second-factor necessary condition for G∘(n copies).

    The n = 1 case degenerates to |F| = f(G∘H) for every maximal forest,
    i.e. G itself being well-f-covered.
    """
    if n < 1:
        raise HypothesisError("thm32 requires a second factor with at least one vertex")
    anchor_val = 0 if anchor is None else anchor
    if not 0 <= anchor_val < n:
        raise ValueError(f"anchor {anchor_val} out of range for second factor of order {n}")
    h = generate(FamilySpec("empty", n))
    product, _ = lexicographic(g, h)
    truth = _product_ground_truth(product, max_order)
    f_p = truth["f_product"]
    records = []
    witnesses = []
    verification_failed = False
    for forest in enumerate_maximal_induced_forests(g, max_order):
        stats = forest_stats(g, forest)
        lhs = thm32_lhs(stats, n)
        records.append(
            ConditionRecord(forest=forest, stats=stats, lhs=lhs, rhs=f_p, holds=lhs == f_p)
        )
        spec = make_witness_spec(g, forest, z_choice=z_choice, anchor=anchor_val)
        detail = {
            "forest": list(forest.vertices()),
            "anchor": anchor_val,
            "z_choice": z_choice,
        }
        try:
            subset = construct_vstar_empty_second(g, spec, n)
            witnesses.append(WitnessRecord("vstar_empty_second", subset, len(subset), True, detail))
        except WitnessVerificationError as exc:
            verification_failed = True
            size = len(exc.subset) if exc.subset is not None else None
            detail = dict(detail, error=str(exc))
            witnesses.append(WitnessRecord("vstar_empty_second", exc.subset, size, False, detail))
    all_hold = all(r.holds for r in records)
    if verification_failed or (truth["well_f_covered_product"] and not all_hold):
        verdict = VERDICT_VIOLATION
    elif all_hold and not truth["well_f_covered_product"]:
        verdict = VERDICT_NON_SUFFICIENCY
    else:
        verdict = VERDICT_CONSISTENT
    return TheoremReport(
        theorem_id="thm32",
        hypotheses={"h_empty": True, "n": n, "g_order": g.order},
        conditions={"per_forest_formula": all_hold},
        condition_values=tuple(records),
        ground_truth=truth,
        witnesses=tuple(witnesses),
        verdict=verdict,
    )


def check_thm35(
    g: Graph,
    h: Graph,
    max_order: int | None = None,
    z_choice: str = "min",
    anchor: int | None = None,
) -> TheoremReport:
    """Evaluate conditions (1)-(4) for factors that both contain an edge."""
    if g.edge_count == 0:
        raise HypothesisError("thm35 requires a first factor with at least one edge")
    if h.edge_count == 0:
        raise HypothesisError("thm35 requires a second factor with at least one edge")
    product, _ = lexicographic(g, h)
    truth = _product_ground_truth(product, max_order)
    f_p = truth["f_product"]
    wfc_p = truth["well_f_covered_product"]

    forests_g = enumerate_maximal_induced_forests(g, max_order)
    stats_g = [forest_stats(g, forest) for forest in forests_g]
    mis_g = enumerate_maximal_independent_sets(g, max_order)
    mis_h = enumerate_maximal_independent_sets(h, max_order)
    forests_h = enumerate_maximal_induced_forests(h, max_order)
    alpha_g = independence_number(g, max_order)
    f_g = forest_number(g, max_order)
    f_h = forest_number(h, max_order)
    wc_g, _ = is_well_covered(g, max_order)
    wc_h, _ = is_well_covered(h, max_order)
    wfc_g, _ = is_well_f_covered(g, max_order)
    wfc_h, _ = is_well_f_covered(h, max_order)
    truth.update(
        {
            "alpha_g": alpha_g,
            "f_g": f_g,
            "f_h": f_h,
            "well_covered_g": wc_g,
            "well_covered_h": wc_h,
            "well_f_covered_g": wfc_g,
            "well_f_covered_h": wfc_h,
        }
    )

    premise1 = all(s.isolated == 0 for s in stats_g) and any(len(m) == 1 for m in mis_h)
    cond1 = wc_g and ((not premise1) or (wfc_g and f_g == f_p))
    premise2 = any(s.k2_components + s.outer_leaves > 0 for s in stats_g)
    cond2 = wfc_h and ((not premise2) or wc_h)
    cond3 = f_p == alpha_g * f_h

    records = []
    witnesses = []
    verification_failed = False

    # canonical F_H: the smallest-mask maximal forest of maximum order, so
    # that |F_H| = f(H) and the size identities read off directly
    fh_canon = next(s for s in forests_h if len(s) == f_h)
    for m in mis_g:
        detail = {"m": list(m.vertices()), "f_h": list(fh_canon.vertices())}
        if wfc_p:
            detail["quotient_holds"] = (
                f_p % len(fh_canon) == 0 and len(m) == f_p // len(fh_canon)
            )
        try:
            subset = construct_vm(g, m, h, fh_canon)
            witnesses.append(WitnessRecord("vm", subset, len(subset), True, detail))
        except WitnessVerificationError as exc:
            verification_failed = True
            size = len(exc.subset) if exc.subset is not None else None
            detail = dict(detail, error=str(exc))
            witnesses.append(WitnessRecord("vm", exc.subset, size, False, detail))

    for forest, stats in zip(forests_g, stats_g):
        for m_h in mis_h:
            lhs = thm35_lhs(stats, f_h, len(m_h))
            records.append(
                ConditionRecord(
                    forest=forest, stats=stats, lhs=lhs, rhs=f_p, holds=lhs == f_p, m_h=m_h
                )
            )
            anchor_val = m_h.vertices()[0] if anchor is None else anchor
            if anchor_val not in m_h:
                raise ValueError(
                    f"anchor {anchor_val} does not belong to the maximal independent set "
                    f"{sorted(m_h.vertices())}"
                )
            spec = make_witness_spec(
                g,
                forest,
                z_choice=z_choice,
                h_forest=fh_canon,
                h_independent=m_h,
                anchor=anchor_val,
            )
            detail = {
                "forest": list(forest.vertices()),
                "m_h": list(m_h.vertices()),
                "anchor": anchor_val,
                "z_choice": z_choice,
            }
            try:
                subset = construct_vstar_nonempty_second(g, spec, h)
                witnesses.append(
                    WitnessRecord("vstar_nonempty_second", subset, len(subset), True, detail)
                )
            except WitnessVerificationError as exc:
                verification_failed = True
                size = len(exc.subset) if exc.subset is not None else None
                detail = dict(detail, error=str(exc))
                witnesses.append(
                    WitnessRecord("vstar_nonempty_second", exc.subset, size, False, detail)
                )

    cond4 = all(r.holds for r in records)
    conditions = {
        "condition_1": cond1,
        "condition_2": cond2,
        "condition_3": cond3,
        "condition_4": cond4,
    }
    all_conditions = cond1 and cond2 and cond3 and cond4
    if verification_failed or (wfc_p and not all_conditions):
        verdict = VERDICT_VIOLATION
    elif all_conditions and not wfc_p:
        verdict = VERDICT_NON_SUFFICIENCY
    else:
        verdict = VERDICT_CONSISTENT
    return TheoremReport(
        theorem_id="thm35",
        hypotheses={
            "g_nonempty": True,
            "h_nonempty": True,
            "g_order": g.order,
            "h_order": h.order,
        },
        conditions=conditions,
        condition_values=tuple(records),
        ground_truth=truth,
        witnesses=tuple(witnesses),
        verdict=verdict,
    )
