"""Command-line surface: deterministic JSON reports over the pure library.

Every subcommand prints one JSON document (sorted keys, ``schema: 1``) on
stdout and a short human summary on stderr, so reports are byte-stable for
golden-file comparison.  Exit codes: 0 success/consistent, 1 findings or
property failures, 2 usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import IO

from .graphs import (
    FamilyError,
    Graph,
    Graph6Error,
    from_graph6,
    generate,
    parse_family,
    to_graph6,
)
from .products import lexicographic
from .forests import (
    DEFAULT_MAX_ORDER,
    EnumerationBoundError,
    Z_CHOICES,
    forest_number,
    is_well_f_covered,
    maximal_forest_order_histogram,
)
from .independence import independence_number, is_well_covered
from .theorems import (
    THEOREM_IDS,
    ClaimRecord,
    ConditionRecord,
    HypothesisError,
    TheoremReport,
    WitnessRecord,
    check_thm31,
    check_thm32,
    check_thm35,
)
from .examples import verify_paper_examples
from .search import ScanConfig, read_graph6_stream, scan

SCHEMA_VERSION = 1
MAX_ORDER_ENV = "WFCOVER_MAX_ORDER"
MAX_ORDER_CAP = 24

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunConfig:
    """Validated run options shared by the subcommands."""

    subcommand: str
    max_order: int
    z_choice: str = "min"
    anchor: int | None = None
    out_path: str | None = None
    strict: bool = True
    workers: int = 1


def _default_max_order() -> int:
    raw = os.environ.get(MAX_ORDER_ENV)
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_ORDER_ENV} must be an integer, got {raw!r}") from None
    return value


def _validate_max_order(value: int) -> int:
    if not 1 <= value <= MAX_ORDER_CAP:
        raise ValueError(f"enumeration bound must be between 1 and {MAX_ORDER_CAP}, got {value}")
    return value


def _graph_from_arg(text: str) -> Graph:
    """Accept family syntax (path:4, fig1), g6:<record>, file:<path>, or bare graph6."""
    if text == "fig1" or (":" in text and text.split(":", 1)[0] in ("path", "cycle", "complete", "empty")):
        return generate(parse_family(text))
    if text.startswith("g6:"):
        return from_graph6(text[3:])
    if text.startswith("file:"):
        graphs = list(read_graph6_stream(text[5:]))
        if not graphs:
            raise ValueError(f"no graph6 records in {text[5:]!r}")
        return graphs[0]
    return from_graph6(text)


def _graph_from_flags(args: argparse.Namespace) -> Graph:
    if args.family is not None:
        return generate(parse_family(args.family))
    if args.graph6 is not None:
        return from_graph6(args.graph6)
    graphs = list(read_graph6_stream(args.file))
    if not graphs:
        raise ValueError(f"no graph6 records in {args.file!r}")
    return graphs[0]


def _subset_json(subset) -> list[int]:
    return list(subset.vertices())


def _stats_json(stats) -> dict:
    return {
        "isolated": stats.isolated,
        "k2_components": stats.k2_components,
        "outer_leaves": stats.outer_leaves,
        "internal": stats.internal,
    }


def _condition_json(rec: ConditionRecord) -> dict:
    out = {
        "forest": _subset_json(rec.forest),
        "stats": _stats_json(rec.stats),
        "lhs": rec.lhs,
        "rhs": rec.rhs,
        "holds": rec.holds,
    }
    if rec.m_h is not None:
        out["m_h"] = _subset_json(rec.m_h)
    return out


def _witness_json(rec: WitnessRecord) -> dict:
    return {
        "kind": rec.kind,
        "subset": None if rec.subset is None else _subset_json(rec.subset),
        "size": rec.size,
        "verified": rec.verified,
        "detail": rec.detail,
    }


def _claim_json(rec: ClaimRecord) -> dict:
    return {
        "example": rec.example,
        "claim": rec.claim,
        "text": rec.text,
        "status": rec.status,
        "expected": rec.expected,
        "facts": rec.facts,
    }


def report_to_dict(report: TheoremReport) -> dict:
    out = {
        "schema": SCHEMA_VERSION,
        "theorem": report.theorem_id,
        "hypotheses": report.hypotheses,
        "conditions": report.conditions,
        "condition_values": [_condition_json(r) for r in report.condition_values],
        "ground_truth": report.ground_truth,
        "witnesses": [_witness_json(w) for w in report.witnesses],
        "verdict": report.verdict,
    }
    if report.claims:
        out["claims"] = [_claim_json(c) for c in report.claims]
    return out


def _emit(obj: dict, stdout: IO[str]) -> None:
    stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _graph_summary(g: Graph) -> dict:
    return {
        "graph6": to_graph6(g).decode("ascii"),
        "name": g.name,
        "order": g.order,
        "edges": g.edge_count,
    }


def _cmd_gen(args, config: RunConfig, stdout, stderr) -> int:
    g = generate(parse_family(args.family))
    doc = {
        "schema": SCHEMA_VERSION,
        "family": args.family,
        "edge_list": [list(e) for e in g.edges()],
        **_graph_summary(g),
    }
    _emit(doc, stdout)
    print(f"gen {args.family}: order {g.order}, {g.edge_count} edges", file=stderr)
    return 0


def _cmd_product(args, config: RunConfig, stdout, stderr) -> int:
    g = _graph_from_arg(args.g)
    h = _graph_from_arg(args.h)
    product, index_map = lexicographic(g, h)
    try:
        product_g6 = to_graph6(product).decode("ascii")
    except Graph6Error:
        product_g6 = None
    doc = {
        "schema": SCHEMA_VERSION,
        "graph6": product_g6,
        "order": product.order,
        "edges": product.edge_count,
        "g": _graph_summary(g),
        "h": _graph_summary(h),
        "index_map": {
            "g_order": index_map.g_order,
            "h_order": index_map.h_order,
            "encoding": "g * h_order + h",
            "legend": [[v, list(index_map.decode(v))] for v in range(product.order)],
        },
    }
    _emit(doc, stdout)
    print(
        f"product: order {product.order}, {product.edge_count} edges"
        + ("" if product_g6 else " (too large for graph6)"),
        file=stderr,
    )
    return 0


def _cmd_analyze(args, config: RunConfig, stdout, stderr) -> int:
    g = _graph_from_flags(args)
    bound = config.max_order
    wfc, wfc_witness = is_well_f_covered(g, bound)
    wc, _ = is_well_covered(g, bound)
    hist = maximal_forest_order_histogram(g, bound)
    doc = {
        "schema": SCHEMA_VERSION,
        **_graph_summary(g),
        "forest_number": forest_number(g, bound),
        "well_f_covered": wfc,
        "witness": None
        if wfc_witness is None
        else {
            "orders": [len(wfc_witness[0]), len(wfc_witness[1])],
            "forests": [_subset_json(wfc_witness[0]), _subset_json(wfc_witness[1])],
        },
        "independence_number": independence_number(g, bound),
        "well_covered": wc,
        "maximal_forest_orders_histogram": {str(k): v for k, v in hist.items()},
    }
    _emit(doc, stdout)
    print(
        f"analyze: order {g.order}, f={doc['forest_number']}, "
        f"well-f-covered={wfc}, alpha={doc['independence_number']}, well-covered={wc}",
        file=stderr,
    )
    return 0


def _cmd_check_theorem(args, config: RunConfig, stdout, stderr) -> int:
    g = _graph_from_arg(args.g)
    bound = config.max_order
    if args.theorem == "thm31":
        h = _graph_from_arg(args.h)
        report = check_thm31(g, h, max_order=bound)
    elif args.theorem == "thm32":
        h = _graph_from_arg(args.h)
        if h.edge_count != 0:
            raise HypothesisError("thm32 requires an edgeless second factor")
        report = check_thm32(
            g, h.order, max_order=bound, z_choice=config.z_choice, anchor=config.anchor
        )
    else:
        h = _graph_from_arg(args.h)
        report = check_thm35(
            g, h, max_order=bound, z_choice=config.z_choice, anchor=config.anchor
        )
    _emit(report_to_dict(report), stdout)
    print(f"check-theorem {args.theorem}: verdict {report.verdict}", file=stderr)
    return 0 if report.verdict == "consistent" else 1


def _cmd_verify_paper(args, config: RunConfig, stdout, stderr) -> int:
    report = verify_paper_examples(max_order=config.max_order)
    _emit(report_to_dict(report), stdout)
    statuses = {}
    for claim in report.claims:
        statuses[claim.status] = statuses.get(claim.status, 0) + 1
    summary = ", ".join(f"{k}={v}" for k, v in sorted(statuses.items()))
    print(f"verify-paper: {summary}; verdict {report.verdict}", file=stderr)
    return 0 if report.verdict == "consistent" else 1


def _cmd_search(args, config: RunConfig, stdout, stderr) -> int:
    g_graphs = list(read_graph6_stream(args.g_file, strict=config.strict))
    h_path = args.h_file if args.h_file is not None else args.g_file
    h_graphs = list(read_graph6_stream(h_path, strict=config.strict))
    pairs = [(g, h) for g in g_graphs for h in h_graphs]
    scan_config = ScanConfig(
        theorem=args.theorem,
        max_order=config.max_order,
        workers=config.workers,
        findings_path=config.out_path,
    )
    verdicts: dict[str, int] = {}
    checked = 0
    for finding in scan(pairs, scan_config):
        checked += 1
        verdicts[finding.verdict] = verdicts.get(finding.verdict, 0) + 1
    doc = {
        "schema": SCHEMA_VERSION,
        "theorem": args.theorem,
        "pairs_supplied": len(pairs),
        "pairs_checked": checked,
        "verdicts": verdicts,
        "findings_file": config.out_path,
    }
    _emit(doc, stdout)
    noteworthy = checked - verdicts.get("consistent", 0)
    print(
        f"search {args.theorem}: {checked} pairs checked, {noteworthy} findings",
        file=stderr,
    )
    return 1 if noteworthy else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wfcover",
        description="Exact well-f-coveredness analysis of graphs and lexicographic products.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--max-order",
            type=int,
            default=None,
            help=f"enumeration bound (default {MAX_ORDER_ENV} or {DEFAULT_MAX_ORDER}, cap {MAX_ORDER_CAP})",
        )

    p_gen = sub.add_parser("gen", help="generate a family graph and print it")
    p_gen.add_argument("--family", required=True, help="path:4, cycle:5, empty:3, complete:4, fig1")
    add_common(p_gen)

    p_product = sub.add_parser("product", help="build a lexicographic product")
    p_product.add_argument("--g", required=True, help="first factor (family, g6:..., file:..., or graph6)")
    p_product.add_argument("--h", required=True, help="second factor")
    add_common(p_product)

    p_analyze = sub.add_parser("analyze", help="forest/independence analysis of one graph")
    group = p_analyze.add_mutually_exclusive_group(required=True)
    group.add_argument("--family", help="family syntax, e.g. cycle:4")
    group.add_argument("--graph6", help="a graph6 record")
    group.add_argument("--file", help="file with graph6 records (first is analyzed)")
    add_common(p_analyze)

    p_check = sub.add_parser("check-theorem", help="evaluate one condition set on a pair")
    p_check.add_argument("theorem", choices=list(THEOREM_IDS))
    p_check.add_argument("--g", required=True, help="first factor")
    p_check.add_argument("--h", required=True, help="second factor")
    p_check.add_argument("--z-tiebreak", choices=list(Z_CHOICES), default="min")
    p_check.add_argument("--anchor", type=int, default=None, help="second-factor anchor vertex override")
    add_common(p_check)

    p_verify = sub.add_parser("verify-paper", help="re-check the bundled case studies")
    add_common(p_verify)

    p_search = sub.add_parser("search", help="scan graph6 files for non-sufficiency witnesses")
    p_search.add_argument("--g-file", required=True, help="graph6 file for first factors")
    p_search.add_argument("--h-file", default=None, help="graph6 file for second factors (default: --g-file)")
    p_search.add_argument("--theorem", required=True, choices=list(THEOREM_IDS))
    p_search.add_argument("--out", default=None, help="JSON Lines file for non-consistent findings")
    p_search.add_argument("--workers", type=int, default=1)
    p_search.add_argument(
        "--skip-malformed",
        action="store_true",
        help="skip malformed graph6 lines instead of aborting",
    )
    add_common(p_search)

    return parser


_COMMANDS = {
    "gen": _cmd_gen,
    "product": _cmd_product,
    "analyze": _cmd_analyze,
    "check-theorem": _cmd_check_theorem,
    "verify-paper": _cmd_verify_paper,
    "search": _cmd_search,
}


def run(argv: list[str], stdout: IO[str] | None = None, stderr: IO[str] | None = None) -> int:
    """Parse arguments and run one subcommand; returns the exit code."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        max_order = args.max_order if args.max_order is not None else _default_max_order()
        max_order = _validate_max_order(max_order)
        config = RunConfig(
            subcommand=args.subcommand,
            max_order=max_order,
            z_choice=getattr(args, "z_tiebreak", "min"),
            anchor=getattr(args, "anchor", None),
            out_path=getattr(args, "out", None),
            strict=not getattr(args, "skip_malformed", False),
            workers=getattr(args, "workers", 1),
        )
        return _COMMANDS[args.subcommand](args, config, stdout, stderr)
    except (
        FamilyError,
        Graph6Error,
        HypothesisError,
        EnumerationBoundError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=stderr)
        return 2


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    sys.exit(run(sys.argv[1:]))
