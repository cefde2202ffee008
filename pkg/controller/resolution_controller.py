"""
resolve: Newton pairs, resolution schematic and m_E values of a key
sequence, or the minimal resolution graph of a monomial curve y^q = x^p.
"""

from argparse import Namespace, _SubParsersAction
from logging import getLogger

from controller.context import CommandContext
from service.exceptions import UsageError
from service.key_sequence import parse_key_sequence
from service.render import render_schematic_dot, render_weighted_graph_dot
from service.reports import ResolutionRecord
from service.reports.builders import monomial_record, resolution_record
from service.resolution import (
    dual_graph_schematic,
    fractional_claim_check,
    monomial_resolution_graph,
    newton_pairs,
)
from service.resolution.continued_fractions import check_pair
from service.utils.utils import parse_fraction_pair

logger = getLogger(__name__)


def register(subparsers: _SubParsersAction) -> None:
    parser = subparsers.add_parser("resolve", help="resolution schematic or monomial resolution graph")
    parser.add_argument("sequence", nargs="?", default=None)
    parser.add_argument("--monomial", metavar="P/Q", default=None, help="resolve y^q = x^p instead")
    parser.add_argument("--dot", action="store_true", help="print Graphviz DOT")
    parser.add_argument("--claims", action="store_true", help="with --monomial, check the curvette inequalities")
    parser.set_defaults(handler=cmd_resolve)


def resolution_text(record: ResolutionRecord) -> str:
    lines = [f"resolution of {record.source}"]
    if record.newton_pairs:
        lines.append("  Newton pairs: " + " ".join(f"({p.q}, {p.p})" for p in record.newton_pairs))
    if record.schematic:
        extra = f", extra chain Δ = {record.schematic.extra_chain}" if record.schematic.extra_chain else ""
        lines.append(
            f"  schematic: spine {record.schematic.spine_deltas}, "
            f"branches {record.schematic.branch_deltas}{extra}"
        )
    if record.singularity_class:
        lines.append(f"  class: {record.singularity_class}")
    for locator in record.locators:
        lines.append(f"  m_E[{locator.locator}] = {locator.m_E}")
    if record.continued_fraction:
        lines.append(f"  continued fraction: {record.continued_fraction}")
    for vertex in record.vertices:
        lines.append(f"  {vertex.label} ({vertex.weight})")
    for a, b in record.edges:
        lines.append(f"  {a} -- {b}")
    if record.exceptional_determinant is not None:
        lines.append(f"  |det| of the exceptional curves: {record.exceptional_determinant}")
    for row in record.claims:
        checks = ", ".join(
            f"{name} {'skipped' if value is None else ('ok' if value else 'FAILS')}"
            for name, value in row.checks.items()
        )
        lines.append(f"  row ({row.j}, {row.k}) {row.value}: {checks}")
    return "\n".join(lines)


def cmd_resolve(args: Namespace, ctx: CommandContext) -> int:
    if (args.sequence is None) == (args.monomial is None):
        raise UsageError("resolve needs exactly one of a sequence or --monomial P/Q")
    rankdir = ctx.output.dot_rankdir

    if args.monomial is not None:
        p, q = parse_fraction_pair(args.monomial)
        check_pair(p, q)
        graph = monomial_resolution_graph(p, q)
        if args.dot:
            print(render_weighted_graph_dot(graph, name="monomial", rankdir=rankdir), end="")
            return 0
        claims = fractional_claim_check(p, q) if args.claims else None
        record = monomial_record(p, q, graph, claims)
        ctx.emit(record, resolution_text(record))
        return 0 if record.claims_hold is not False else 1

    if args.claims:
        raise UsageError("--claims applies to --monomial only")
    ks = parse_key_sequence(args.sequence)
    if args.dot:
        print(render_schematic_dot(dual_graph_schematic(newton_pairs(ks)), rankdir=rankdir), end="")
        return 0
    record = resolution_record(ks)
    ctx.emit(record, resolution_text(record))
    return 0
