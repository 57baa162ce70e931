"""
Heawood Certifier - Command Line Entry Point

Every command reads a graph (a builtin name or @path to an edge-list file),
runs one part of the library and prints text, or JSON with --json. Results
go to stdout, diagnostics to stderr and the log files.

Exit codes:
- 0: success (and, for checks, everything passed)
- 1: a check failed or an internal consistency check tripped
- 2: bad usage or unreadable input

Usage:
    python -m Certifier.main cycles count --graph heawood --method both
    python -m Certifier.main verify heawood --json report.json
"""

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, TextIO

from .AutGroup import automorphisms
from .CertificationReport import census_table_lines, export_pdf, render_json, render_text
from .CycleEnum import disjoint_six_cycle_pairs, enumerate_cycles, cycle_census
from .database import get_certification_history, record_certification
from .Family import family_index, k7_family
from .GraphCore import (Graph, complete_graph, cycle_graph, fano_incidence_graph, find_isomorphism,
                        graph_from_edge_list, heawood, petersen)
from .Orbits import orbit_partition
from .StructureChecks import (check_disjoint_pair_configuration, check_distance_three_pair,
                              check_hamiltonian_chord_pattern, check_twelve_cycle_complement,
                              certify_heawood, compare_with_reference, distance_three_pairs)
from .Utilities import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, InputError, handle_errors
from .Zeon import zeon_census
from .Logger import CertifierLogger, get_logger
logger = get_logger(__name__)

NAMED_GRAPHS: Dict[str, Callable[[], Graph]] = {
    "heawood": heawood,
    "petersen": petersen,
    "fano": fano_incidence_graph,
}

ORBIT_FAMILIES = ("6", "8", "10", "12", "14", "pairs6")
LEMMAS = ("chords", "complement", "distance3", "pairconfig")

# ============================================================================
# GRAPH INGESTION
# ============================================================================

def load_graph(source: str) -> Graph:
    """Resolve a builtin name (heawood, petersen, fano, kN, cN) or @path."""
    if source.startswith("@"):
        text = Path(source[1:]).read_text(encoding="utf-8")
        return graph_from_edge_list(text)
    name = source.lower()
    if name in NAMED_GRAPHS:
        return NAMED_GRAPHS[name]()
    match = re.fullmatch(r"([kc])(\d+)", name)
    if match:
        n = int(match.group(2))
        return complete_graph(n) if match.group(1) == "k" else cycle_graph(n)
    raise InputError(f"unknown graph {source!r}; use heawood, petersen, fano, kN, cN or @path")


def _normalized(g: Graph) -> Graph:
    """Relabel to 1..n so permutations act on labels directly."""
    if list(g.labels) == list(range(1, g.n + 1)):
        return g
    return g.relabeled({label: i for i, label in enumerate(g.labels, start=1)})


def _is_heawood(g: Graph) -> bool:
    return g.n == 14 and find_isomorphism(g, heawood()) is not None


def _emit_json(out: TextIO, data) -> None:
    out.write(json.dumps(data, indent=2) + "\n")

# ============================================================================
# COMMAND HANDLERS
# ============================================================================

@handle_errors
def cmd_cycles_count(args, out):
    g = load_graph(args.graph)
    dfs = cycle_census(g, args.threads) if args.method in ("dfs", "both") else None
    zeon = zeon_census(g, args.threads) if args.method in ("zeon", "both") else None
    agree = dfs == zeon if args.method == "both" else None
    comparison = compare_with_reference(dfs if dfs is not None else zeon) if _is_heawood(g) else None
    if args.json:
        data = {"graph": args.graph, "method": args.method}
        if dfs is not None:
            data["census_dfs"] = {str(k): v for k, v in dfs.items()}
        if zeon is not None:
            data["census_zeon"] = {str(k): v for k, v in zeon.items()}
        data["methods_agree"] = agree
        if comparison is not None:
            data["reference_comparison"] = comparison
        _emit_json(out, data)
    else:
        if args.method == "both":
            for line in census_table_lines(dfs, zeon):
                out.write(line + "\n")
            out.write(f"methods agree: {'yes' if agree else 'NO'}\n")
        else:
            for k, v in (dfs if dfs is not None else zeon).items():
                out.write(f"{k:>6}  {v:>6}\n")
        for row in comparison or []:
            note = " (informational)" if row["informational"] else ""
            verdict = "match" if row["match"] else "MISMATCH"
            out.write(f"{row['length']}-cycles: stated {row['stated']}, computed {row['computed']}, {verdict}{note}\n")
    return EXIT_CHECK_FAILED if agree is False else EXIT_OK


@handle_errors
def cmd_cycles_list(args, out):
    g = load_graph(args.graph)
    cycles = enumerate_cycles(g, args.length, args.threads)
    if args.json:
        _emit_json(out, {"length": args.length, "count": len(cycles), "cycles": [list(c.vertices) for c in cycles]})
    else:
        for c in cycles:
            out.write(f"{c}\n")
        out.write(f"{len(cycles)} cycles of length {args.length}\n")
    return EXIT_OK


@handle_errors
def cmd_pairs(args, out):
    g = load_graph(args.graph)
    pairs = disjoint_six_cycle_pairs(g, enumerate_cycles(g, 6, args.threads) if g.n >= 6 else [])
    if args.json:
        _emit_json(out, {"count": len(pairs),
                         "pairs": [[list(p.first.vertices), list(p.second.vertices)] for p in pairs]})
    else:
        for p in pairs:
            out.write(f"{p}\n")
        out.write(f"{len(pairs)} disjoint 6-cycle pairs\n")
    return EXIT_OK


@handle_errors
def cmd_aut(args, out):
    g = load_graph(args.graph)
    group = automorphisms(g)
    if args.json:
        _emit_json(out, group.to_json())
    else:
        out.write(f"order {group.order}\n")
        out.write("generators:\n")
        for p in group.generators:
            out.write(f"  {p}\n")
    return EXIT_OK


def _orbit_family(g: Graph, family: str, threads: Optional[int]):
    if family == "pairs6":
        return disjoint_six_cycle_pairs(g, enumerate_cycles(g, 6, threads) if g.n >= 6 else [])
    return enumerate_cycles(g, int(family), threads)


@handle_errors
def cmd_orbits(args, out):
    g = _normalized(load_graph(args.graph))
    group = automorphisms(g)
    partition = orbit_partition(group, _orbit_family(g, args.family, args.threads))
    if args.json:
        _emit_json(out, partition.to_json())
    else:
        out.write(f"family: {partition.family_kind}\n")
        out.write(f"group order: {partition.group_order}\n")
        out.write(f"orbit sizes: {partition.orbit_sizes}\n")
        out.write(f"stabilizer orders: {partition.stabilizer_orders}\n")
        out.write(f"transitive: {'yes' if partition.transitive else 'no'}\n")
    return EXIT_OK


@handle_errors
def cmd_lemmas(args, out):
    g = _normalized(load_graph(args.graph))
    if g.n != 14:
        raise InputError(f"the lemma verifiers need a graph on 14 vertices, got {g.n}")
    if args.lemma == "chords":
        verdicts = [check_hamiltonian_chord_pattern(g, c) for c in enumerate_cycles(g, g.n, args.threads)]
    elif args.lemma == "complement":
        verdicts = [check_twelve_cycle_complement(g, c) for c in enumerate_cycles(g, 12, args.threads)]
    elif args.lemma == "distance3":
        verdicts = [check_distance_three_pair(g, u, v) for u, v in distance_three_pairs(g)]
    else:
        pairs = disjoint_six_cycle_pairs(g, enumerate_cycles(g, 6, args.threads))
        verdicts = [check_disjoint_pair_configuration(g, p) for p in pairs]
    passed = sum(v.passed for v in verdicts)
    if args.json:
        _emit_json(out, {"lemma": args.lemma, "instances": len(verdicts), "passed": passed,
                         "verdicts": [v.to_json() for v in verdicts]})
    else:
        for v in verdicts:
            reason = "" if v.passed else f" ({v.witness['reason']})"
            out.write(f"[{'PASS' if v.passed else 'FAIL'}] {v.instance}{reason}\n")
        out.write(f"{args.lemma}: {passed}/{len(verdicts)} instances pass\n")
    return EXIT_OK if passed == len(verdicts) else EXIT_CHECK_FAILED


@handle_errors
def cmd_family(args, out):
    members = k7_family(include_y_delta=args.with_y_delta)
    index = family_index(members)
    if args.json:
        for entry, g in zip(index["members"], members):
            entry["edge_list"] = [list(e) for e in g.edges()]
        _emit_json(out, index)
    else:
        for entry, g in zip(index["members"], members):
            out.write(f"# member {entry['id']}: n={entry['n']} edges={entry['edges']}"
                      f"{' heawood' if entry['is_heawood'] else ''}\n")
            out.write(g.to_edge_list())
            out.write("\n")
        _emit_json(out, index)
    return EXIT_OK


@handle_errors
def cmd_verify(args, out):
    g = load_graph(args.graph)
    report = certify_heawood(g, args.threads)
    if args.json == "-":
        out.write(render_json(report, include_timings=args.timings))
    else:
        out.write(render_text(report, include_timings=args.timings))
        if args.json:
            Path(args.json).write_text(render_json(report, include_timings=args.timings), encoding="utf-8")
    if args.pdf:
        export_pdf(report, args.pdf)
    if args.record:
        run_id = record_certification(report, args.graph, g)
        print(f"recorded certification run {run_id}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


@handle_errors
def cmd_export(args, out):
    g = load_graph(args.graph)
    out.write(g.to_dot(args.name))
    return EXIT_OK


@handle_errors
def cmd_history(args, out):
    runs = get_certification_history(args.limit)
    if args.json:
        _emit_json(out, runs)
    else:
        for run in runs:
            status = "PASS" if run["passed"] else f"FAIL ({run['first_failure']})"
            out.write(f"{run['id']:>4}  {run['created_at']}  {run['graph_name']}  {status}\n")
    return EXIT_OK

# ============================================================================
# ARGUMENT PARSING
# ============================================================================

def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=_positive_int, default=None,
                        help="worker threads for the per-root searches (default: CERTIFIER_THREADS)")
    common.add_argument("--log-level", default=None, help="console log level")
    with_json = argparse.ArgumentParser(add_help=False)
    with_json.add_argument("--json", action="store_true", help="print JSON instead of text")
    with_graph = argparse.ArgumentParser(add_help=False)
    with_graph.add_argument("--graph", default="heawood", help="heawood, petersen, fano, kN, cN or @path")

    parser = argparse.ArgumentParser(prog="certifier",
                                     description="Certify the cycle structure of the Heawood graph.")
    commands = parser.add_subparsers(dest="command", required=True)

    cycles = commands.add_parser("cycles", help="cycle census and listings")
    cycle_commands = cycles.add_subparsers(dest="cycles_command", required=True)
    count = cycle_commands.add_parser("count", parents=[common, with_json, with_graph])
    count.add_argument("--method", choices=("dfs", "zeon", "both"), default="both")
    count.set_defaults(handler=cmd_cycles_count)
    listing = cycle_commands.add_parser("list", parents=[common, with_json, with_graph])
    listing.add_argument("--length", type=int, required=True)
    listing.set_defaults(handler=cmd_cycles_list)

    pairs = commands.add_parser("pairs", help="vertex-disjoint cycle pairs")
    pair_commands = pairs.add_subparsers(dest="pairs_command", required=True)
    pair_commands.add_parser("disjoint6", parents=[common, with_json, with_graph]).set_defaults(handler=cmd_pairs)

    commands.add_parser("aut", parents=[common, with_json, with_graph],
                        help="automorphism group").set_defaults(handler=cmd_aut)

    orbits = commands.add_parser("orbits", parents=[common, with_json, with_graph], help="orbits of a family")
    orbits.add_argument("--family", choices=ORBIT_FAMILIES, required=True)
    orbits.set_defaults(handler=cmd_orbits)

    lemmas = commands.add_parser("lemmas", parents=[common, with_json, with_graph], help="lemma verifiers")
    lemmas.add_argument("lemma", choices=LEMMAS)
    lemmas.set_defaults(handler=cmd_lemmas)

    family = commands.add_parser("family", help="exchange families")
    family_commands = family.add_subparsers(dest="family_command", required=True)
    k7 = family_commands.add_parser("k7", parents=[common, with_json])
    k7.add_argument("--with-y-delta", action="store_true",
                    help="also apply Wye-Delta exchanges during the closure")
    k7.set_defaults(handler=cmd_family)

    verify = commands.add_parser("verify", parents=[common], help="full certification")
    verify.add_argument("graph", nargs="?", default="heawood")
    verify.add_argument("--json", metavar="PATH", default=None, help="write the JSON report to PATH ('-' for stdout)")
    verify.add_argument("--pdf", metavar="PATH", default=None, help="write a PDF certificate to PATH")
    verify.add_argument("--record", action="store_true", help="store the run in the history database")
    verify.add_argument("--timings", action="store_true", help="include stage timings")
    verify.set_defaults(handler=cmd_verify)

    export = commands.add_parser("export", help="export a graph")
    export_commands = export.add_subparsers(dest="export_command", required=True)
    dot = export_commands.add_parser("dot", parents=[common, with_graph])
    dot.add_argument("--name", default="G")
    dot.set_defaults(handler=cmd_export)

    history = commands.add_parser("history", parents=[common, with_json], help="recorded certifications")
    history.add_argument("--limit", type=_positive_int, default=20)
    history.set_defaults(handler=cmd_history)
    return parser


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """Parse arguments, dispatch to a command handler and return its exit code."""
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    if args.log_level:
        try:
            CertifierLogger.set_console_level(args.log_level)
        except ValueError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
    logger.debug(f"Running command {args.command} with {vars(args)}")
    return args.handler(args, out)


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
