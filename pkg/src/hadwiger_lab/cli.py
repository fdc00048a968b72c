"""Command-line entry point: ``hadlab <command> (--input FILE | --g6 STR | --gen SPEC) ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Iterator

from . import chromatic, lab, minors, transparency
from .contraction import mismatch_positions, replacement_count, update_exact, update_paper_literal
from .graph import Graph, Graph6Error, GraphError, NotAdjacentError, from_spec, parse_graph6, read_graph6_lines

COMMANDS = ("analyze", "contract", "greedy", "hadwiger", "chroma", "sweep", "audit31")

EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2


class InputError(Exception):
    pass


class BudgetExceeded(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hadlab", description="Graph contraction laboratory.")
    parser.add_argument("command", choices=COMMANDS)
    src = parser.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="FILE", help="graph6 file, one graph per line")
    src.add_argument("--g6", metavar="STRING", help="inline graph6 string")
    src.add_argument("--gen", metavar="SPEC", help="generator spec, e.g. cycle:5 or gnp:10:0.4:42")
    parser.add_argument("--seed", type=int, help="seed for gnp generator specs")
    parser.add_argument("--max-oracle", type=int, default=minors.DEFAULT_MAX_ORACLE_ORDER)
    parser.add_argument("--max-chi", type=int, default=chromatic.MAX_CHI_ORDER)
    parser.add_argument("--max-thm31", type=int, default=chromatic.MAX_ENUMERATION_ORDER)
    parser.add_argument("--out", metavar="DIR", help="report directory for sweep and audit31")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--pair", nargs=2, type=int, metavar=("I", "J"), help="contraction I => J")
    parser.add_argument("--base", type=int, choices=(0, 1), default=0, help="first vertex label (1 matches v1..vp)")
    parser.add_argument("--workers", type=int, default=1)
    return parser


def _graphs(args) -> Iterator[Graph]:
    shift = (lambda v: v + 1) if args.base == 1 else None
    if args.input:
        try:
            with open(args.input, encoding="ascii") as fh:
                lines = fh.readlines()
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
        graphs: Iterator[Graph] = read_graph6_lines(lines)
    elif args.g6:
        graphs = iter([parse_graph6(args.g6)])
    else:
        built = from_spec(args.gen, args.seed)
        graphs = iter([built]) if isinstance(built, Graph) else built
    for g in graphs:
        yield g.relabel(shift) if shift else g


def _validate(args) -> None:
    if not (args.input or args.g6 or args.gen):
        raise InputError("exactly one input source is required: --input, --g6 or --gen")
    if args.seed is not None and not (args.gen and args.gen.startswith("gnp")):
        raise InputError("--seed only applies to --gen gnp:...")
    if min(args.max_oracle, args.max_chi, args.max_thm31, args.workers) < 1:
        raise InputError("budgets and worker counts must be positive")
    if args.command == "contract" and not args.pair:
        raise InputError("contract needs --pair I J")
    if args.command in ("sweep", "audit31") and not args.out:
        raise InputError(f"{args.command} needs --out DIR")


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _analyze(args, g: Graph) -> None:
    if g.order > args.max_chi:
        raise BudgetExceeded(f"order {g.order} exceeds --max-chi {args.max_chi}")
    t = transparency.compute(g)
    chi = chromatic.chromatic_number(g)
    rep = chromatic.minimal_partite_representation(g)
    seps = chromatic.find_separators(g, rep)
    degrees = {v: transparency.degree_of(t, v) for v in g.vertices}
    omega = transparency.clique_number(t)
    alpha = transparency.independence_number(t)
    payload = {
        "graph6": g.to_graph6(),
        "vertices": list(g.vertices),
        "matrix": [[x if isinstance(x, int) else None for x in r] for r in t.rows],
        "degrees": {str(v): d for v, d in degrees.items()},
        "clique_number": omega,
        "independence_number": alpha,
        "chi": chi,
        "representation": rep.to_lists(),
        "separators": [[s.first, s.second, s.witness] for s in seps],
    }
    text = "\n".join(
        [
            f"graph6: {g.to_graph6()}  order: {g.order}  size: {g.size}",
            "T(G):",
            t.to_text(),
            "degrees: " + " ".join(f"{v}:{d}" for v, d in degrees.items()),
            f"clique number: {omega}",
            f"independence number: {alpha}",
            f"chromatic number: {chi}",
            "minimal representation: " + " ".join("{" + ",".join(map(str, p)) + "}" for p in rep.to_lists()),
            "separators: " + (" ".join(f"({s.first},{s.second}) via {s.witness}" for s in seps) or "-"),
        ]
    )
    _emit(args, payload, text)


def _contract(args, g: Graph) -> None:
    i, j = args.pair
    t = transparency.compute(g)
    if not (g.has_vertex(i) and g.has_vertex(j)):
        raise InputError(f"pair ({i}, {j}) not available for contraction: unknown vertex")
    try:
        exact = update_exact(t, g, i, j)
        literal = update_paper_literal(t, i, j)
        count = replacement_count(t, g, i, j)
    except NotAdjacentError:
        raise InputError(f"pair ({i}, {j}) not available for contraction") from None
    diff = mismatch_positions(literal, exact)
    payload = {
        "removed": i,
        "survivor": j,
        "vertices": list(exact.vertices),
        "exact": [[x if isinstance(x, int) else None for x in r] for r in exact.rows],
        "literal": [[x if isinstance(x, int) else None for x in r] for r in literal.rows],
        "replacements": count,
        "mismatches": [list(p) for p in diff],
    }
    text = "\n".join(
        [
            f"contraction {i} => {j}  replacements: {count}",
            "vertices: " + " ".join(map(str, exact.vertices)),
            "exact:",
            exact.to_text(),
            "literal:",
            literal.to_text(),
            "diff: " + (" ".join(f"({m},{n}) {literal[m, n]}!={exact[m, n]}" for m, n in diff) or "none"),
        ]
    )
    _emit(args, payload, text)


def _greedy(args, g: Graph) -> None:
    if not g.is_connected():
        raise InputError("greedy needs a connected graph")
    trace = minors.greedy_contract(g)
    lines = [f"graph6: {g.to_graph6()}  order: {g.order}"]
    for k, s in enumerate(trace.steps, 1):
        lines.append(f"step {k}: {s.removed} => {s.survivor}  replacements: {s.replacements}")
    lines.append(f"terminal: K{trace.terminal_order} after {trace.step_count} step(s)")
    _emit(args, trace.to_dict(), "\n".join(lines))


def _hadwiger(args, g: Graph) -> None:
    if g.order > args.max_oracle:
        raise BudgetExceeded(f"order {g.order} exceeds --max-oracle {args.max_oracle}")
    h, cert = minors.hadwiger_number(g, max_order=args.max_oracle)
    text = f"hadwiger number: {h}\nbranch sets: " + " ".join(
        "{" + ",".join(map(str, b)) + "}" for b in cert.to_lists()
    )
    _emit(args, {"hadwiger": h, "branch_sets": cert.to_lists()}, text)


def _chroma(args, g: Graph) -> None:
    if g.order > args.max_chi:
        raise BudgetExceeded(f"order {g.order} exceeds --max-chi {args.max_chi}")
    chi = chromatic.chromatic_number(g)
    rep = chromatic.minimal_partite_representation(g)
    payload = {"chi": chi, "representation": rep.to_lists()}
    lines = [f"chromatic number: {chi}", "representation: " + " ".join("{" + ",".join(map(str, p)) + "}" for p in rep.to_lists())]
    if g.is_connected() and g.size > 0:
        sensitive = chromatic.is_contraction_sensitive(g)
        crit = chromatic.is_k_critical(g)
        payload.update(
            contraction_sensitive=sensitive, edge_critical=crit.edge_critical, vertex_critical=crit.vertex_critical
        )
        lines += [
            f"contraction sensitive: {str(sensitive).lower()}",
            f"edge critical: {str(crit.edge_critical).lower()}  vertex critical: {str(crit.vertex_critical).lower()}",
        ]
    _emit(args, payload, "\n".join(lines))


SINGLE = {"analyze": _analyze, "contract": _contract, "greedy": _greedy, "hadwiger": _hadwiger, "chroma": _chroma}


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _validate(args)
        if args.command in SINGLE:
            first = True
            for g in _graphs(args):
                if not first:
                    print()
                first = False
                SINGLE[args.command](args, g)
            return EXIT_OK
        if args.command == "sweep":
            budget = lab.Budget(max_chi=args.max_chi, max_oracle=args.max_oracle, max_thm31=args.max_thm31)
            records = list(lab.sweep(_graphs(args), budget, workers=args.workers))
            jsonl, csv_path = lab.write_reports(records, args.out)
            print(f"wrote {len(records)} record(s) to {jsonl} and {csv_path}")
            if records and all(r.skipped for r in records):
                return EXIT_BUDGET
            return EXIT_OK
        report = lab.audit_theorem31(_graphs(args), max_order=args.max_thm31)
        path = lab.write_theorem31_report(report, args.out)
        if args.format == "json":
            print(report.to_json(), end="")
        else:
            print(report.to_text(), end="")
            print(f"wrote {path}")
        if report.skipped and not (report.sensitive_holds or report.sensitive_fails or report.insensitive_holds or report.insensitive_fails or report.outside_hypothesis):
            return EXIT_BUDGET
        return EXIT_OK
    except (InputError, GraphError, Graph6Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"skipped: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
