"""Command-line interface.

Exit status: 0 on success, 1 when a verification check fails, 2 on bad
input. Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional, Sequence

from . import generators
from .derived import KINDS, Original, SubdividedHalf, construct
from .errors import GraphError
from .formats import parse_document, serialize, serialize_edge_list, serialize_graph6
from .graph import is_connected
from .indices import IndexReport, report
from .verifier import (
    SweepReport,
    audit_degree_facts,
    classify,
    errata_report,
    records_to_csv,
    records_to_json,
    sweep_random,
    verify_examples,
    verify_propositions,
)

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _load(args):
    graphs = parse_document(_read_text(args.file), args.format)
    for i, g in enumerate(graphs):
        if not is_connected(g):
            label = args.file if len(graphs) == 1 else f"{args.file}[{i}]"
            print(f"warning: {label} is disconnected", file=sys.stderr)
    return graphs


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _reports_csv(reports: Sequence[IndexReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(IndexReport.FIELDS)
    for r in reports:
        w.writerow(getattr(r, k) for k in IndexReport.FIELDS)
    return buf.getvalue()


def cmd_indices(args) -> int:
    reports = [report(g) for g in _load(args)]
    if args.csv:
        _emit(args, _reports_csv(reports))
    else:
        payload = reports[0].as_dict() if len(reports) == 1 else [r.as_dict() for r in reports]
        _emit(args, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def _provenance_comments(dg) -> str:
    lines = []
    for x, p in enumerate(dg.provenance):
        if isinstance(p, SubdividedHalf):
            lines.append(f"# {x} half edge={p.e} endpoint={p.u}")
        elif isinstance(p, Original):
            lines.append(f"# {x} vertex {p.u}")
        else:
            lines.append(f"# {x} edge {p.e}")
    return "".join(line + "\n" for line in lines)


def cmd_derive(args) -> int:
    graphs = _load(args)
    if not args.graph6 and len(graphs) != 1:
        raise InputError("edge-list output holds one graph; use --graph6 for several")
    if args.graph6 and args.provenance:
        raise InputError("--provenance needs edge-list output")
    out = []
    for g in graphs:
        dg = construct(args.kind, g)
        if args.graph6:
            out.append(serialize_graph6(dg.graph) + "\n")
        else:
            prov = _provenance_comments(dg) if args.provenance else ""
            out.append(prov + serialize_edge_list(dg.graph))
    _emit(args, "".join(out))
    return EXIT_OK


def _emit_records(args, records) -> None:
    _emit(args, records_to_csv(records) if args.csv else records_to_json(records))


def cmd_verify(args) -> int:
    graphs = _load(args)
    records = []
    violations = []
    for i, g in enumerate(graphs):
        desc = args.file if len(graphs) == 1 else f"{args.file}[{i}]"
        records.extend(verify_propositions(g, desc))
        violations.extend(audit_degree_facts(g))
    _emit_records(args, records)
    for v in violations:
        print(f"degree fact violated: {v}", file=sys.stderr)
    failed = [r for r in records if not r.ok]
    for r in failed:
        print(f"MISMATCH {r.graph} {r.kind} {r.invariant} {r.source}: closed={r.closed_value} oracle={r.oracle_value}",
              file=sys.stderr)
    return EXIT_MISMATCH if failed or violations else EXIT_OK


def _parse_range(text: str):
    try:
        a, b = text.split("..")
        return int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None


def _parse_floats(text: str) -> List[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated probabilities, got {text!r}") from None


def _emit_report(args, rep: SweepReport) -> None:
    _emit(args, rep.to_csv() if args.csv else rep.to_json())


def cmd_examples(args) -> int:
    start, stop = args.range
    records = verify_examples(start, stop)
    rep = SweepReport(records, {"families": ["cycle", "star"], "n_range": [start, stop]}, classify(records))
    _emit_report(args, rep)
    return EXIT_OK


def cmd_sweep(args) -> int:
    rep = sweep_random(args.count, args.nmax, args.p, args.seed, include_families=args.families)
    _emit_report(args, rep)
    bad = rep.proposition_mismatches()
    for r in bad:
        print(f"MISMATCH {r.graph} {r.kind} {r.invariant} {r.source}", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_errata(args) -> int:
    _emit_report(args, errata_report())
    return EXIT_OK


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "random":
        if args.p is None or args.seed is None:
            raise InputError("--family random needs --p and --seed")
        g = generators.random_graph(args.n, args.p, args.seed)
    elif fam == "complete_bipartite":
        if args.n2 is None:
            raise InputError("--family complete_bipartite needs --n2")
        g = generators.complete_bipartite(args.n, args.n2)
    else:
        g = generators.FAMILIES[fam](args.n)
    _emit(args, serialize(g, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist",
                        help="graph file format (default: edgelist)")
    common.add_argument("--output", "-o", help="write to this path instead of stdout")
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true", help="JSON output (default)")
    out.add_argument("--csv", action="store_true", help="CSV output")

    parser = argparse.ArgumentParser(prog="findex", description="F-index, Zagreb indices and derived graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("indices", parents=[common], help="print the invariant report of a graph")
    p.add_argument("file", help="graph file, '-' for stdin")
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("derive", parents=[common], help="construct a derived graph")
    p.add_argument("--kind", required=True, choices=[k.value for k in KINDS])
    p.add_argument("--graph6", action="store_true", help="write graph6 instead of an edge list")
    p.add_argument("--provenance", action="store_true", help="prefix vertex provenance as comment lines")
    p.add_argument("file")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("verify", parents=[common], help="check every closed form on a graph")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("examples", parents=[common], help="classify the published cycle/star formulas")
    p.add_argument("--range", type=_parse_range, default=(3, 20), help="inclusive size range A..B")
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("sweep", parents=[common], help="verify closed forms on seeded random graphs")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--p", type=_parse_floats, default=[0.2, 0.5, 0.8], help="comma-separated probabilities")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--families", action="store_true", help="also sweep cycles, stars, paths, complete graphs")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("errata", parents=[common], help="fixed report on every published formula")
    p.set_defaults(func=cmd_errata)

    p = sub.add_parser("gen", parents=[common], help="emit a generated graph")
    p.add_argument("--family", required=True,
                   choices=("cycle", "star", "path", "complete", "complete_bipartite", "random"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n2", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
