"""Command-line front end.

Subcommands: analyze (.hsf), milnor (.lm), transition / simplicity /
split-verify (.tr) and web build|validate|path|export (.web).  All numeric
output is exact; reports are deterministic for fixed inputs and seed.  Exit
codes: 0 success, 1 domain error (with finding text on stderr), 2 usage.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import DomainError
from .groebner import DEFAULT_BUDGET
from .singularities import (
    CSV_HEADER,
    analyze_singular_locus,
    load_hypersurface,
    load_local_model,
    local_invariants,
)
from .transitions import (
    compute_table,
    consistency_check,
    decide_simplicity,
    dim_image_lambda,
    load_transition_record,
    table_csv,
    verify_splitting_family,
)
from .web import export_csv, export_dot, load_web_graph, serialize_web_graph


def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for the radicality-certificate linear forms")
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="pair-reduction budget for basis computations")
    parser.add_argument("--csv", action="store_true", help="CSV output")
    parser.add_argument("--dot", action="store_true", help="DOT output (web export)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyweb",
        description="exact invariants of hypersurface singularities, "
                    "geometric transitions and the Calabi-Yau web",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="certify the singular locus of a hypersurface")
    p.add_argument("file", type=Path)
    _common(p)

    p = sub.add_parser("milnor", help="local invariants of an isolated germ")
    p.add_argument("file", type=Path)
    _common(p)

    p = sub.add_parser("transition", help="derive the invariant table of records")
    p.add_argument("files", type=Path, nargs="+")
    p.add_argument("--table", action="store_true", help="emit the invariant table CSV")
    _common(p)

    p = sub.add_parser("simplicity", help="decide simplicity of a transition record")
    p.add_argument("file", type=Path)
    _common(p)

    p = sub.add_parser("split-verify", help="verify a record's splitting-family witness")
    p.add_argument("file", type=Path)
    _common(p)

    p = sub.add_parser("web", help="work with a web graph file")
    p.add_argument("action", choices=("build", "validate", "path", "export"))
    p.add_argument("file", type=Path)
    p.add_argument("args", nargs="*", help="path endpoints for the path action")
    _common(p)
    return parser


def _cmd_analyze(opts) -> int:
    surface = load_hypersurface(opts.file.read_text())
    report = analyze_singular_locus(surface, seed=opts.seed, budget=opts.budget)
    if opts.csv:
        print(CSV_HEADER)
        print(report.to_csv_row())
    else:
        print(report.to_text())
    return 0


def _cmd_milnor(opts) -> int:
    model = load_local_model(opts.file.read_text())
    invariants = local_invariants(model, budget=opts.budget)
    print(invariants.to_text(model.name))
    return 0


def _cmd_transition(opts) -> int:
    records = [load_transition_record(f.read_text()) for f in opts.files]
    tables = [compute_table(r) for r in records]
    if opts.table or opts.csv:
        sys.stdout.write(table_csv(tables))
        return 0
    for record, table in zip(records, tables):
        print(f"record: {record.name} ({record.type_tag})")
        print(
            f"varieties: {table.resolution.name} -> {table.singular.name}"
            f" ~> {table.smoothing.name}"
        )
        sys.stdout.write(table_csv([table]))
        lam = dim_image_lambda(record)
        if lam is not None:
            print(f"dim im lambda: {lam}")
        for finding in consistency_check(record, table):
            print(str(finding))
    return 0


def _cmd_simplicity(opts) -> int:
    record = load_transition_record(opts.file.read_text())
    witness_verified = None
    if record.witness is not None:
        witness_verified = verify_splitting_family(
            record.witness, seed=opts.seed, budget=opts.budget
        ).verified
    print(str(decide_simplicity(record, witness_verified)))
    return 0


def _cmd_split_verify(opts) -> int:
    record = load_transition_record(opts.file.read_text())
    if record.witness is None:
        raise DomainError(f"record {record.name!r} carries no splitting-family witness")
    verification = verify_splitting_family(
        record.witness, seed=opts.seed, budget=opts.budget
    )
    count = record.singular_data.count if record.singular_data else None
    print(verification.to_text(singular_count=count))
    return 0


def _cmd_web(opts) -> int:
    graph = load_web_graph(opts.file.read_text(), base_dir=opts.file.parent)
    if opts.action == "build":
        validated = graph.validated()
        errors = [f for f in validated.validation_state if f.severity == "ERROR"]
        if errors:
            for f in errors:
                print(str(f), file=sys.stderr)
            return 1
        sys.stdout.write(serialize_web_graph(validated))
        return 0
    if opts.action == "validate":
        findings = graph.validated().validation_state
        for finding in findings:
            print(str(finding))
        errors = [f for f in findings if f.severity == "ERROR"]
        print(f"nodes: {len(graph.nodes)}, arrows: {len(graph.arrows)}, "
              f"errors: {len(errors)}")
        return 1 if errors else 0
    if opts.action == "path":
        if len(opts.args) != 2:
            raise DomainError("web path needs two node ids")
        route = graph.path(*opts.args)
        if route is None:
            print("no path")
            return 1
        print(" ".join(route) if route else "(already there)")
        return 0
    # export
    if opts.csv and not opts.dot:
        sys.stdout.write(export_csv(graph))
    else:
        sys.stdout.write(export_dot(graph))
    return 0


_DISPATCH = {
    "analyze": _cmd_analyze,
    "milnor": _cmd_milnor,
    "transition": _cmd_transition,
    "simplicity": _cmd_simplicity,
    "split-verify": _cmd_split_verify,
    "web": _cmd_web,
}


def main(argv=None) -> int:
    parser = build_parser()
    opts = parser.parse_args(argv)
    try:
        return _DISPATCH[opts.command](opts)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
