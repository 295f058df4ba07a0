"""Command-line driver.

    fg build    <file.mj>                 containment listing
    fg cfg      <file.mj> [--dot|--json]  control-flow edges
    fg dfg      <file.mj> [--dot|--json]  adds def/use and data-flow edges
    fg validate <file.mj> --spec <file.validate> [--emit] [--json]

Every command accepts `-` to read the program from stdin. Exit codes:
0 success (validate: clean report), 1 validation findings, 2 bad input.
Set FG_COLOR=1 to colorize validation findings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .controlflow import flow_instructions
from .errors import FlowgraphsError
from .model import FlowGraph, NodeKind
from .pipeline import Analysis, analyze
from .validator import check, emit_spec, parse_spec

_RED = "\x1b[31m"
_RESET = "\x1b[0m"


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _build_listing(graph: FlowGraph) -> list[str]:
    lines: list[str] = []

    def emit(nid: int, depth: int) -> None:
        node = graph.node(nid)
        lines.append(f'{"  " * depth}{node.kind} "{node.txt}"')
        if node.kind is NodeKind.METHOD:
            for vid in node.vars:
                emit(vid, depth + 1)
            for sid in node.stmts:
                emit(sid, depth + 1)
            emit(node.exit, depth + 1)
            return
        for link in (node.expr, node.then, node.orelse, node.stmt, node.body):
            if link is not None:
                emit(link, depth + 1)
        for sid in node.stmts:
            emit(sid, depth + 1)

    emit(graph.method, 0)
    return lines


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def _dot_listing(graph: FlowGraph, cf_edges, df_edges) -> list[str]:
    # Node ids get a #k occurrence suffix; labels stay as-is.
    ids: dict[int, str] = {}
    counts: dict[str, int] = {}
    for nid in flow_instructions(graph):
        txt = graph.node(nid).txt
        k = counts.get(txt, 0)
        counts[txt] = k + 1
        ids[nid] = f"{txt}#{k}"
    lines = ["digraph flowgraph {"]
    for nid, node_id in ids.items():
        label = _dot_escape(graph.node(nid).txt)
        lines.append(f'  "{_dot_escape(node_id)}" [label="{label}"];')
    for a, b in cf_edges:
        lines.append(f'  "{_dot_escape(ids[a])}" -> "{_dot_escape(ids[b])}";')
    for a, b in df_edges:
        lines.append(f'  "{_dot_escape(ids[a])}" -> "{_dot_escape(ids[b])}" [style=dashed];')
    lines.append("}")
    return lines


def _json_doc(analysis: Analysis, with_df: bool) -> dict:
    graph = analysis.graph
    doc = {
        "nodes": [{"id": n.id, "kind": str(n.kind), "txt": n.txt} for n in graph.nodes],
        "cfNext": [[a, b] for a, b in analysis.cf.edges()],
        "dfNext": [[a, b] for a, b in analysis.df.edges()] if with_df else [],
        "def": {},
        "use": {},
    }
    if with_df:
        doc["def"] = {str(n): analysis.def_use.defs[n] for n in sorted(analysis.def_use.defs)}
        doc["use"] = {str(n): analysis.def_use.uses[n] for n in sorted(analysis.def_use.uses)}
    return doc


def _txt_pair(graph: FlowGraph, a: int, b: int) -> str:
    return f"{graph.node(a).txt} --> {graph.node(b).txt}"


def _print_warnings(analysis: Analysis) -> None:
    for warning in analysis.df.warnings:
        print(f"warning: {warning.message(analysis.graph)}", file=sys.stderr)


def _cmd_build(analysis: Analysis, args) -> int:
    print("\n".join(_build_listing(analysis.graph)))
    return 0


def _cmd_cfg(analysis: Analysis, args) -> int:
    graph = analysis.graph
    if args.dot:
        print("\n".join(_dot_listing(graph, analysis.cf.edges(), [])))
    elif args.json:
        print(json.dumps(_json_doc(analysis, with_df=False)))
    else:
        for a, b in analysis.cf.edges():
            print(_txt_pair(graph, a, b))
    return 0


def _cmd_dfg(analysis: Analysis, args) -> int:
    graph = analysis.graph
    _print_warnings(analysis)
    if args.dot:
        print("\n".join(_dot_listing(graph, analysis.cf.edges(), analysis.df.edges())))
    elif args.json:
        print(json.dumps(_json_doc(analysis, with_df=True)))
    else:
        for a, b in analysis.cf.edges():
            print(f"cfNext: {_txt_pair(graph, a, b)}")
        for a, b in analysis.df.edges():
            print(f"dfNext: {_txt_pair(graph, a, b)}")
        du = analysis.def_use
        for nid in sorted(du.defs):
            for vid in du.defs[nid]:
                print(f"def: {graph.node(nid).txt} --> {graph.node(vid).txt}")
        for nid in sorted(du.uses):
            for vid in du.uses[nid]:
                print(f"use: {graph.node(nid).txt} --> {graph.node(vid).txt}")
    return 0


def _cmd_validate(analysis: Analysis, args) -> int:
    if args.emit:
        sys.stdout.write(emit_spec(analysis.graph, analysis.cf, analysis.df))
        return 0
    spec = parse_spec(_read_input(args.spec))
    _print_warnings(analysis)
    report = check(spec, analysis.graph, analysis.cf, analysis.df)
    color = os.environ.get("FG_COLOR") == "1"
    for line in report.lines():
        print(f"{_RED}{line}{_RESET}" if color else line)
    if args.json:
        print(json.dumps({
            "false_cf": [list(p) for p in report.false_cf],
            "false_df": [list(p) for p in report.false_df],
            "missing_cf": [list(p) for p in report.missing_cf],
            "missing_df": [list(p) for p in report.missing_df],
            "warnings": [w.message(analysis.graph) for w in analysis.df.warnings],
        }))
    return 0 if report.clean else 1


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fg", description="Flow-graph analysis for mini-Java programs"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, dot_json: bool = False):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("file", help="input .mj program, or - for stdin")
        cmd.set_defaults(func=func)
        if dot_json:
            fmt = cmd.add_mutually_exclusive_group()
            fmt.add_argument("--dot", action="store_true", help="GraphViz output")
            fmt.add_argument("--json", action="store_true", help="JSON output")
        return cmd

    add("build", _cmd_build, "print the flow-graph containment structure")
    add("cfg", _cmd_cfg, "print control-flow edges", dot_json=True)
    add("dfg", _cmd_dfg, "print control-flow, def/use, and data-flow edges", dot_json=True)
    val = add("validate", _cmd_validate, "check a .validate specification")
    val.add_argument("--spec", help="specification file, or - for stdin")
    val.add_argument("--emit", action="store_true",
                     help="print a specification matching the graph instead of checking")
    val.add_argument("--json", action="store_true", help="also print the report as JSON")
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = _make_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.command == "validate" and not args.emit and not args.spec:
        print("fg: error: validate requires --spec (or --emit)", file=sys.stderr)
        return 2
    if args.command == "validate" and args.file == "-" and args.spec == "-":
        print("fg: error: program and spec cannot both come from stdin", file=sys.stderr)
        return 2
    try:
        analysis = analyze(_read_input(args.file))
        return args.func(analysis, args)
    except (FlowgraphsError, OSError, UnicodeDecodeError) as exc:
        print(f"fg: error: {exc}", file=sys.stderr)
        return 2
    except RecursionError:
        print("fg: error: program nesting is too deep to analyze", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
