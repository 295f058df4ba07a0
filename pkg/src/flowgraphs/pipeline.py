"""One-call orchestration of the full analysis pipeline."""

from __future__ import annotations

from dataclasses import dataclass

from . import minijava as mj
from .controlflow import EdgeTable, compute_cf_edges, compute_cf_next, compute_successors
from .dataflow import DfEdgeTable, compute_data_flow
from .defuse import DefUseAttr, compute_def_use
from .model import FlowGraph, TraceMap, build_flowgraph, collect_vars
from .textgen import compute_text


@dataclass
class Analysis:
    method: mj.Method
    text: dict[mj.Node, str]
    graph: FlowGraph
    trace: TraceMap
    var_map: dict[mj.Node, int]
    successors: dict[int, list[int]]
    cf_next: dict[int, int]
    cf: EdgeTable
    def_use: DefUseAttr
    df: DfEdgeTable


def analyze(source: str) -> Analysis:
    """Parse source text and run every stage of the pipeline."""
    method = mj.parse_program(source)
    bindings = mj.resolve(method)
    text = compute_text(method)
    graph, trace = build_flowgraph(method, text)
    var_map = collect_vars(method, graph, trace)
    successors = compute_successors(graph)
    cf_next = compute_cf_next(graph, successors)
    cf = compute_cf_edges(graph, successors, cf_next)
    def_use = compute_def_use(method, graph, trace, bindings, var_map)
    df = compute_data_flow(graph, cf, def_use)
    return Analysis(method, text, graph, trace, var_map,
                    successors, cf_next, cf, def_use, df)
