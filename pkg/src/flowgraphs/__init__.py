"""Flow-graph models for a structured mini-Java subset.

Parses a single-method program, maps it onto a language-independent
flow-graph model, computes control-flow edges, per-instruction def/use
sets, and reaching-definition data-flow edges, and checks the result
against `.validate` assertion documents.
"""

from .controlflow import (
    EdgeTable,
    MissingEnclosingLoopError,
    compute_cf_edges,
    compute_cf_next,
    compute_successors,
    flow_instructions,
)
from .dataflow import DfEdgeTable, all_previous, compute_data_flow
from .defuse import DefUseAttr, compute_def_use, expr_reads_writes
from .errors import FlowgraphsError
from .minijava import (
    ParseError,
    UnresolvedLabelError,
    UnresolvedVariableError,
    parse_program,
    resolve,
)
from .model import FlowGraph, NodeKind, TraceMap, build_flowgraph, collect_vars
from .pipeline import Analysis, analyze
from .textgen import compute_text, render_method, text_of
from .validator import (
    OrderError,
    ValidateSyntaxError,
    ValidationReport,
    ValidationSpec,
    check,
    emit_spec,
    parse_spec,
)

__all__ = [
    "Analysis",
    "DefUseAttr",
    "DfEdgeTable",
    "EdgeTable",
    "FlowGraph",
    "FlowgraphsError",
    "MissingEnclosingLoopError",
    "NodeKind",
    "OrderError",
    "ParseError",
    "TraceMap",
    "UnresolvedLabelError",
    "UnresolvedVariableError",
    "ValidateSyntaxError",
    "ValidationReport",
    "ValidationSpec",
    "all_previous",
    "analyze",
    "build_flowgraph",
    "check",
    "collect_vars",
    "compute_cf_edges",
    "compute_cf_next",
    "compute_data_flow",
    "compute_def_use",
    "compute_successors",
    "compute_text",
    "emit_spec",
    "expr_reads_writes",
    "flow_instructions",
    "parse_program",
    "parse_spec",
    "render_method",
    "resolve",
    "text_of",
]

__version__ = "0.1.0"
