"""Data-flow edges: closest reaching definition per backward path.

An edge d -> u exists when u uses a variable that d defines and some
backward control-flow path from u reaches d without crossing another
definition of that variable; an instruction that both defines and uses a
variable gets a self edge. The search below walks cfPrev breadth-first
and stops expanding at defining nodes, which yields exactly the
closest-definition-per-simple-path relation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .controlflow import EdgeTable, flow_instructions
from .defuse import DefUseAttr
from .model import FlowGraph


@dataclass(frozen=True)
class UndefinedUseWarning:
    var: int  # variable node id
    node: int  # flow instruction using it

    def message(self, graph: FlowGraph) -> str:
        return (
            f"no reaching definition for '{graph.node(self.var).txt}'"
            f" at '{graph.node(self.node).txt}'"
        )


@dataclass
class DfEdgeTable:
    df_next: dict[int, list[int]] = field(default_factory=dict)
    warnings: list[UndefinedUseWarning] = field(default_factory=list)

    def add(self, src: int, dst: int) -> None:
        targets = self.df_next.setdefault(src, [])
        if dst not in targets:
            targets.append(dst)

    def edges(self) -> list[tuple[int, int]]:
        """(src, dst) pairs, sources ascending, targets in insertion order."""
        return [(src, dst) for src in sorted(self.df_next) for dst in self.df_next[src]]


def all_previous(nid: int, cf_prev: dict[int, list[int]]) -> list[int]:
    """Every instruction backward-reachable from nid, nearest first.

    Breadth-first over cfPrev: each node appears once, nid itself never,
    and a visited set keeps loops from recursing.
    """
    seen = {nid}
    out: list[int] = []
    queue = deque(cf_prev.get(nid, []))
    while queue:
        cur = queue.popleft()
        if cur in seen:
            continue
        seen.add(cur)
        out.append(cur)
        queue.extend(cf_prev.get(cur, []))
    return out


def compute_data_flow(graph: FlowGraph, cf: EdgeTable, du: DefUseAttr) -> DfEdgeTable:
    table = DfEdgeTable()
    def_sets = {nid: set(du.def_of(nid)) for nid in du.defs}
    warned: set[tuple[int, int]] = set()

    def warn(var: int, node: int) -> None:
        if (var, node) not in warned:
            warned.add((var, node))
            table.warnings.append(UndefinedUseWarning(var, node))

    for u in flow_instructions(graph):
        for v in du.use_of(u):
            if v in def_sets.get(u, ()):
                table.add(u, u)
            preds = cf.cf_prev.get(u, [])
            if not preds and v not in def_sets.get(u, ()):
                warn(v, u)
            seen = {u}
            queue = deque(preds)
            while queue:
                p = queue.popleft()
                if p in seen:
                    continue
                seen.add(p)
                if v in def_sets.get(p, ()):
                    table.add(p, u)  # definitions end this path's search
                    continue
                nxt = cf.cf_prev.get(p, [])
                if not nxt:
                    warn(v, u)
                queue.extend(nxt)
    return table
