"""Synthesized text labels for AST nodes.

Every node that gets a flow-graph image (and every expression feeding
one) receives a display label, computed bottom-up. Structured statements
use fixed labels ("while", "if", "{...}", ...); simple statements and
expressions are serialized with one canonical spacing, so `a+1` and
`a + 1` in the source both label as "a + 1". These labels are the keys
the validation DSL matches on.
"""

from __future__ import annotations

from . import minijava as mj

OP_TEXT = {
    mj.Op.ASSIGN: " = ",
    mj.Op.MUL: " * ",
    mj.Op.ADD: " + ",
    mj.Op.DIV: " / ",
    mj.Op.SUB: " - ",
    mj.Op.EQ: " == ",
    mj.Op.GT: " > ",
    mj.Op.LT: " < ",
    mj.Op.INC: "++",
    mj.Op.DEC: "--",
}

EXIT_TEXT = "Exit"


def text_of(node: mj.Node, attr: dict[mj.Node, str] | None = None) -> str:
    """Label for one node, reusing `attr` as a memo when given."""
    if attr is None:
        attr = {}
    if node in attr:
        return attr[node]

    def text(n: mj.Node) -> str:
        return text_of(n, attr)

    if isinstance(node, mj.Method):
        out = node.name + "()"
    elif isinstance(node, mj.LocalVarDecl):
        out = "int " + node.name + " = " + text(node.init) + ";"
    elif isinstance(node, mj.ExprStmt):
        out = text(node.expr) + ";"
    elif isinstance(node, mj.While):
        out = "while"
    elif isinstance(node, mj.If):
        out = "if"
    elif isinstance(node, mj.Return):
        out = "return;" if node.value is None else "return " + text(node.value) + ";"
    elif isinstance(node, mj.Break):
        out = "break"
    elif isinstance(node, mj.Continue):
        out = "continue"
    elif isinstance(node, mj.Labeled):
        out = node.name + ":"
    elif isinstance(node, mj.Block):
        out = "{...}"
    elif isinstance(node, mj.Assign):
        out = node.target + " = " + text(node.value)
    elif isinstance(node, mj.SuffixUnary):
        out = node.target + OP_TEXT[node.op]
    elif isinstance(node, mj.Chain):
        out = text(node.children[0])
        for op, child in zip(node.operators, node.children[1:]):
            out += OP_TEXT[op] + text(child)
    elif isinstance(node, mj.IdentRef):
        out = node.name
    elif isinstance(node, mj.IntLit):
        out = str(node.value)
    else:
        raise TypeError(f"no text rule for {type(node).__name__}")
    attr[node] = out
    return out


def compute_text(method: mj.Method) -> dict[mj.Node, str]:
    """Total label map over the method, its statements, and expressions."""
    attr: dict[mj.Node, str] = {}
    text_of(method, attr)

    def walk_expr(e: mj.Expression) -> None:
        text_of(e, attr)
        if isinstance(e, mj.Assign):
            walk_expr(e.value)
        elif isinstance(e, mj.Chain):
            for child in e.children:
                walk_expr(child)

    def walk_stmt(s: mj.Statement) -> None:
        text_of(s, attr)
        if isinstance(s, mj.LocalVarDecl):
            walk_expr(s.init)
        elif isinstance(s, mj.ExprStmt):
            walk_expr(s.expr)
        elif isinstance(s, mj.While):
            walk_expr(s.cond)
            walk_stmt(s.body)
        elif isinstance(s, mj.If):
            walk_expr(s.cond)
            walk_stmt(s.then)
            if s.orelse is not None:
                walk_stmt(s.orelse)
        elif isinstance(s, mj.Return):
            if s.value is not None:
                walk_expr(s.value)
        elif isinstance(s, mj.Labeled):
            walk_stmt(s.stmt)
        elif isinstance(s, mj.Block):
            for child in s.stmts:
                walk_stmt(child)

    for stmt in method.body:
        walk_stmt(stmt)
    return attr


def render_method(method: mj.Method, attr: dict[mj.Node, str] | None = None) -> str:
    """Compose the AST back into parseable source text.

    Simple statements reuse their labels verbatim (they are complete
    statements); structured statements are rebuilt around their parts.
    Grouping parentheses are not reproduced, so the round trip is only
    structure-preserving for sources that never relied on them.
    """
    if attr is None:
        attr = compute_text(method)

    def stmt_src(s: mj.Statement) -> str:
        if isinstance(s, (mj.LocalVarDecl, mj.ExprStmt, mj.Return)):
            return attr[s]
        if isinstance(s, mj.While):
            return "while (" + attr[s.cond] + ") " + stmt_src(s.body)
        if isinstance(s, mj.If):
            out = "if (" + attr[s.cond] + ") " + stmt_src(s.then)
            if s.orelse is not None:
                out += " else " + stmt_src(s.orelse)
            return out
        if isinstance(s, mj.Break):
            return "break" + (" " + s.label if s.label else "") + ";"
        if isinstance(s, mj.Continue):
            return "continue" + (" " + s.label if s.label else "") + ";"
        if isinstance(s, mj.Labeled):
            return s.name + ": " + stmt_src(s.stmt)
        if isinstance(s, mj.Block):
            return "{ " + " ".join(stmt_src(c) for c in s.stmts) + " }"
        raise TypeError(f"no source rule for {type(s).__name__}")

    params = ", ".join("int " + p.name for p in method.params)
    body = " ".join(stmt_src(s) for s in method.body)
    return "int " + method.name + "(" + params + ") { " + body + " }"
