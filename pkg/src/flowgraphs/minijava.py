"""Lexer, AST, and recursive-descent parser for the mini-Java subset.

The accepted language is a single method of the form

    int m(int a, int b) { ... }

whose body may contain local `int` declarations with initializer,
expression statements, `while`, `if`/`else`, `return`, labeled
statements, `break`/`continue` (optionally labeled), and nested blocks.
Expressions are flat n-ary chains per precedence level (equality,
relational, additive, multiplicative) over identifiers, decimal
integer literals, assignments, and the suffix `++`/`--` forms.

`parse_program` also runs a resolution pass that binds every identifier
use to its declaration and every jump label to an enclosing labeled
statement; `resolve` exposes the resulting binding map.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

from .errors import SourcePosError


class ParseError(SourcePosError):
    def __init__(self, message: str, line: int, column: int, expected: str | None = None):
        super().__init__(message, line, column)
        self.expected = expected


class UnresolvedVariableError(SourcePosError):
    pass


class UnresolvedLabelError(SourcePosError):
    pass


@dataclass(frozen=True)
class Pos:
    line: int
    col: int


class Op(enum.Enum):
    ASSIGN = "="
    MUL = "*"
    DIV = "/"
    ADD = "+"
    SUB = "-"
    EQ = "=="
    GT = ">"
    LT = "<"
    INC = "++"
    DEC = "--"


class ChainKind(enum.Enum):
    ADDITIVE = "additive"
    MULTIPLICATIVE = "multiplicative"
    RELATIONAL = "relational"
    EQUALITY = "equality"


CHAIN_OPS = {
    ChainKind.ADDITIVE: (Op.ADD, Op.SUB),
    ChainKind.MULTIPLICATIVE: (Op.MUL, Op.DIV),
    ChainKind.RELATIONAL: (Op.LT, Op.GT),
    ChainKind.EQUALITY: (Op.EQ,),
}


# AST nodes use identity equality/hash so they can key attribute maps;
# structural comparison goes through repr (positions are excluded).

@dataclass(eq=False)
class Node:
    pass


@dataclass(eq=False)
class Param(Node):
    name: str
    pos: Pos | None = field(default=None, repr=False)


@dataclass(eq=False)
class Method(Node):
    name: str
    params: list[Param]
    body: list[Statement]
    pos: Pos | None = field(default=None, repr=False)


@dataclass(eq=False)
class Statement(Node):
    pass


@dataclass(eq=False)
class LocalVarDecl(Statement):
    name: str
    init: Expression
    pos: Pos | None = field(default=None, repr=False)


@dataclass(eq=False)
class ExprStmt(Statement):
    expr: Expression
    pos: Pos | None = field(default=None, repr=False)


@dataclass(eq=False)
class While(Statement):
    cond: Expression
    body: Statement
    pos: Pos | None = field(default=None, repr=False)


@dataclass(eq=False)
class If(Statement):
    cond: Expression
    then: Statement
    orelse: Statement | None
    pos: Pos | None = field(default=None, repr=False)


@dataclass(eq=False)
class Return(Statement):
    value: Expression | None
    pos: Pos | None = field(default=None, repr=False)


@dataclass(eq=False)
class Break(Statement):
    label: str | None
    pos: Pos | None = field(default=None, repr=False)


@dataclass(eq=False)
class Continue(Statement):
    label: str | None
    pos: Pos | None = field(default=None, repr=False)


@dataclass(eq=False)
class Labeled(Statement):
    name: str
    stmt: Statement
    pos: Pos | None = field(default=None, repr=False)


@dataclass(eq=False)
class Block(Statement):
    stmts: list[Statement]
    pos: Pos | None = field(default=None, repr=False)


@dataclass(eq=False)
class Expression(Node):
    pass


@dataclass(eq=False)
class Assign(Expression):
    target: str
    value: Expression
    pos: Pos | None = field(default=None, repr=False)


@dataclass(eq=False)
class SuffixUnary(Expression):
    target: str
    op: Op
    pos: Pos | None = field(default=None, repr=False)


@dataclass(eq=False)
class Chain(Expression):
    kind: ChainKind
    children: list[Expression]
    operators: list[Op]
    pos: Pos | None = field(default=None, repr=False)


@dataclass(eq=False)
class IdentRef(Expression):
    name: str
    pos: Pos | None = field(default=None, repr=False)


@dataclass(eq=False)
class IntLit(Expression):
    value: int
    pos: Pos | None = field(default=None, repr=False)


KEYWORDS = {"int", "while", "if", "else", "return", "break", "continue"}

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>[ \t\r]+)
    | (?P<nl>\n)
    | (?P<comment>//[^\n]*)
    | (?P<num>\d+)
    | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
    | (?P<op>\+\+|--|==|[-+*/<>=(){};:,])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # 'num', 'ident', a keyword, an operator/punctuation text, or 'eof'
    text: str
    line: int
    col: int

    @property
    def pos(self) -> Pos:
        return Pos(self.line, self.col)


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    line, line_start = 1, 0
    i = 0
    while i < len(source):
        m = _TOKEN_RE.match(source, i)
        if m is None:
            raise ParseError(f"unexpected character {source[i]!r}", line, i - line_start + 1)
        i = m.end()
        if m.lastgroup in ("ws", "comment"):
            continue
        if m.lastgroup == "nl":
            line += 1
            line_start = i
            continue
        text = m.group()
        col = m.start() - line_start + 1
        if m.lastgroup == "num":
            kind = "num"
        elif m.lastgroup == "ident":
            kind = text if text in KEYWORDS else "ident"
        else:
            kind = text
        tokens.append(Token(kind, text, line, col))
    tokens.append(Token("eof", "", line, len(source) - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def at(self, kind: str, ahead: int = 0) -> bool:
        return self.peek(ahead).kind == kind

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            found = tok.text if tok.kind != "eof" else "end of input"
            raise ParseError(
                f"expected {kind!r}, found {found!r}", tok.line, tok.col, expected=kind
            )
        return self.advance()

    # ---- declarations ----

    def parse_method(self) -> Method:
        start = self.expect("int")
        name = self.expect("ident").text
        self.expect("(")
        params: list[Param] = []
        if not self.at(")"):
            while True:
                self.expect("int")
                ptok = self.expect("ident")
                if any(p.name == ptok.text for p in params):
                    raise ParseError(f"duplicate parameter {ptok.text!r}", ptok.line, ptok.col)
                params.append(Param(ptok.text, pos=ptok.pos))
                if not self.at(","):
                    break
                self.advance()
        self.expect(")")
        body = self.parse_block().stmts
        self.expect("eof")
        return Method(name, params, body, pos=start.pos)

    # ---- statements ----

    def parse_block(self) -> Block:
        start = self.expect("{")
        stmts = []
        while not self.at("}"):
            if self.at("eof"):
                raise ParseError("expected '}', found end of input",
                                 self.peek().line, self.peek().col, expected="}")
            stmts.append(self.parse_statement())
        self.expect("}")
        return Block(stmts, pos=start.pos)

    def parse_statement(self) -> Statement:
        tok = self.peek()
        if tok.kind == "{":
            return self.parse_block()
        if tok.kind == "while":
            self.advance()
            self.expect("(")
            cond = self.parse_condition()
            self.expect(")")
            return While(cond, self.parse_statement(), pos=tok.pos)
        if tok.kind == "if":
            self.advance()
            self.expect("(")
            cond = self.parse_condition()
            self.expect(")")
            then = self.parse_statement()
            orelse = None
            if self.at("else"):
                self.advance()
                orelse = self.parse_statement()
            return If(cond, then, orelse, pos=tok.pos)
        if tok.kind == "return":
            self.advance()
            value = None if self.at(";") else self.parse_condition()
            self.expect(";")
            return Return(value, pos=tok.pos)
        if tok.kind == "break":
            self.advance()
            label = self.advance().text if self.at("ident") else None
            self.expect(";")
            return Break(label, pos=tok.pos)
        if tok.kind == "continue":
            self.advance()
            label = self.advance().text if self.at("ident") else None
            self.expect(";")
            return Continue(label, pos=tok.pos)
        if tok.kind == "int":
            self.advance()
            name = self.expect("ident").text
            self.expect("=")
            init = self.parse_expression()
            self.expect(";")
            return LocalVarDecl(name, init, pos=tok.pos)
        if tok.kind == "ident" and self.at(":", 1):
            self.advance()
            self.advance()
            return Labeled(tok.text, self.parse_statement(), pos=tok.pos)
        expr = self.parse_expression()
        self.expect(";")
        return ExprStmt(expr, pos=tok.pos)

    # ---- expressions ----
    # Assignments are legal only at statement/initializer top level, so
    # parenthesized groups and chain operands go through parse_condition.

    def parse_expression(self) -> Expression:
        if self.at("ident") and self.at("=", 1):
            tok = self.advance()
            self.advance()
            return Assign(tok.text, self.parse_expression(), pos=tok.pos)
        return self.parse_condition()

    def parse_condition(self) -> Expression:
        return self._parse_chain(ChainKind.EQUALITY)

    _NEXT_LEVEL = {
        ChainKind.EQUALITY: ChainKind.RELATIONAL,
        ChainKind.RELATIONAL: ChainKind.ADDITIVE,
        ChainKind.ADDITIVE: ChainKind.MULTIPLICATIVE,
    }

    def _parse_chain(self, kind: ChainKind) -> Expression:
        inner = self._NEXT_LEVEL.get(kind)
        parse_operand = self.parse_unary if inner is None else (lambda: self._parse_chain(inner))
        first = parse_operand()
        ops_here = {op.value: op for op in CHAIN_OPS[kind]}
        children, operators = [first], []
        while self.peek().kind in ops_here:
            operators.append(ops_here[self.advance().kind])
            children.append(parse_operand())
        if not operators:
            return first
        return Chain(kind, children, operators, pos=None)

    def parse_unary(self) -> Expression:
        expr = self.parse_primary()
        if self.at("++") or self.at("--"):
            tok = self.advance()
            if not isinstance(expr, IdentRef):
                raise ParseError(f"'{tok.text}' target must be a variable", tok.line, tok.col)
            return SuffixUnary(expr.name, Op.INC if tok.text == "++" else Op.DEC, pos=expr.pos)
        return expr

    def parse_primary(self) -> Expression:
        tok = self.peek()
        if tok.kind == "ident":
            self.advance()
            return IdentRef(tok.text, pos=tok.pos)
        if tok.kind == "num":
            self.advance()
            return IntLit(int(tok.text), pos=tok.pos)
        if tok.kind == "(":
            # Grouping parentheses only; they leave no trace in the AST.
            self.advance()
            expr = self.parse_condition()
            self.expect(")")
            return expr
        if tok.kind in ("++", "--"):
            raise ParseError(f"prefix '{tok.text}' is not supported", tok.line, tok.col)
        found = tok.text if tok.kind != "eof" else "end of input"
        raise ParseError(f"expected an expression, found {found!r}", tok.line, tok.col)


def resolve(method: Method) -> dict[Node, Node]:
    """Bind identifier uses to their declarations.

    Returns a map from every IdentRef, Assign, and SuffixUnary node to the
    Param or LocalVarDecl that declares the referenced variable, using
    innermost-declaration-wins scoping. Raises UnresolvedVariableError or
    UnresolvedLabelError when a name cannot be bound.
    """
    bindings: dict[Node, Node] = {}
    scopes: list[dict[str, Node]] = [{p.name: p for p in method.params}]
    labels: list[str] = []

    def lookup(name: str, pos: Pos | None) -> Node:
        for scope in reversed(scopes):
            if name in scope:
                return scope[name]
        where = pos or Pos(0, 0)
        raise UnresolvedVariableError(f"undeclared variable {name!r}", where.line, where.col)

    def walk_expr(e: Expression) -> None:
        if isinstance(e, Assign):
            walk_expr(e.value)
            bindings[e] = lookup(e.target, e.pos)
        elif isinstance(e, SuffixUnary):
            bindings[e] = lookup(e.target, e.pos)
        elif isinstance(e, Chain):
            for child in e.children:
                walk_expr(child)
        elif isinstance(e, IdentRef):
            bindings[e] = lookup(e.name, e.pos)

    def walk_stmt(s: Statement) -> None:
        if isinstance(s, LocalVarDecl):
            walk_expr(s.init)  # the declared name is not in scope in its own initializer
            scopes[-1][s.name] = s
        elif isinstance(s, ExprStmt):
            walk_expr(s.expr)
        elif isinstance(s, While):
            walk_expr(s.cond)
            scopes.append({})
            walk_stmt(s.body)
            scopes.pop()
        elif isinstance(s, If):
            walk_expr(s.cond)
            for branch in (s.then, s.orelse):
                if branch is not None:
                    scopes.append({})
                    walk_stmt(branch)
                    scopes.pop()
        elif isinstance(s, Return):
            if s.value is not None:
                walk_expr(s.value)
        elif isinstance(s, (Break, Continue)):
            if s.label is not None and s.label not in labels:
                where = s.pos or Pos(0, 0)
                raise UnresolvedLabelError(
                    f"no enclosing label {s.label!r}", where.line, where.col
                )
        elif isinstance(s, Labeled):
            labels.append(s.name)
            walk_stmt(s.stmt)
            labels.pop()
        elif isinstance(s, Block):
            scopes.append({})
            for child in s.stmts:
                walk_stmt(child)
            scopes.pop()

    for stmt in method.body:
        walk_stmt(stmt)
    return bindings


def parse_program(source: str) -> Method:
    """Parse mini-Java source text into a resolved Method AST.

    Raises ParseError on malformed input and UnresolvedVariableError /
    UnresolvedLabelError when the post-parse resolution pass fails.
    """
    method = _Parser(tokenize(source)).parse_method()
    resolve(method)
    return method
