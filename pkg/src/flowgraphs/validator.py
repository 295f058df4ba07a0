"""The `.validate` assertion DSL: parser, checker, and generator.

A specification names required links by node label:

    validate example
    // control-flow assertions first, then data-flow assertions
    cfNext : "m()" --> "int a = 1;"
    dfNext : "int a = 1;" --> "return a;"

Checking reports two kinds of findings: a *false link* is a graph edge
whose label pair no assertion covers, a *missing link* is an assertion
no connected node pair realizes. Matching is exact string equality on
labels; with duplicated labels an assertion holds if any matching pair
is connected.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .controlflow import EdgeTable
from .dataflow import DfEdgeTable
from .errors import SourcePosError
from .model import FlowGraph


class ValidateSyntaxError(SourcePosError):
    pass


class OrderError(ValidateSyntaxError):
    """A cfNext assertion appeared after a dfNext assertion."""


@dataclass(frozen=True)
class LinkAssertion:
    left: str
    right: str


@dataclass
class ValidationSpec:
    name: str
    cf_links: list[LinkAssertion] = field(default_factory=list)
    df_links: list[LinkAssertion] = field(default_factory=list)


@dataclass
class ValidationReport:
    false_cf: list[tuple[str, str]] = field(default_factory=list)
    false_df: list[tuple[str, str]] = field(default_factory=list)
    missing_cf: list[tuple[str, str]] = field(default_factory=list)
    missing_df: list[tuple[str, str]] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not (self.false_cf or self.false_df or self.missing_cf or self.missing_df)

    def lines(self) -> list[str]:
        out = []
        for left, right in self.false_cf:
            out.append(f"Control false link: {left} ==> {right}")
        for left, right in self.false_df:
            out.append(f"Data false link: {left} ==> {right}")
        for left, right in self.missing_cf:
            out.append(f"Control missing link: {left} ==> {right}")
        for left, right in self.missing_df:
            out.append(f"Data missing link: {left} ==> {right}")
        return out


def _scan_string(text: str, i: int, line: int, col: int) -> tuple[str, int, int]:
    """Scan a double-quoted label starting at text[i] == '"'."""
    out = []
    j = i + 1
    c = col + 1
    while j < len(text):
        ch = text[j]
        if ch == '"':
            return "".join(out), j + 1, c + 1
        if ch == "\n":
            break
        if ch == "\\":
            if j + 1 < len(text) and text[j + 1] in ('"', "\\"):
                out.append(text[j + 1])
                j += 2
                c += 2
                continue
            raise ValidateSyntaxError("invalid escape in label", line, c)
        out.append(ch)
        j += 1
        c += 1
    raise ValidateSyntaxError("unterminated label string", line, col)


def _tokenize_spec(text: str) -> list[tuple[str, str, int, int]]:
    """(kind, value, line, col) tuples; kinds: ident, string, ':', '-->'."""
    tokens = []
    i, line, line_start = 0, 1, 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            i += 1
            line_start = i
            continue
        if ch in " \t\r":
            i += 1
            continue
        col = i - line_start + 1
        if text.startswith("//", i):
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if ch == '"':
            value, j, _ = _scan_string(text, i, line, col)
            tokens.append(("string", value, line, col))
            i = j
            continue
        if text.startswith("-->", i):
            tokens.append(("-->", "-->", line, col))
            i += 3
            continue
        if ch == ":":
            tokens.append((":", ":", line, col))
            i += 1
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j], line, col))
            i = j
            continue
        raise ValidateSyntaxError(f"unexpected character {ch!r}", line, col)
    return tokens


def parse_spec(text: str) -> ValidationSpec:
    """Parse a `.validate` document.

    Raises ValidateSyntaxError on malformed input and OrderError when a
    cfNext assertion follows a dfNext assertion.
    """
    tokens = _tokenize_spec(text)
    pos = 0

    def take(kind: str, what: str) -> tuple[str, str, int, int]:
        nonlocal pos
        if pos >= len(tokens) or tokens[pos][0] != kind:
            if pos < len(tokens):
                _, value, line, col = tokens[pos]
                raise ValidateSyntaxError(f"expected {what}, found {value!r}", line, col)
            last = tokens[-1] if tokens else ("", "", 1, 1)
            raise ValidateSyntaxError(f"expected {what}, found end of input", last[2], last[3])
        tok = tokens[pos]
        pos += 1
        return tok

    kw = take("ident", "'validate'")
    if kw[1] != "validate":
        raise ValidateSyntaxError(f"expected 'validate', found {kw[1]!r}", kw[2], kw[3])
    spec = ValidationSpec(name=take("ident", "a specification name")[1])

    seen_df = False
    while pos < len(tokens):
        head = take("ident", "'cfNext' or 'dfNext'")
        if head[1] not in ("cfNext", "dfNext"):
            raise ValidateSyntaxError(
                f"expected 'cfNext' or 'dfNext', found {head[1]!r}", head[2], head[3]
            )
        if head[1] == "cfNext" and seen_df:
            raise OrderError(
                "cfNext assertions must precede dfNext assertions", head[2], head[3]
            )
        take(":", "':'")
        left = take("string", "a quoted label")[1]
        take("-->", "'-->'")
        right = take("string", "a quoted label")[1]
        if head[1] == "cfNext":
            spec.cf_links.append(LinkAssertion(left, right))
        else:
            seen_df = True
            spec.df_links.append(LinkAssertion(left, right))
    return spec


def check(
    spec: ValidationSpec, graph: FlowGraph, cf: EdgeTable, df: DfEdgeTable
) -> ValidationReport:
    """Compare a specification against computed flow edges.

    False links are reported in graph-edge iteration order, missing links
    in specification order. Never raises; findings go in the report.
    """
    report = ValidationReport()

    def labels(pairs: list[tuple[int, int]]) -> list[tuple[str, str]]:
        return [(graph.node(a).txt, graph.node(b).txt) for a, b in pairs]

    for edge_pairs, asserted, false_out, missing_out in (
        (labels(cf.edges()), spec.cf_links, report.false_cf, report.missing_cf),
        (labels(df.edges()), spec.df_links, report.false_df, report.missing_df),
    ):
        asserted_pairs = {(a.left, a.right) for a in asserted}
        present_pairs = set(edge_pairs)
        for pair in edge_pairs:
            if pair not in asserted_pairs:
                false_out.append(pair)
        for a in asserted:
            if (a.left, a.right) not in present_pairs:
                missing_out.append((a.left, a.right))
    return report


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_spec(graph: FlowGraph, cf: EdgeTable, df: DfEdgeTable, name: str | None = None) -> str:
    """Generate a specification the given graph satisfies with a clean report.

    Duplicate label pairs collapse to a single assertion line.
    """
    if name is None:
        txt = graph.node(graph.method).txt
        name = txt[:-2] if txt.endswith("()") else txt
    lines = [f"validate {name}"]
    for keyword, table in (("cfNext", cf), ("dfNext", df)):
        seen: set[tuple[str, str]] = set()
        for a, b in table.edges():
            pair = (graph.node(a).txt, graph.node(b).txt)
            if pair in seen:
                continue
            seen.add(pair)
            lines.append(f"{keyword} : {_quote(pair[0])} --> {_quote(pair[1])}")
    return "\n".join(lines) + "\n"
