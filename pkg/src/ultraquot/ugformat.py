"""Reader and writer for the line-oriented ``.ug`` ultragraph format.

::

    # EX1
    vertices u v w a
    edge e : u -> {v, w}
    edge h : w -> {v} * inf

Each line is blank, a comment, ``vertex <name>``, ``vertices <n1> <n2> ...``
or ``edge <id> : <source> -> { <v1>, ... } [* <int> | * inf]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import INF, Cardinal, Ultragraph, build_ultragraph, format_multiplicity

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_TOKEN = re.compile(rf"\s*(?:(?P<name>{_NAME})|(?P<int>\d+)|(?P<arrow>->)|(?P<punct>[:{{}},*]))")


class UgSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class VertexDecl:
    name: str
    line: int


@dataclass(frozen=True)
class EdgeDecl:
    id: str
    source: str
    range: tuple[str, ...]
    multiplicity: Cardinal
    line: int


@dataclass(frozen=True)
class UgSpec:
    """Parsed but not yet validated ``.ug`` description."""

    vertices: tuple[VertexDecl, ...] = field(default=())
    edges: tuple[EdgeDecl, ...] = field(default=())


def _tokenize(text: str, lineno: int) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise UgSyntaxError(f"unexpected character {text[col - 1]!r}", lineno, col)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return tokens


class _Cursor:
    def __init__(self, tokens, lineno, line_len):
        self.tokens = tokens
        self.i = 0
        self.lineno = lineno
        self.end_col = line_len + 1

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, kind, value=None, what=None):
        tok = self.peek()
        if tok is None or tok[0] != kind or (value is not None and tok[1] != value):
            col = tok[2] if tok else self.end_col
            found = repr(tok[1]) if tok else "end of line"
            raise UgSyntaxError(f"expected {what or value or kind}, found {found}", self.lineno, col)
        self.i += 1
        return tok

    def at(self, kind, value=None):
        tok = self.peek()
        return tok is not None and tok[0] == kind and (value is None or tok[1] == value)


def parse_ug(text: str) -> UgSpec:
    """Parse ``.ug`` source into declarations; raises :class:`UgSyntaxError`."""
    vertices: list[VertexDecl] = []
    edges: list[EdgeDecl] = []
    seen_v: dict[str, int] = {}
    seen_e: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = _tokenize(line, lineno)
        if not tokens:
            continue
        cur = _Cursor(tokens, lineno, len(line.rstrip()))
        kw = cur.take("name", what="'vertex', 'vertices' or 'edge'")
        if kw[1] in ("vertex", "vertices"):
            names = []
            while cur.peek() is not None:
                names.append(cur.take("name", what="vertex name"))
            if not names:
                cur.take("name", what="vertex name")
            if kw[1] == "vertex" and len(names) > 1:
                raise UgSyntaxError("'vertex' declares exactly one name", lineno, names[1][2])
            for _, name, col in names:
                if name in seen_v:
                    raise UgSyntaxError(
                        f"duplicate vertex {name!r} (first declared on line {seen_v[name]})", lineno, col
                    )
                seen_v[name] = lineno
                vertices.append(VertexDecl(name, lineno))
        elif kw[1] == "edge":
            _, eid, ecol = cur.take("name", what="edge name")
            if eid in seen_e:
                raise UgSyntaxError(f"duplicate edge {eid!r} (first declared on line {seen_e[eid]})", lineno, ecol)
            seen_e[eid] = lineno
            cur.take("punct", ":")
            src = cur.take("name", what="source vertex")[1]
            cur.take("arrow", "->")
            cur.take("punct", "{")
            rng: list[str] = []
            if not cur.at("punct", "}"):
                rng.append(cur.take("name", what="range vertex")[1])
                while cur.at("punct", ","):
                    cur.take("punct", ",")
                    rng.append(cur.take("name", what="range vertex")[1])
            cur.take("punct", "}", what="',' or '}'")
            mult: Cardinal = 1
            if cur.at("punct", "*"):
                cur.take("punct", "*")
                tok = cur.peek()
                if tok is not None and tok[0] == "name" and tok[1] == "inf":
                    cur.take("name")
                    mult = INF
                else:
                    kind, value, col = cur.take("int", what="multiplicity (integer or 'inf')")
                    mult = int(value)
                    if mult < 1:
                        raise UgSyntaxError("multiplicity must be at least 1", lineno, col)
            if cur.peek() is not None:
                tok = cur.peek()
                raise UgSyntaxError(f"unexpected {tok[1]!r} after edge declaration", lineno, tok[2])
            edges.append(EdgeDecl(eid, src, tuple(rng), mult, lineno))
        else:
            raise UgSyntaxError(f"unknown declaration {kw[1]!r}", lineno, kw[2])
    return UgSpec(tuple(vertices), tuple(edges))


def load_ug(text: str) -> Ultragraph:
    return build_ultragraph(parse_ug(text))


def read_ug(path) -> Ultragraph:
    with open(path, encoding="utf-8") as fh:
        return load_ug(fh.read())


def format_ug(g: Ultragraph) -> str:
    """Canonical ``.ug`` text for ``g``; ``load_ug(format_ug(g)) == g``."""
    lines = []
    if g.vertices:
        lines.append("vertices " + " ".join(g.vertices))
    for e in g.edges:
        rng = ", ".join(g.names(e.range))
        line = f"edge {e.id} : {g.vertices[e.source]} -> {{{rng}}}"
        if e.multiplicity != 1:
            line += f" * {format_multiplicity(e.multiplicity)}"
        lines.append(line)
    return "\n".join(lines) + "\n"
