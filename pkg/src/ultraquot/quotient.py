"""Extended ultragraph, ∼-classes of vertex sets, and quotient ultragraphs.

Extended vertex sets reuse the base bit positions; the split vertex ``w'`` of
the ``k``-th vertex in ``B_H ∖ B`` sits at bit ``n + k``.  A class ``[A]`` is
stored by its canonical representative ``A ∖ h1``: two sets are equivalent
iff they differ only inside ``h1``, and split vertices never lie in ``h1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .core import INF, Cardinal, EdgeClass, Ultragraph, UltragraphError, bits
from .heredity import AdmissiblePair, breaking_vertices, is_admissible


@dataclass(frozen=True)
class ExtendedUltragraph:
    """``𝒢`` with each ``w ∈ B_H ∖ B`` split into ``w`` and ``w'``.

    ``graph`` is the extended ultragraph itself: same edge ids, sources moved
    to ``w'`` for the edges from ``w`` that land inside ``H``, and every range
    barred.
    """

    base: Ultragraph
    pair: AdmissiblePair
    split: tuple[int, ...]
    graph: Ultragraph

    @property
    def h1(self) -> int:
        return self.pair.h

    @cached_property
    def split_bit(self) -> dict[int, int]:
        """Base vertex index -> bit of its split copy."""
        n = self.base.n
        return {w: 1 << (n + k) for k, w in enumerate(self.split)}

    def bar(self, a: int) -> int:
        """``A`` together with ``w'`` for every split ``w`` in ``A``."""
        out = a
        for w, b in self.split_bit.items():
            if a >> w & 1:
                out |= b
        return out

    def s_prime(self, edge_id: str) -> int:
        return self.graph.edge(edge_id).source

    def r_prime(self, edge_id: str) -> int:
        return self.graph.edge(edge_id).range


def _prime(name: str) -> str:
    return name + "'"


def extend(g: Ultragraph, pair: AdmissiblePair) -> ExtendedUltragraph:
    if not is_admissible(g, pair):
        raise UltragraphError(f"pair {pair.describe(g)} is not admissible")
    h1 = pair.h
    split = tuple(bits(breaking_vertices(g, h1) & ~pair.b))
    n = g.n
    where = {w: n + k for k, w in enumerate(split)}
    names = g.vertices + tuple(_prime(g.vertices[w]) for w in split)
    edges = []
    for e in g.edges:
        src = e.source
        if src in where and not e.range & ~h1:
            src = where[src]
        rng = e.range
        for w, pos in where.items():
            if e.range >> w & 1:
                rng |= 1 << pos
        edges.append(EdgeClass(e.id, src, rng, e.multiplicity))
    return ExtendedUltragraph(g, pair, split, Ultragraph(names, tuple(edges)))


def bar(ext: ExtendedUltragraph, a: int) -> int:
    return ext.bar(a)


@dataclass(frozen=True)
class ClassSet:
    """The ∼-class of an extended vertex set, held by its canonical representative."""

    mask: int
    context: ExtendedUltragraph

    def __post_init__(self) -> None:
        if self.mask & self.context.h1:
            raise ValueError("class representative must avoid h1")

    def _same(self, other: "ClassSet") -> None:
        if not isinstance(other, ClassSet):
            raise TypeError(f"expected a ClassSet, got {type(other).__name__}")
        if other.context is not self.context and other.context != self.context:
            raise ValueError("class sets come from different quotients")

    def __or__(self, other: "ClassSet") -> "ClassSet":
        self._same(other)
        return ClassSet(self.mask | other.mask, self.context)

    def __and__(self, other: "ClassSet") -> "ClassSet":
        self._same(other)
        return ClassSet(self.mask & other.mask, self.context)

    def __sub__(self, other: "ClassSet") -> "ClassSet":
        self._same(other)
        return ClassSet(self.mask & ~other.mask, self.context)

    def issubset(self, other: "ClassSet") -> bool:
        self._same(other)
        return self.mask & other.mask == self.mask

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    def names(self) -> list[str]:
        return self.context.graph.names(self.mask)

    def __str__(self) -> str:
        return "[" + ",".join(self.names()) + "]"


def class_of(ext: ExtendedUltragraph, a: int) -> ClassSet:
    if a >> ext.graph.n:
        raise UltragraphError("set contains vertices outside the extended ultragraph")
    return ClassSet(a & ~ext.h1, ext)


_CLASS_OPS = {
    "union": lambda x, y: x | y,
    "inter": lambda x, y: x & y,
    "diff": lambda x, y: x - y,
    "subseteq": lambda x, y: x.issubset(y),
    "eq": lambda x, y: (x._same(y), x.mask == y.mask)[1],
}


def class_op(op: str, x: ClassSet, y: ClassSet):
    """Apply ``union``, ``inter``, ``diff``, ``subseteq`` or ``eq`` to two classes."""
    try:
        fn = _CLASS_OPS[op]
    except KeyError:
        raise ValueError(f"unknown class operation {op!r}") from None
    return fn(x, y)


@dataclass(frozen=True)
class QuotientEdge:
    id: str
    source: int  # extended vertex index
    range: int  # canonical class representative
    multiplicity: Cardinal


@dataclass(frozen=True)
class QuotientUltragraph:
    """``𝒢/(H,B)``: vertex classes, surviving edges, class-valued ``r`` and ``s``."""

    ext: ExtendedUltragraph
    vertices: tuple[int, ...]
    edges: tuple[QuotientEdge, ...]

    @property
    def pair(self) -> AdmissiblePair:
        return self.ext.pair

    @property
    def base(self) -> Ultragraph:
        return self.ext.base

    @cached_property
    def _edge_index(self) -> dict[str, int]:
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def out_edges(self) -> dict[int, tuple[QuotientEdge, ...]]:
        groups: dict[int, list[QuotientEdge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            groups[e.source].append(e)
        return {v: tuple(es) for v, es in groups.items()}

    def edge(self, edge_id: str) -> QuotientEdge:
        try:
            return self.edges[self._edge_index[edge_id]]
        except KeyError:
            raise UltragraphError(f"{edge_id!r} is not an edge of the quotient") from None

    def r(self, edge_id: str) -> ClassSet:
        return ClassSet(self.edge(edge_id).range, self.ext)

    def s(self, edge_id: str) -> ClassSet:
        return ClassSet(1 << self.edge(edge_id).source, self.ext)

    def vertex_name(self, v: int) -> str:
        return self.ext.graph.vertices[v]

    def vertex_class(self, v: int) -> ClassSet:
        return ClassSet(1 << v, self.ext)

    def class_name(self, mask: int) -> str:
        return "[" + ",".join(self.ext.graph.names(mask)) + "]"

    def out_multiplicity(self, v: int) -> Cardinal:
        return sum((e.multiplicity for e in self.out_edges.get(v, ())), 0)

    def vertex_index(self, name: str) -> int:
        """Index of the vertex class named ``v``, ``[v]`` or ``w'``."""
        name = name.strip()
        if name.startswith("[") and name.endswith("]"):
            name = name[1:-1]
        v = self.ext.graph.index(name)
        if v not in self.out_edges:
            raise UltragraphError(f"{name!r} is not a vertex of the quotient")
        return v

    def structure(self) -> tuple:
        """Name-level description used for structural comparisons."""
        names = self.ext.graph.names
        return (
            tuple(self.vertex_name(v) for v in self.vertices),
            tuple((e.id, self.vertex_name(e.source), tuple(names(e.range)), e.multiplicity) for e in self.edges),
        )


def build_quotient(g: Ultragraph, pair: AdmissiblePair) -> QuotientUltragraph:
    ext = extend(g, pair)
    h1 = pair.h
    verts = tuple(v for v in range(g.n) if not h1 >> v & 1) + tuple(range(g.n, ext.graph.n))
    edges = tuple(
        QuotientEdge(e.id, e.source, e.range & ~h1, e.multiplicity) for e in ext.graph.edges if e.range & ~h1
    )
    return QuotientUltragraph(ext, verts, edges)


def singular_vertices(q: QuotientUltragraph) -> list[ClassSet]:
    """Vertex classes emitting no edges or infinitely many."""
    out = []
    for v in q.vertices:
        m = q.out_multiplicity(v)
        if m == 0 or m == INF:
            out.append(q.vertex_class(v))
    return out


def ultragraph_structure(g: Ultragraph) -> tuple:
    """Same shape as :meth:`QuotientUltragraph.structure`, for ``𝒢`` itself."""
    return (
        g.vertices,
        tuple((e.id, g.vertices[e.source], tuple(g.names(e.range)), e.multiplicity) for e in g.edges),
    )
