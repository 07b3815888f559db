"""Ultragraph data model and vertex-set arithmetic.

Vertex sets are plain ``int`` bitmasks over vertex indices: bit ``i`` is set
iff vertex ``i`` belongs to the set.  With a finite vertex set the generated
algebra is the whole power set, so every subset is a legal range/set value.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union

INF = math.inf

Cardinal = Union[int, float]  # finite count or INF


class UltragraphError(ValueError):
    """Raised when an ultragraph description fails validation."""


class CapacityError(ValueError):
    """Raised when an exhaustive computation would exceed its size bound."""


class VertexKind(enum.Enum):
    SINK = "sink"
    REGULAR = "regular"
    INFINITE_EMITTER = "infinite-emitter"


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` in increasing numeric order."""
    members = list(bits(mask))
    for k in range(1 << len(members)):
        sub = 0
        for j, v in enumerate(members):
            if k >> j & 1:
                sub |= 1 << v
        yield sub


def check_multiplicity(m: Cardinal) -> Cardinal:
    if m == INF:
        return INF
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise UltragraphError(f"multiplicity must be a positive integer or inf, got {m!r}")
    return m


def format_multiplicity(m: Cardinal) -> str:
    return "inf" if m == INF else str(m)


@dataclass(frozen=True)
class EdgeClass:
    """A family of ``multiplicity`` parallel edges sharing source and range."""

    id: str
    source: int
    range: int
    multiplicity: Cardinal = 1


@dataclass(frozen=True)
class Ultragraph:
    """Finite vertex set plus edge classes with set-valued ranges.

    ``vertices`` holds the vertex names; a vertex is referred to by its index
    into that tuple.  Edge order is declaration order.
    """

    vertices: tuple[str, ...]
    edges: tuple[EdgeClass, ...] = field(default=())

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for name in self.vertices:
            if name in seen:
                raise UltragraphError(f"duplicate vertex {name!r}")
            seen.add(name)
        ids: set[str] = set()
        full = self.full
        for e in self.edges:
            if e.id in ids:
                raise UltragraphError(f"duplicate edge {e.id!r}")
            ids.add(e.id)
            if not 0 <= e.source < len(self.vertices):
                raise UltragraphError(f"edge {e.id!r}: undeclared source vertex")
            if e.range == 0:
                raise UltragraphError(f"edge {e.id!r}: empty range")
            if e.range & ~full:
                raise UltragraphError(f"edge {e.id!r}: undeclared range vertex")
            check_multiplicity(e.multiplicity)

    @classmethod
    def from_names(
        cls,
        vertices: Sequence[str],
        edges: Iterable[tuple[str, str, Iterable[str]] | tuple[str, str, Iterable[str], Cardinal]],
    ) -> "Ultragraph":
        """Build from ``(id, source, range_names[, multiplicity])`` tuples."""
        index = {name: i for i, name in enumerate(vertices)}
        built = []
        for item in edges:
            eid, src, rng = item[0], item[1], item[2]
            mult = item[3] if len(item) > 3 else 1
            if src not in index:
                raise UltragraphError(f"edge {eid!r}: undeclared vertex {src!r}")
            mask = 0
            for name in rng:
                if name not in index:
                    raise UltragraphError(f"edge {eid!r}: undeclared vertex {name!r}")
                mask |= 1 << index[name]
            built.append(EdgeClass(eid, index[src], mask, mult))
        return cls(tuple(vertices), tuple(built))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def full(self) -> int:
        return (1 << len(self.vertices)) - 1

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.vertices)}

    @cached_property
    def _edge_index(self) -> dict[str, int]:
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def out_edges(self) -> tuple[tuple[EdgeClass, ...], ...]:
        """Edge classes grouped by source vertex index."""
        groups: list[list[EdgeClass]] = [[] for _ in self.vertices]
        for e in self.edges:
            groups[e.source].append(e)
        return tuple(tuple(g) for g in groups)

    @cached_property
    def out_multiplicities(self) -> tuple[Cardinal, ...]:
        return tuple(sum((e.multiplicity for e in g), 0) for g in self.out_edges)

    @cached_property
    def successors(self) -> tuple[int, ...]:
        """Union of the ranges of the classes emitted by each vertex."""
        out = []
        for g in self.out_edges:
            m = 0
            for e in g:
                m |= e.range
            out.append(m)
        return tuple(out)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UltragraphError(f"unknown vertex {name!r}") from None

    def edge(self, edge_id: str) -> EdgeClass:
        try:
            return self.edges[self._edge_index[edge_id]]
        except KeyError:
            raise UltragraphError(f"unknown edge {edge_id!r}") from None

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for name in names:
            m |= 1 << self.index(name)
        return m

    def names(self, mask: int) -> list[str]:
        return [self.vertices[i] for i in bits(mask)]

    def format_set(self, mask: int) -> str:
        return "{" + ",".join(self.names(mask)) + "}"

    def out_multiplicity(self, v: int) -> Cardinal:
        """Number of edges emitted by ``v`` (``INF`` if any class is infinite)."""
        return self.out_multiplicities[v]

    def vertex_kind(self, v: int) -> VertexKind:
        m = self.out_multiplicities[v]
        if m == 0:
            return VertexKind.SINK
        if m == INF:
            return VertexKind.INFINITE_EMITTER
        return VertexKind.REGULAR

    def is_regular(self, v: int) -> bool:
        return 0 < self.out_multiplicities[v] < INF


def build_ultragraph(spec) -> Ultragraph:
    """Validate a parsed ``.ug`` description and build the ultragraph.

    ``spec`` is a :class:`ultraquot.ugformat.UgSpec`; errors name the offending
    element and, when known, its source line.
    """
    index: dict[str, int] = {}
    for decl in spec.vertices:
        if decl.name in index:
            raise UltragraphError(f"line {decl.line}: duplicate vertex {decl.name!r}")
        index[decl.name] = len(index)
    edges = []
    seen: set[str] = set()
    for decl in spec.edges:
        where = f"line {decl.line}: edge {decl.id!r}"
        if decl.id in seen:
            raise UltragraphError(f"{where}: duplicate edge name")
        seen.add(decl.id)
        if not decl.range:
            raise UltragraphError(f"{where}: empty range")
        for name in (decl.source, *decl.range):
            if name not in index:
                raise UltragraphError(f"{where}: undeclared vertex {name!r}")
        mask = 0
        for name in decl.range:
            mask |= 1 << index[name]
        edges.append(EdgeClass(decl.id, index[decl.source], mask, decl.multiplicity))
    return Ultragraph(tuple(index), tuple(edges))


def out_multiplicity(g: Ultragraph, v: int) -> Cardinal:
    return g.out_multiplicity(v)


def vertex_kind(g: Ultragraph, v: int) -> VertexKind:
    return g.vertex_kind(v)


def generated_algebra(universe: int, generators: Iterable[int]) -> list[int]:
    """The ring of sets generated by ``generators`` (closed under ∩, ∪, ∖).

    Points of the universe are grouped by which generators contain them; the
    nonempty groups covered by some generator are the atoms, and the ring is
    every union of atoms.  Returned sorted by bitmask.
    """
    gens = [gm & universe for gm in generators]
    signature: dict[int, int] = {}
    for v in bits(universe):
        sig = 0
        for j, gm in enumerate(gens):
            if gm >> v & 1:
                sig |= 1 << j
        if sig:
            signature[sig] = signature.get(sig, 0) | 1 << v
    atoms = list(signature.values())
    if len(atoms) > 24:
        raise CapacityError(f"generated algebra has 2^{len(atoms)} elements")
    out = []
    for k in range(1 << len(atoms)):
        m = 0
        for j, a in enumerate(atoms):
            if k >> j & 1:
                m |= a
        out.append(m)
    return sorted(out)
