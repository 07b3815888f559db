"""The finite directed graph ``G_F`` built from a finite fragment of a quotient.

``F`` consists of singular vertex classes (``F⁰``) and individual quotient
edges (``F¹``).  An edge class of finite multiplicity ``m`` has copies
``e#1 … e#m``; a class of multiplicity one is just ``e``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .core import INF, CapacityError, UltragraphError, bits
from .paths import functional_cycles
from .quotient import ClassSet, QuotientUltragraph, singular_vertices

MAX_F1 = 16


@dataclass(frozen=True, order=True)
class EdgeCopy:
    id: str
    copy: int = 1
    multiplicity: object = 1

    @property
    def label(self) -> str:
        return self.id if self.multiplicity == 1 else f"{self.id}#{self.copy}"


@dataclass(frozen=True)
class FSet:
    q: QuotientUltragraph
    f0: tuple[int, ...]
    f1: tuple[EdgeCopy, ...]

    def __post_init__(self) -> None:
        sing = {c.mask.bit_length() - 1 for c in singular_vertices(self.q)}
        for v in self.f0:
            if v not in sing:
                raise UltragraphError(f"{self.q.class_name(1 << v)} is not a singular vertex of the quotient")
        if len(set(self.f0)) != len(self.f0):
            raise UltragraphError("repeated vertex class in F")
        if len(set(self.f1)) != len(self.f1):
            raise UltragraphError("repeated edge in F")
        if len(self.f1) > MAX_F1:
            raise CapacityError(f"|F1| = {len(self.f1)} exceeds {MAX_F1}")

    @cached_property
    def f0_mask(self) -> int:
        m = 0
        for v in self.f0:
            m |= 1 << v
        return m

    @cached_property
    def ranges(self) -> tuple[int, ...]:
        return tuple(self.q.edge(c.id).range for c in self.f1)

    def vertex_label(self, v: int) -> str:
        return self.q.class_name(1 << v)


def make_fset(q: QuotientUltragraph, items: Iterable[str]) -> FSet:
    """Build ``F`` from names.

    ``[v]`` or ``w'`` names a vertex class; ``e`` names every copy of the
    quotient edge class ``e`` (rejected for infinite classes); ``e#k`` names
    copy ``k`` only.
    """
    f0: list[int] = []
    f1: list[EdgeCopy] = []
    edge_ids = {e.id for e in q.edges}
    for raw in items:
        item = raw.strip()
        if not item:
            continue
        base, _, copy = item.partition("#")
        if item.startswith("[") or item.endswith("'") or (base not in edge_ids and not copy):
            f0.append(q.vertex_index(item))
            continue
        e = q.edge(base)
        if copy:
            try:
                k = int(copy)
            except ValueError:
                raise UltragraphError(f"bad edge copy {item!r}") from None
            if k < 1 or k > e.multiplicity:
                raise UltragraphError(f"edge {base!r} has no copy {k}")
            f1.append(EdgeCopy(e.id, k, e.multiplicity))
        elif e.multiplicity == INF:
            raise CapacityError(f"edge class {base!r} has infinitely many edges; select copies as {base}#k")
        else:
            f1.extend(EdgeCopy(e.id, k, e.multiplicity) for k in range(1, e.multiplicity + 1))
    order = {e.id: i for i, e in enumerate(q.edges)}
    f1.sort(key=lambda c: (order[c.id], c.copy))
    return FSet(q, tuple(sorted(f0, key=q.vertices.index)), tuple(f1))


def _omega_bits(fset: FSet, omega) -> tuple[int, ...]:
    if isinstance(omega, str):
        omega = tuple(int(c) for c in omega)
    omega = tuple(omega)
    if len(omega) != len(fset.f1) or any(b not in (0, 1) for b in omega):
        raise ValueError(f"omega must be a 0/1 vector of length {len(fset.f1)}")
    if not any(omega):
        raise ValueError("omega must be nonzero")
    return omega


def _r_omega_mask(fset: FSet, omega: Sequence[int]) -> int:
    inside = -1
    outside = 0
    for b, r in zip(omega, fset.ranges):
        if b:
            inside &= r
        else:
            outside |= r
    return inside & ~outside


def r_omega(fset: FSet, omega) -> ClassSet:
    """Intersection of the chosen ranges minus the union of the others."""
    return ClassSet(_r_omega_mask(fset, _omega_bits(fset, omega)), fset.q.ext)


def R_omega(fset: FSet, omega) -> ClassSet:
    """``r(ω)`` with the vertex classes of ``F⁰`` removed."""
    return ClassSet(_r_omega_mask(fset, _omega_bits(fset, omega)) & ~fset.f0_mask, fset.q.ext)


def omega_string(omega: Sequence[int]) -> str:
    return "".join(str(b) for b in omega)


def all_omegas(n: int) -> list[tuple[int, ...]]:
    """Nonzero 0/1 vectors of length ``n`` sorted as bit-strings."""
    return [tuple((k >> (n - 1 - i)) & 1 for i in range(n)) for k in range(1, 1 << n)]


def _emits_only_into(fset: FSet, v: int, chosen: set[tuple[str, int]]) -> bool:
    out = fset.q.out_edges.get(v, ())
    if not out:
        return False
    for e in out:
        if e.multiplicity == INF:
            return False
        if any((e.id, k) not in chosen for k in range(1, e.multiplicity + 1)):
            return False
    return True


def gamma_sets(fset: FSet) -> tuple[list[str], list[str]]:
    """``(Γ₀, Γ)`` as sorted bit-strings.

    ``Γ₀`` holds the ω whose nonempty ``R(ω)`` consists of vertex classes that
    each emit at least one edge and only edges of ``F¹``; ``Γ`` the other ω
    with nonempty ``R(ω)``.
    """
    chosen = {(c.id, c.copy) for c in fset.f1}
    g0: list[str] = []
    g: list[str] = []
    for omega in all_omegas(len(fset.f1)):
        rm = _r_omega_mask(fset, omega) & ~fset.f0_mask
        if not rm:
            continue
        if all(_emits_only_into(fset, v, chosen) for v in bits(rm)):
            g0.append(omega_string(omega))
        else:
            g.append(omega_string(omega))
    return g0, g


@dataclass(frozen=True)
class DualGraph:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    gamma0: tuple[str, ...] = ()

    def out_degree(self, v: str) -> int:
        return sum(1 for s, _ in self.edges if s == v)


def build_dual_graph(fset: FSet) -> DualGraph:
    q = fset.q
    gamma0, gamma = gamma_sets(fset)
    f0_labels = [fset.vertex_label(v) for v in fset.f0]
    f1_labels = [c.label for c in fset.f1]
    edges: list[tuple[str, str]] = []
    for i, (ce, re) in enumerate(zip(f1_labels, fset.ranges)):
        for cf, c in zip(f1_labels, fset.f1):
            if re >> q.edge(c.id).source & 1:
                edges.append((ce, cf))
        for v, lab in zip(fset.f0, f0_labels):
            if re >> v & 1:
                edges.append((ce, lab))
        for w in gamma:
            if w[i] == "1":
                edges.append((ce, w))
    return DualGraph(tuple(f0_labels + f1_labels + gamma), tuple(edges), tuple(gamma0))


def graph_condition_L(dg: DualGraph) -> bool:
    """Every cycle of the ordinary directed graph has an exit."""
    index = {v: i for i, v in enumerate(dg.vertices)}
    out: dict[int, list[int]] = {}
    for s, t in dg.edges:
        out.setdefault(index[s], []).append(index[t])
    succ = {v: (ts[0], "") for v, ts in out.items() if len(ts) == 1}
    return not functional_cycles(succ)
