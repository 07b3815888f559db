"""Admissible-pair posets, the Condition (K) witness construction, primitivity.

Gauge-invariant ideals are handled through their admissible pairs ``(K, S)``
ordered by ``K₁ ⊆ K₂`` and ``S₁ ⊆ K₂ ∪ S₂``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .core import Ultragraph, UltragraphError, popcount
from .heredity import (
    DEFAULT_MAX_VERTICES,
    AdmissiblePair,
    breaking_vertices,
    enumerate_admissible_pairs,
    is_admissible,
)
from .paths import (
    downward_directed,
    is_loop,
    loops_without_exit_in_complement,
    reachable_vertices,
    reaches,
    unique_first_return_loop,
)
from .quotient import QuotientUltragraph, build_quotient


def pair_leq(p: AdmissiblePair, q: AdmissiblePair) -> bool:
    return p.h & ~q.h == 0 and p.b & ~(q.h | q.b) == 0


@dataclass(frozen=True)
class IdealDescriptor:
    """The ideal of ``C*(𝒢/context)`` indexed by ``pair``."""

    pair: AdmissiblePair
    context: AdmissiblePair


class LatticeError(RuntimeError):
    pass


@dataclass(frozen=True)
class IdealPoset:
    context: AdmissiblePair
    nodes: tuple[AdmissiblePair, ...]
    hasse: tuple[tuple[int, int], ...]

    def leq(self, i: int, j: int) -> bool:
        return pair_leq(self.nodes[i], self.nodes[j])

    def descriptors(self) -> list[IdealDescriptor]:
        return [IdealDescriptor(p, self.context) for p in self.nodes]

    def _extremum(self, i: int, j: int, upper: bool) -> int:
        n = len(self.nodes)
        if upper:
            bounds = [k for k in range(n) if self.leq(i, k) and self.leq(j, k)]
            best = [k for k in bounds if all(self.leq(k, m) for m in bounds)]
        else:
            bounds = [k for k in range(n) if self.leq(k, i) and self.leq(k, j)]
            best = [k for k in bounds if all(self.leq(m, k) for m in bounds)]
        if len(best) != 1:
            kind = "least upper" if upper else "greatest lower"
            raise LatticeError(f"nodes {i} and {j} have {len(best)} {kind} bounds")
        return best[0]

    def meet(self, i: int, j: int) -> int:
        return self._extremum(i, j, upper=False)

    def join(self, i: int, j: int) -> int:
        return self._extremum(i, j, upper=True)

    def is_lattice(self) -> bool:
        n = len(self.nodes)
        try:
            for i in range(n):
                for j in range(i + 1, n):
                    self.meet(i, j)
                    self.join(i, j)
        except LatticeError:
            return False
        return True

    @property
    def minimum(self) -> AdmissiblePair:
        return self.nodes[0]

    @property
    def maximum(self) -> AdmissiblePair:
        return self.nodes[-1]


def _hasse(nodes: Sequence[AdmissiblePair]) -> list[tuple[int, int]]:
    # nodes sorted by (h, b) form a linear extension of the order
    n = len(nodes)
    below = [[i != j and pair_leq(nodes[i], nodes[j]) for j in range(n)] for i in range(n)]
    covers = []
    for i in range(n):
        for j in range(i + 1, n):
            if below[i][j] and not any(below[i][k] and below[k][j] for k in range(i + 1, j)):
                covers.append((i, j))
    return covers


def ideal_poset(
    g: Ultragraph, context: AdmissiblePair = AdmissiblePair(0, 0), max_vertices: int = DEFAULT_MAX_VERTICES
) -> IdealPoset:
    """Admissible pairs above ``context``, with their covering relation."""
    if not is_admissible(g, context):
        raise UltragraphError(f"context {context.describe(g)} is not admissible")
    nodes = [p for p in enumerate_admissible_pairs(g, max_vertices) if pair_leq(context, p)]
    return IdealPoset(context, tuple(nodes), tuple(_hasse(nodes)))


def quotient_by_ideal(g: Ultragraph, context: AdmissiblePair, target: AdmissiblePair) -> QuotientUltragraph:
    """Quotient of ``𝒢/context`` by the ideal of ``target``, which is ``𝒢/target``."""
    if not is_admissible(g, context):
        raise UltragraphError(f"context {context.describe(g)} is not admissible")
    if not pair_leq(context, target):
        raise UltragraphError(f"{target.describe(g)} does not lie above {context.describe(g)}")
    return build_quotient(g, target)


def _gamma_sources(g: Ultragraph, gamma: Sequence[str]) -> int:
    m = 0
    for eid in gamma:
        m |= 1 << g.edge(eid).source
    return m


def construct_K_layers(g: Ultragraph, h1: int, b: int, gamma: Sequence[str]) -> list[int]:
    """Stages of the hereditary saturated set built around a lone loop ``gamma``.

    The first entry is the starting set: ``h1`` plus every vertex outside the
    loop's sources that lies in the range of a path leaving those sources.
    Each later entry is the set of vertices added in that round: regular
    vertices, and vertices of ``b``, whose edges all land in what has been
    collected so far.
    """
    gamma = tuple(gamma)
    if not is_admissible(g, AdmissiblePair(h1, b)):
        raise UltragraphError("(h1, b) is not an admissible pair")
    if not gamma or not is_loop(g, gamma):
        raise UltragraphError(f"{' '.join(gamma)!r} is not a loop")
    v = g.edge(gamma[0]).source
    if h1 >> v & 1:
        raise UltragraphError("loop is based inside H")
    if unique_first_return_loop(g, v) != gamma:
        raise UltragraphError(f"{' '.join(gamma)} is not the only first-return loop at {g.vertices[v]}")
    g0 = _gamma_sources(g, gamma)
    src = reachable_vertices(g, g0)
    x = 0
    for e in g.edges:
        if src >> e.source & 1:
            x |= e.range
    k = h1 | (x & ~g0)
    layers = [k]
    succ = g.successors
    while True:
        added = 0
        for w in range(g.n):
            if k >> w & 1 or succ[w] & ~k:
                continue
            if g.is_regular(w) or b >> w & 1:
                added |= 1 << w
        if not added:
            return layers
        layers.append(added)
        k |= added


def construct_K_from_loop(g: Ultragraph, h1: int, b: int, gamma: Sequence[str]) -> int:
    k = 0
    for layer in construct_K_layers(g, h1, b, gamma):
        k |= layer
    return k


class Rule(enum.Enum):
    CASE1 = "Case1"
    CASE2 = "Case2"
    TOO_MANY_MISSING = "TooManyMissingBreakers"
    IMPROPER = "Improper"


@dataclass(frozen=True)
class PrimitivityVerdict:
    primitive: bool
    rule: Rule
    evidence: dict = field(default_factory=dict)


def is_primitive(g: Ultragraph, k: int, s: int) -> PrimitivityVerdict:
    """Decide whether the gauge-invariant ideal of ``(K, S)`` is primitive."""
    if not is_admissible(g, AdmissiblePair(k, s)):
        raise UltragraphError(f"({g.format_set(k)}, {g.format_set(s)}) is not admissible")
    if k == g.full:
        return PrimitivityVerdict(False, Rule.IMPROPER)
    missing = breaking_vertices(g, k) & ~s
    if missing == 0:
        evidence: dict = {}
        dd = downward_directed(g, k)
        if not dd.holds:
            evidence["bad_pair"] = list(dd.witness)
        loops = loops_without_exit_in_complement(g, k)
        if loops:
            evidence["loop"] = list(loops[0].edges)
            evidence["base"] = loops[0].base
        return PrimitivityVerdict(not evidence, Rule.CASE1, evidence)
    if popcount(missing) == 1:
        w = missing.bit_length() - 1
        evidence = {"w": g.vertices[w]}
        for v in range(g.n):
            if not k >> v & 1 and not reaches(g, 1 << v, 1 << w):
                evidence["unreached"] = g.vertices[v]
                return PrimitivityVerdict(False, Rule.CASE2, evidence)
        return PrimitivityVerdict(True, Rule.CASE2, evidence)
    return PrimitivityVerdict(False, Rule.TOO_MANY_MISSING, {"missing": g.names(missing)})


def classify_ideals(
    g: Ultragraph, context: AdmissiblePair = AdmissiblePair(0, 0), max_vertices: int = DEFAULT_MAX_VERTICES
) -> tuple[IdealPoset, list[PrimitivityVerdict]]:
    """The ideal poset above ``context`` with a verdict for every node."""
    poset = ideal_poset(g, context, max_vertices)
    return poset, [is_primitive(g, p.h, p.b) for p in poset.nodes]


def primitive_ideals(
    g: Ultragraph, context: AdmissiblePair = AdmissiblePair(0, 0), max_vertices: int = DEFAULT_MAX_VERTICES
) -> list[tuple[IdealDescriptor, PrimitivityVerdict]]:
    poset, verdicts = classify_ideals(g, context, max_vertices)
    return [(IdealDescriptor(p, context), v) for p, v in zip(poset.nodes, verdicts) if v.primitive]


__all__ = [
    "IdealDescriptor",
    "IdealPoset",
    "LatticeError",
    "PrimitivityVerdict",
    "Rule",
    "classify_ideals",
    "construct_K_from_loop",
    "construct_K_layers",
    "ideal_poset",
    "is_primitive",
    "pair_leq",
    "primitive_ideals",
    "quotient_by_ideal",
]

