"""Hereditary and saturated vertex sets, breaking vertices, admissible pairs.

A saturated hereditary collection ``H`` of vertex sets is closed under
finite unions and subsets, so with finitely many vertices it is determined by
the vertex set ``h1 = {v : {v} in H}``; "A in H" becomes ``A & ~h1 == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import INF, CapacityError, Ultragraph, bits, submasks

DEFAULT_MAX_VERTICES = 20


@dataclass(frozen=True, order=True)
class AdmissiblePair:
    """``(H, B)`` with ``H`` given by its vertex mask and ``B ⊆ B_H``.

    Ordering is the canonical enumeration order: ``h`` mask, then ``b`` mask.
    """

    h: int
    b: int = 0

    def describe(self, g: Ultragraph) -> str:
        return f"({g.format_set(self.h)}, {g.format_set(self.b)})"


def is_hereditary(g: Ultragraph, h1: int) -> bool:
    succ = g.successors
    for v in bits(h1):
        if succ[v] & ~h1:
            return False
    return True


def is_saturated(g: Ultragraph, h1: int) -> bool:
    succ = g.successors
    for v in range(g.n):
        if not h1 >> v & 1 and g.is_regular(v) and not succ[v] & ~h1:
            return False
    return True


def is_sat_hereditary(g: Ultragraph, h1: int) -> bool:
    return is_hereditary(g, h1) and is_saturated(g, h1)


def saturated_hereditary_closure(g: Ultragraph, seeds) -> int:
    """Smallest saturated hereditary vertex set containing every seed set."""
    h1 = 0
    for s in seeds:
        h1 |= s
    succ = g.successors
    regular = [v for v in range(g.n) if g.is_regular(v)]
    changed = True
    while changed:
        changed = False
        frontier = h1
        while frontier:
            new = 0
            for v in bits(frontier):
                new |= succ[v]
            frontier = new & ~h1
            h1 |= frontier
        for v in regular:
            if not h1 >> v & 1 and not succ[v] & ~h1:
                h1 |= 1 << v
                changed = True
    return h1


def edges_leaving(g: Ultragraph, w: int, h1: int):
    """Number of edges out of ``w`` whose range is not inside ``h1``."""
    return sum((e.multiplicity for e in g.out_edges[w] if e.range & ~h1), 0)


def breaking_vertices(g: Ultragraph, h1: int) -> int:
    """Infinite emitters sending finitely many, but at least one, edges out of ``h1``.

    Edges are counted with multiplicity, so an infinite class leaving ``h1``
    disqualifies its source.
    """
    out = 0
    for w in range(g.n):
        if g.out_multiplicities[w] == INF:
            k = edges_leaving(g, w, h1)
            if 0 < k < INF:
                out |= 1 << w
    return out


def breaking_vertices_by_range_sets(g: Ultragraph, h1: int) -> int:
    """Alternative reading counting distinct range sets instead of edges."""
    out = 0
    for w in range(g.n):
        if g.out_multiplicities[w] == INF:
            ranges = {e.range for e in g.out_edges[w] if e.range & ~h1}
            if ranges:
                out |= 1 << w
    return out


def is_admissible(g: Ultragraph, pair: AdmissiblePair) -> bool:
    return is_sat_hereditary(g, pair.h) and pair.b & ~breaking_vertices(g, pair.h) == 0


def saturated_hereditary_sets(g: Ultragraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[int]:
    if g.n > max_vertices:
        raise CapacityError(f"{g.n} vertices exceeds the enumeration bound of {max_vertices}")
    succ = g.successors
    regular = [(v, 1 << v, succ[v]) for v in range(g.n) if g.is_regular(v)]
    out = []
    for h1 in range(1 << g.n):
        ok = True
        for v in bits(h1):
            if succ[v] & ~h1:
                ok = False
                break
        if not ok:
            continue
        for v, vb, s in regular:
            if not h1 & vb and not s & ~h1:
                ok = False
                break
        if ok:
            out.append(h1)
    return out


def enumerate_admissible_pairs(g: Ultragraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[AdmissiblePair]:
    """Every admissible pair of ``g`` in canonical ``(h, b)`` order."""
    pairs = []
    for h1 in saturated_hereditary_sets(g, max_vertices):
        for b in submasks(breaking_vertices(g, h1)):
            pairs.append(AdmissiblePair(h1, b))
    return pairs
