"""Paths and loops, Conditions (L) and (K), the relation ``A ≥ B``.

Paths are sequences of edge-class ids.  An edge class of multiplicity ``m``
stands for ``m`` distinct parallel edges; wherever the number of edges
matters (exits, counting loops) multiplicity is taken into account.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .core import INF, Ultragraph, bits
from .quotient import QuotientUltragraph


@dataclass(frozen=True)
class Loop:
    edges: tuple[str, ...]
    base: str

    def __str__(self) -> str:
        return " ".join(self.edges)


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    witness: Any = None
    detail: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.holds != (self.witness is None):
            raise ValueError("a witness is required exactly when the condition fails")

    def __bool__(self) -> bool:
        return self.holds


def is_subpath(beta: Sequence[str], alpha: Sequence[str]) -> bool:
    """True iff ``beta`` is a contiguous nonempty block of ``alpha``."""
    k = len(beta)
    if k == 0 or k > len(alpha):
        return False
    beta = tuple(beta)
    return any(tuple(alpha[i : i + k]) == beta for i in range(len(alpha) - k + 1))


def is_path(g: Ultragraph, edges: Sequence[str]) -> bool:
    if not edges:
        return False
    es = [g.edge(x) for x in edges]
    return all(b.source in bits(a.range) for a, b in zip(es, es[1:]))


def is_loop(g: Ultragraph, edges: Sequence[str]) -> bool:
    return is_path(g, edges) and g.edge(edges[0]).source in bits(g.edge(edges[-1]).range)


def functional_cycles(succ: dict[int, tuple[int, str]]) -> list[tuple[list[int], list[str]]]:
    """Cycles of a partial function ``x -> (y, edge)``, each started at its smallest vertex."""
    state: dict[int, int] = {}
    cycles = []
    for start in sorted(succ):
        if start in state:
            continue
        trail = []
        x = start
        while x in succ and x not in state:
            state[x] = 1
            trail.append(x)
            x = succ[x][0]
        if x in state and state[x] == 1:
            cyc = trail[trail.index(x) :]
            k = cyc.index(min(cyc))
            cyc = cyc[k:] + cyc[:k]
            cycles.append((cyc, [succ[v][1] for v in cyc]))
        for v in trail:
            state[v] = 2
    cycles.sort()
    return cycles


def condition_L(q: QuotientUltragraph) -> ConditionReport:
    """Every loop of the quotient has a range/source mismatch or an exit.

    A loop can only violate this if each vertex class on it emits exactly one
    edge and that edge's range is exactly the next vertex class, so violations
    are the cycles of that deterministic successor map.
    """
    succ: dict[int, tuple[int, str]] = {}
    for v in q.vertices:
        out = q.out_edges[v]
        if len(out) == 1 and out[0].multiplicity == 1:
            r = out[0].range
            if r & (r - 1) == 0:
                succ[v] = (r.bit_length() - 1, out[0].id)
    cycles = functional_cycles(succ)
    if not cycles:
        return ConditionReport(True)
    verts, edges = cycles[0]
    loop = Loop(tuple(edges), q.class_name(1 << verts[0]))
    return ConditionReport(
        False,
        loop,
        {"reason": "loop without exit", "loops": [list(es) for _, es in cycles]},
    )


def _can_reach(g: Ultragraph, target: int, avoid: int = 0) -> int:
    """Vertices with a path of length >= 1 to ``target`` through sources not in ``avoid``."""
    preds: list[int] = [0] * g.n
    for e in g.edges:
        for y in bits(e.range):
            preds[y] |= 1 << e.source
    seen = 0
    frontier = preds[target] & ~avoid
    while frontier:
        seen |= frontier
        new = 0
        for x in bits(frontier):
            new |= preds[x]
        frontier = new & ~seen & ~avoid
    return seen


def first_return_loops(g: Ultragraph, v: int, limit: int = 2) -> tuple[list[tuple[str, ...]], int]:
    """Simple loops at ``v`` that do not pass through ``v`` again.

    Returns up to ``limit`` distinct edge sequences and the number of loops
    they account for (parallel edges make one sequence count several times),
    saturating at ``limit``.
    """
    found: list[tuple[str, ...]] = []
    count = 0
    vb = 1 << v
    useful = _can_reach(g, v, avoid=vb) | vb

    def dfs(x: int, visited: int, path: list[str], weight) -> bool:
        nonlocal count
        for e in g.out_edges[x]:
            w = weight * e.multiplicity
            if e.range & vb:
                found.append(tuple(path) + (e.id,))
                count += w
                if count >= limit:
                    return True
            for y in bits(e.range & ~visited & useful & ~vb):
                path.append(e.id)
                if dfs(y, visited | 1 << y, path, w):
                    return True
                path.pop()
        return False

    dfs(v, vb, [], 1)
    return found[:limit], min(count, limit)


def unique_first_return_loop(g: Ultragraph, v: int) -> tuple[str, ...] | None:
    """The only loop at ``v`` with no intermediate visit to ``v``, if there is exactly one."""
    loops, count = first_return_loops(g, v, limit=2)
    if count != 1:
        return None
    gamma = loops[0]
    vb = 1 << v
    for eid in gamma[1:]:
        u = g.edge(eid).source
        if _can_reach(g, u, avoid=vb) >> u & 1:
            # a cycle at u avoiding v splices into a second first-return loop
            return None
    return gamma


def condition_K(g: Ultragraph, h1: int) -> ConditionReport:
    """Each vertex outside ``h1`` bases no loop or two subpath-incomparable loops.

    Holds at ``v`` iff the number of first-return loops at ``v`` is not 1.
    """
    for v in range(g.n):
        if h1 >> v & 1:
            continue
        gamma = unique_first_return_loop(g, v)
        if gamma is not None:
            name = g.vertices[v]
            return ConditionReport(False, Loop(gamma, name), {"reason": "single first-return loop", "vertex": name})
    return ConditionReport(True)


def reachable_vertices(g: Ultragraph, a: int) -> int:
    """``a`` together with every vertex in the range of a path starting in ``a``."""
    seen = a
    frontier = a
    succ = g.successors
    while frontier:
        new = 0
        for x in bits(frontier):
            new |= succ[x]
        frontier = new & ~seen
        seen |= frontier
    return seen


def reachable_edges(g: Ultragraph, a: int) -> list[int]:
    """Indices of edge classes lying on some path that starts in ``a``."""
    src = reachable_vertices(g, a)
    return [i for i, e in enumerate(g.edges) if src >> e.source & 1]


def reaches(g: Ultragraph, a: int, b: int) -> bool:
    """``A ≥ B``: ``B ⊆ A`` or some path from ``A`` has ``B`` inside its range."""
    if b & ~a == 0:
        return True
    src = reachable_vertices(g, a)
    return any(src >> e.source & 1 and b & ~e.range == 0 for e in g.edges)


def _dominated_sets(g: Ultragraph, v: int) -> set[int]:
    src = reachable_vertices(g, 1 << v)
    out = {1 << v}
    out.update(e.range for e in g.edges if src >> e.source & 1)
    return out


def downward_directed(g: Ultragraph, h1: int) -> ConditionReport:
    """Whether the sets outside ``H`` are downward directed under ``≥``.

    Reduces to singletons: ``{v}`` and ``{w}`` have a common lower bound
    outside ``H`` iff some set dominated by ``v`` meets some set dominated by
    ``w`` outside ``h1``.
    """
    outside = [v for v in range(g.n) if not h1 >> v & 1]
    dom = {v: _dominated_sets(g, v) for v in outside}
    keep = ~h1
    for i, v in enumerate(outside):
        for w in outside[i + 1 :]:
            if not any(x & y & keep for x in dom[v] for y in dom[w]):
                pair = (g.vertices[v], g.vertices[w])
                return ConditionReport(False, pair, {"reason": "no common lower bound"})
    return ConditionReport(True)


def loops_without_exit_in_complement(g: Ultragraph, h1: int) -> list[Loop]:
    """Simple loops avoiding ``H`` that have no exit avoiding ``H``.

    One loop per cycle, rotated to start at its smallest source.  Such a loop
    is forced: each of its sources emits exactly one edge with range outside
    ``H``, and that range minus ``h1`` is just the next source.
    """
    succ: dict[int, tuple[int, str]] = {}
    for x in range(g.n):
        if h1 >> x & 1:
            continue
        out = [e for e in g.out_edges[x] if e.range & ~h1]
        if len(out) == 1 and out[0].multiplicity == 1:
            r = out[0].range & ~h1
            if r & (r - 1) == 0:
                succ[x] = (r.bit_length() - 1, out[0].id)
    return [Loop(tuple(es), g.vertices[vs[0]]) for vs, es in functional_cycles(succ)]
