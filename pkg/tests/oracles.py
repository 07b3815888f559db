"""Slow, definition-level reference implementations.

Nothing here calls the fast algorithms under test; only the data classes are
shared.  Parallel edges are expanded into explicit copies (an infinite class
gets two copies, which is all any definition below can distinguish).
"""

from __future__ import annotations

import math
from itertools import product

INF = math.inf


def copies(edges):
    """``[(id, copy, source, range)]`` with multiplicities expanded (inf -> 2)."""
    out = []
    for e in edges:
        k = 2 if e.multiplicity == INF else min(e.multiplicity, 2)
        out.extend((e.id, c, e.source, e.range) for c in range(1, k + 1))
    return out


def subsets(n):
    return range(1 << n)


# -- set algebra --------------------------------------------------------------


def algebra_fixpoint(universe, generators):
    fam = {g & universe for g in generators}
    changed = True
    while changed:
        changed = False
        cur = list(fam)
        for a in cur:
            for b in cur:
                for c in (a | b, a & b, a & ~b):
                    if c not in fam:
                        fam.add(c)
                        changed = True
    return sorted(fam)


# -- hereditary / saturated ----------------------------------------------------


def out_count(g, v):
    return sum((e.multiplicity for e in g.edges if e.source == v), 0)


def hereditary(g, h):
    return all(e.range & ~h == 0 for e in g.edges if h >> e.source & 1)


def saturated(g, h):
    for v in range(g.n):
        if h >> v & 1:
            continue
        m = out_count(g, v)
        if 0 < m < INF and all(e.range & ~h == 0 for e in g.edges if e.source == v):
            return False
    return True


def closure(g, seed):
    """Intersection of every saturated hereditary superset of ``seed``."""
    full = (1 << g.n) - 1
    out = full
    for h in subsets(g.n):
        if h & seed == seed and hereditary(g, h) and saturated(g, h):
            out &= h
    return out


def breaking(g, h):
    out = 0
    for w in range(g.n):
        if out_count(g, w) != INF:
            continue
        leaving = sum((e.multiplicity for e in g.edges if e.source == w and e.range & ~h), 0)
        if 0 < leaving < INF:
            out |= 1 << w
    return out


def admissible_pairs(g):
    pairs = []
    for h in subsets(g.n):
        if not (hereditary(g, h) and saturated(g, h)):
            continue
        bh = breaking(g, h)
        for b in subsets(g.n):
            if b & ~bh == 0:
                pairs.append((h, b))
    return sorted(pairs)


# -- Condition (L) on a quotient ------------------------------------------------


def quotient_loops(q, max_len):
    """All quotient loops of length <= max_len as lists of QuotientEdge."""
    edges = list(q.edges)
    out = []

    def extend(path):
        last = path[-1]
        if last.range >> path[0].source & 1:
            out.append(list(path))
        if len(path) == max_len:
            return
        for f in edges:
            if last.range >> f.source & 1:
                path.append(f)
                extend(path)
                path.pop()

    for e in edges:
        extend([e])
    return out


def violates_L(q, loop):
    n = len(loop)
    for i in range(n):
        e, nxt = loop[i], loop[(i + 1) % n]
        if e.range != 1 << nxt.source:
            return False  # clause (i)
        for f in q.edges:
            if e.range >> f.source & 1 and (f.id != nxt.id or f.multiplicity != 1):
                return False  # clause (ii): an exit
    return True


def condition_L(q):
    return not any(violates_L(q, lp) for lp in quotient_loops(q, len(q.vertices)))


# -- Condition (K) on the ultragraph ----------------------------------------------


def is_subpath(beta, alpha):
    k = len(beta)
    return any(alpha[i : i + k] == beta for i in range(len(alpha) - k + 1))


def condition_K(g, h1, max_len=None):
    """Per vertex outside h1: no loop, or two loops neither a subpath of the other."""
    max_len = max_len or 4 * g.n
    es = copies(g.edges)
    # vertices that can get back to v: plain reachability, used only for pruning
    for v in range(g.n):
        if h1 >> v & 1:
            continue
        back = {v}
        grew = True
        while grew:
            grew = False
            for _, _, s, r in es:
                if s not in back and any(r >> x & 1 for x in back):
                    back.add(s)
                    grew = True
        loops: list[tuple] = []
        found_pair = False
        frontier = [((c,), c) for c in es if c[2] == v]
        for _ in range(max_len):
            nxt = []
            for path, last in frontier:
                if last[3] >> v & 1:
                    lp = tuple((x[0], x[1]) for x in path)
                    for other in loops:
                        if not is_subpath(lp, other) and not is_subpath(other, lp):
                            found_pair = True
                            break
                    loops.append(lp)
                if found_pair:
                    break
                for c in es:
                    if last[3] >> c[2] & 1 and c[2] in back:
                        nxt.append((path + (c,), c))
            if found_pair:
                break
            frontier = nxt
        if loops and not found_pair:
            return False
    return True


# -- reachability, downward directedness ---------------------------------------------


def geq_table(g):
    """``geq[a][b]`` for all vertex sets, straight from paths of bounded length."""
    n = g.n
    # ranges of paths starting at each vertex: explore edge sequences up to |E|
    path_ranges = [set() for _ in range(n)]
    for v in range(n):
        seen_last = set()
        frontier = [e for e in g.edges if e.source == v]
        for _ in range(len(g.edges) + 1):
            nxt = []
            for e in frontier:
                if e.id in seen_last:
                    continue
                seen_last.add(e.id)
                path_ranges[v].add(e.range)
                nxt.extend(f for f in g.edges if e.range >> f.source & 1)
            frontier = nxt
    table = {}
    for a in subsets(n):
        rs = set()
        for v in range(n):
            if a >> v & 1:
                rs |= path_ranges[v]
        for b in subsets(n):
            table[a, b] = b & ~a == 0 or any(b & ~r == 0 for r in rs)
    return table


def downward_directed(g, h1):
    table = geq_table(g)
    outside = [a for a in subsets(g.n) if a & ~h1]
    for a, b in product(outside, repeat=2):
        if not any(table[a, c] and table[b, c] for c in outside):
            return False
    return True


def exitless_loops(g, h1):
    """Simple loops avoiding H with no exit in G minus H, as rotation-canonical id tuples."""
    es = copies(g.edges)
    out = set()

    def extend(path, visited):
        last = path[-1]
        v0 = path[0][2]
        if last[3] >> v0 & 1:
            n = len(path)
            ok = True
            for i in range(n):
                e, nxt = path[i], path[(i + 1) % n]
                if e[3] & ~(1 << nxt[2]) & ~h1:
                    ok = False
                if any(f[2] == e[2] and (f[0], f[1]) != (e[0], e[1]) and f[3] & ~h1 for f in es):
                    ok = False
            if ok:
                k = min(range(n), key=lambda i: path[i][2])
                rot = path[k:] + path[:k]
                out.add(tuple(x[0] for x in rot))
        for c in es:
            if last[3] >> c[2] & 1 and c[2] not in visited and c[3] & ~h1 and not h1 >> c[2] & 1:
                extend(path + [c], visited | {c[2]})

    for c in es:
        if c[3] & ~h1 and not h1 >> c[2] & 1:
            extend([c], {c[2]})
    return out
