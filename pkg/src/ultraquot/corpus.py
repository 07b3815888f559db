"""Exhaustive corpus of small ultragraphs, one per isomorphism class."""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, permutations
from typing import Iterator, Sequence

from .core import INF, EdgeClass, Ultragraph
from .dualgraph import EdgeCopy, FSet
from .quotient import QuotientUltragraph, singular_vertices

EdgeType = tuple[int, int, object]  # (source, range mask, multiplicity)


def _permute_mask(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for i, j in enumerate(perm):
        if mask >> i & 1:
            out |= 1 << j
    return out


def _mult_key(m) -> int:
    return -1 if m == INF else m


def _canonical(types: Sequence[EdgeType], n: int) -> tuple:
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted((perm[s], _permute_mask(r, perm), _mult_key(m)) for s, r, m in types))
        if best is None or key < best:
            best = key
    return best


def small_ultragraphs(
    max_vertices: int = 3, max_edges: int = 3, multiplicities: Sequence = (1, INF)
) -> Iterator[Ultragraph]:
    """Every ultragraph up to the given size, up to relabelling of vertices.

    Edge classes are unlabelled for deduplication, so repeated identical
    classes are allowed and count once per copy.  Vertices are named
    ``v0, v1, …`` and edge classes ``e0, e1, …``.
    """
    for n in range(1, max_vertices + 1):
        types = [(s, r, m) for s in range(n) for r in range(1, 1 << n) for m in multiplicities]
        seen: set[tuple] = set()
        for k in range(max_edges + 1):
            for combo in combinations_with_replacement(types, k):
                key = _canonical(combo, n)
                if key in seen:
                    continue
                seen.add(key)
                names = tuple(f"v{i}" for i in range(n))
                edges = tuple(
                    EdgeClass(f"e{i}", s, r, INF if m == -1 else m) for i, (s, r, m) in enumerate(key)
                )
                yield Ultragraph(names, edges)


def small_fsets(q: QuotientUltragraph, max_size: int = 4) -> Iterator[FSet]:
    """Every ``F`` with ``|F| <= max_size`` up to permuting parallel edge copies.

    Copies of one class are interchangeable, so only the number taken from
    each class matters; copies ``1..k`` stand for any ``k`` of them.
    """
    sing = [c.mask.bit_length() - 1 for c in singular_vertices(q)]
    caps = [max_size if e.multiplicity == INF else min(e.multiplicity, max_size) for e in q.edges]

    def counts(i: int, budget: int):
        if i == len(caps):
            yield ()
            return
        for c in range(min(caps[i], budget) + 1):
            for rest in counts(i + 1, budget - c):
                yield (c,) + rest

    for k0 in range(min(len(sing), max_size) + 1):
        for f0 in combinations(sing, k0):
            for cs in counts(0, max_size - k0):
                f1 = tuple(
                    EdgeCopy(e.id, j, e.multiplicity) for e, c in zip(q.edges, cs) for j in range(1, c + 1)
                )
                yield FSet(q, f0, f1)
