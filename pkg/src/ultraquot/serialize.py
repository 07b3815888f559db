"""JSON-ready dictionaries for every result type.

Vertex and edge lists keep canonical order; ``json.dumps(..., sort_keys=True)``
then gives byte-stable output.
"""

from __future__ import annotations

import json
from importlib import resources

from .core import INF, Ultragraph
from .dualgraph import DualGraph
from .heredity import AdmissiblePair, breaking_vertices, breaking_vertices_by_range_sets
from .ideals import IdealPoset, PrimitivityVerdict
from .paths import ConditionReport, Loop
from .quotient import ExtendedUltragraph, QuotientUltragraph, singular_vertices


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_schema(verb: str) -> dict:
    """The published JSON schema for the output of ``ug <verb> --json``."""
    return json.loads(resources.files("ultraquot").joinpath("schemas", f"{verb}.json").read_text(encoding="utf-8"))


def multiplicity(m):
    return "inf" if m == INF else m


def ultragraph_json(g: Ultragraph) -> dict:
    return {
        "vertices": [
            {"name": name, "kind": g.vertex_kind(v).value, "out_multiplicity": multiplicity(g.out_multiplicity(v))}
            for v, name in enumerate(g.vertices)
        ],
        "edges": [
            {
                "id": e.id,
                "source": g.vertices[e.source],
                "range": g.names(e.range),
                "multiplicity": multiplicity(e.multiplicity),
            }
            for e in g.edges
        ],
    }


def pair_json(g: Ultragraph, p: AdmissiblePair) -> dict:
    return {"H": g.names(p.h), "B": g.names(p.b)}


def breaking_json(g: Ultragraph, h1: int) -> dict:
    edge_count = breaking_vertices(g, h1)
    range_sets = breaking_vertices_by_range_sets(g, h1)
    return {
        "H": g.names(h1),
        "B_H": g.names(edge_count),
        "B_H_range_set_reading": g.names(range_sets),
        "readings_differ": edge_count != range_sets,
    }


def extended_json(ext: ExtendedUltragraph) -> dict:
    eg = ext.graph
    return {
        "vertices": list(eg.vertices),
        "split": [eg.vertices[ext.base.n + k] for k in range(len(ext.split))],
        "s_prime": {e.id: eg.vertices[e.source] for e in eg.edges},
        "r_prime": {e.id: eg.names(e.range) for e in eg.edges},
    }


def quotient_json(q: QuotientUltragraph) -> dict:
    g = q.base
    return {
        "pair": pair_json(g, q.pair),
        "B_H": g.names(breaking_vertices(g, q.pair.h)),
        "extended": extended_json(q.ext),
        "vertices": [q.class_name(1 << v) for v in q.vertices],
        "edges": [
            {
                "id": e.id,
                "source": q.class_name(1 << e.source),
                "range": q.class_name(e.range),
                "multiplicity": multiplicity(e.multiplicity),
            }
            for e in q.edges
        ],
        "singular": [str(c) for c in singular_vertices(q)],
    }


def loop_json(loop: Loop | None):
    if loop is None:
        return None
    return {"base": loop.base, "edges": list(loop.edges)}


def condition_json(name: str, rep: ConditionReport) -> dict:
    return {"condition": name, "holds": rep.holds, "witness": loop_json(rep.witness)}


def verdict_json(v: PrimitivityVerdict) -> dict:
    return {"primitive": v.primitive, "rule": v.rule.value, "witness": dict(v.evidence) or None}


def ideals_json(g: Ultragraph, poset: IdealPoset, verdicts: list[PrimitivityVerdict]) -> dict:
    pairs = []
    for p, v in zip(poset.nodes, verdicts):
        entry = pair_json(g, p)
        entry.update(verdict_json(v))
        pairs.append(entry)
    return {"pairs": pairs, "hasse": [list(c) for c in poset.hasse]}


def dual_json(dg: DualGraph, gamma: list[str], holds: bool) -> dict:
    return {
        "vertices": list(dg.vertices),
        "edges": [list(e) for e in dg.edges],
        "gamma0": list(dg.gamma0),
        "gamma": list(gamma),
        "condition_L": holds,
    }
