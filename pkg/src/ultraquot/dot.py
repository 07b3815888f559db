"""Graphviz DOT text for ultragraphs, extended ultragraphs, quotients and ``G_F``.

Output is deterministic: nodes in canonical vertex order, then edges in edge
order with one arrow per range member.
"""

from __future__ import annotations

from typing import Iterable

from .core import INF, Ultragraph, bits
from .dualgraph import DualGraph
from .quotient import ExtendedUltragraph, QuotientUltragraph


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _label(edge_id: str, multiplicity) -> str:
    if multiplicity == INF:
        return f"{edge_id}*inf"
    if multiplicity != 1:
        return f"{edge_id}*{multiplicity}"
    return edge_id


def _render(name: str, nodes: Iterable[str], arrows: Iterable[tuple[str, str, str | None]]) -> str:
    lines = [f"digraph {_q(name)} {{"]
    lines.extend(f"  {_q(n)};" for n in nodes)
    for s, t, label in arrows:
        attr = f" [label={_q(label)}]" if label is not None else ""
        lines.append(f"  {_q(s)} -> {_q(t)}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def ultragraph_dot(g: Ultragraph, name: str = "G") -> str:
    arrows = [
        (g.vertices[e.source], g.vertices[t], _label(e.id, e.multiplicity)) for e in g.edges for t in bits(e.range)
    ]
    return _render(name, g.vertices, arrows)


def extended_dot(ext: ExtendedUltragraph, name: str = "Gbar") -> str:
    return ultragraph_dot(ext.graph, name)


def quotient_dot(q: QuotientUltragraph, name: str = "quotient") -> str:
    label = {v: q.class_name(1 << v) for v in q.vertices}
    arrows = [(label[e.source], label[t], _label(e.id, e.multiplicity)) for e in q.edges for t in bits(e.range)]
    return _render(name, [label[v] for v in q.vertices], arrows)


def dual_graph_dot(dg: DualGraph, name: str = "G_F") -> str:
    return _render(name, dg.vertices, [(s, t, None) for s, t in dg.edges])
