"""
A quotient ultragraph, step by step
===================================

Four vertices; w emits infinitely many edges into {v} and one edge each into
{a} and {u}.  We quotient by the saturated hereditary set {v, a}.
"""

from pathlib import Path

from ultraquot import (
    AdmissiblePair,
    breaking_vertices,
    build_quotient,
    condition_K,
    condition_L,
    extend,
    read_ug,
    saturated_hereditary_closure,
)

g = read_ug(Path(__file__).parent / "graphs" / "ex1.ug")

# the smallest saturated hereditary set containing v and a is {v, a} itself
h = saturated_hereditary_closure(g, [g.mask(["v"]), g.mask(["a"])])
print("H =", g.format_set(h))

# w sends finitely many edges (f and g) out of H, infinitely many (h) into it
print("B_H =", g.format_set(breaking_vertices(g, h)))

# with B empty, w is split: w' takes over the edges that land inside H
ext = extend(g, AdmissiblePair(h, 0))
for e in ext.graph.edges:
    print(f"  {e.id}: {ext.graph.vertices[e.source]} -> {ext.graph.format_set(e.range)}")

q = build_quotient(g, AdmissiblePair(h, 0))
print("quotient vertices:", *(q.class_name(1 << v) for v in q.vertices))
for e in q.edges:
    print(f"  {e.id}: {q.s(e.id)} -> {q.r(e.id)}")

# r(e) = [w,w'] differs from s(g) = [w], so the loop e g does not violate (L)
print("(L) for B = {}:", condition_L(q).holds)

# keeping w whole (B = {w}) removes w' and the loop e g loses its way out
q_w = build_quotient(g, AdmissiblePair(h, g.mask(["w"])))
print("(L) for B = {w}:", condition_L(q_w).holds, condition_L(q_w).witness)

# Condition (K) fails at u: e g is its only first-return loop
print(condition_K(g, h))
