"""
Gauge-invariant ideals and which of them are primitive
======================================================

Every admissible pair labels an ideal; the pairs are ordered by
(K1, S1) <= (K2, S2) iff K1 is inside K2 and S1 is inside K2 together with S2.
"""

from pathlib import Path

from ultraquot import classify_ideals, read_ug

g = read_ug(Path(__file__).parent / "graphs" / "ex1.ug")

poset, verdicts = classify_ideals(g)
for i, (p, v) in enumerate(zip(poset.nodes, verdicts)):
    tag = "primitive" if v.primitive else "-"
    print(f"{i}: {p.describe(g):22} {tag:10} {v.rule.value:8} {v.evidence or ''}")

print("covering pairs:", list(poset.hasse))
print("lattice:", poset.is_lattice())

# meets and joins exist for every pair of nodes
print("meet(2, 3) =", poset.nodes[poset.meet(2, 3)].describe(g))
print("join(2, 3) =", poset.nodes[poset.join(2, 3)].describe(g))
