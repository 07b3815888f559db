"""
The finite graph G_F of a quotient fragment
===========================================

F picks singular vertex classes and individual quotient edges.  Each nonzero
0/1 vector w over the chosen edges marks the part of the vertex classes that
lies in exactly the chosen ranges.
"""

from pathlib import Path

from ultraquot import (
    AdmissiblePair,
    R_omega,
    build_dual_graph,
    build_quotient,
    gamma_sets,
    graph_condition_L,
    make_fset,
    read_ug,
)
from ultraquot.dot import dual_graph_dot
from ultraquot.dualgraph import all_omegas, omega_string

g = read_ug(Path(__file__).parent / "graphs" / "ex1.ug")
q = build_quotient(g, AdmissiblePair(g.mask(["v", "a"]), 0))

f = make_fset(q, ["w'", "e", "g"])
for w in all_omegas(len(f.f1)):
    print(omega_string(w), "R =", R_omega(f, w))

gamma0, gamma = gamma_sets(f)
print("Gamma_0 =", gamma0, " Gamma =", gamma)

dg = build_dual_graph(f)
print(dual_graph_dot(dg))
print("graph (L):", graph_condition_L(dg))
