from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings

from strategies import graph_and_pair
from ultraquot import (
    AdmissiblePair,
    CapacityError,
    Ultragraph,
    UltragraphError,
    R_omega,
    build_dual_graph,
    build_quotient,
    condition_L,
    gamma_sets,
    graph_condition_L,
    make_fset,
    r_omega,
)
from ultraquot.corpus import small_fsets
from ultraquot.dualgraph import DualGraph, EdgeCopy, FSet, all_omegas


@pytest.fixture
def q0(ex1, h_ex):
    return build_quotient(ex1, AdmissiblePair(h_ex, 0))


@pytest.fixture
def fset(q0):
    return make_fset(q0, ["w'", "e", "g"])


def test_r_omega_examples(fset):
    assert str(R_omega(fset, "10")) == "[w]"
    assert str(r_omega(fset, "10")) == "[w,w']"
    assert R_omega(fset, "11").is_empty
    assert str(R_omega(fset, (0, 1))) == "[u]"
    with pytest.raises(ValueError):
        R_omega(fset, "00")
    with pytest.raises(ValueError):
        R_omega(fset, "1")


def test_gamma_sets_example(fset):
    assert gamma_sets(fset) == (["01", "10"], [])


def test_gamma_excludes_partial_emitters(q0):
    f = make_fset(q0, ["e"])
    # R(1) = [w,w'] : w emits g which is not in F, w' emits nothing
    assert gamma_sets(f) == ([], ["1"])


def test_dual_graph_example(fset):
    dg = build_dual_graph(fset)
    assert dg.vertices == ("[w']", "e", "g")
    assert set(dg.edges) == {("e", "g"), ("g", "e"), ("e", "[w']")}
    assert graph_condition_L(dg)


def test_empty_f(q0):
    dg = build_dual_graph(make_fset(q0, []))
    assert dg.vertices == () and dg.edges == ()


def test_graph_condition_L_basics():
    assert not graph_condition_L(DualGraph(("x",), (("x", "x"),)))
    assert graph_condition_L(DualGraph(("x", "y"), (("x", "y"),)))
    assert graph_condition_L(DualGraph(("x", "y"), (("x", "x"), ("x", "y"))))


def test_fset_validation(q0, ex1):
    with pytest.raises(UltragraphError, match="not a singular vertex"):
        make_fset(q0, ["[u]"])
    with pytest.raises(UltragraphError):
        make_fset(q0, ["f"])
    with pytest.raises(UltragraphError, match="repeated"):
        make_fset(q0, ["w'", "w'"])
    q = build_quotient(ex1, AdmissiblePair(0, 0))
    with pytest.raises(CapacityError):
        make_fset(q, ["h"])
    assert [c.label for c in make_fset(q, ["h#2", "h#1", "e"]).f1] == ["e", "h#1", "h#2"]
    with pytest.raises(UltragraphError, match="no copy"):
        make_fset(q, ["e#2"])


def test_finite_multiplicity_copies():
    g = Ultragraph.from_names(["x", "y"], [("p", "x", ["y"], 3)])
    q = build_quotient(g, AdmissiblePair(0, 0))
    f = make_fset(q, ["p"])
    assert [c.label for c in f.f1] == ["p#1", "p#2", "p#3"]


def test_omega_order():
    assert ["".join(map(str, w)) for w in all_omegas(2)] == ["01", "10", "11"]


@given(graph_and_pair(max_vertices=3, max_edges=3))
@settings(max_examples=60)
def test_dual_graph_properties(case):
    g, p = case
    q = build_quotient(g, p)
    holds = condition_L(q).holds
    for f in small_fsets(q, max_size=3):
        dg = build_dual_graph(f)
        assert dg == build_dual_graph(f)
        sinks = set(dg.vertices) - {c.label for c in f.f1}
        assert all(dg.out_degree(v) == 0 for v in sinks)
        assert all(s not in sinks for s, _ in dg.edges)
        masks = [r_omega(f, w).mask for w in all_omegas(len(f.f1))]
        assert all(a & b == 0 for a, b in combinations(masks, 2))
        if holds:
            assert graph_condition_L(dg)


def test_fset_size_bound(q0):
    many = tuple(EdgeCopy("e", k, 20) for k in range(1, 18))
    with pytest.raises(CapacityError):
        FSet(q0, (), many)
