from __future__ import annotations

import pytest

from conftest import GOLDEN
from ultraquot import AdmissiblePair, build_dual_graph, build_quotient, make_fset
from ultraquot.dot import dual_graph_dot, extended_dot, quotient_dot, ultragraph_dot


@pytest.fixture
def q0(ex1, h_ex):
    return build_quotient(ex1, AdmissiblePair(h_ex, 0))


def test_ultragraph_golden(ex1):
    assert ultragraph_dot(ex1) == (GOLDEN / "ex1.dot").read_text()


def test_quotient_golden(q0):
    assert quotient_dot(q0) == (GOLDEN / "ex1_quotient.dot").read_text()


def test_extended_golden(q0):
    assert extended_dot(q0.ext) == (GOLDEN / "ex1_extended.dot").read_text()


def test_dual_golden(q0):
    dg = build_dual_graph(make_fset(q0, ["w'", "e", "g"]))
    assert dual_graph_dot(dg) == (GOLDEN / "ex1_dual.dot").read_text()


def test_labels(ex1):
    text = ultragraph_dot(ex1)
    assert '"w" -> "v" [label="h*inf"];' in text
    assert text.index('"u";') < text.index('"v";') < text.index('"w";') < text.index('"a";')


def test_quoting():
    from ultraquot import Ultragraph

    g = Ultragraph.from_names(["x"], [("p", "x", ["x"], 2)])
    assert '"x" -> "x" [label="p*2"];' in ultragraph_dot(g, name='say "hi"')
    assert ultragraph_dot(g, name='say "hi"').startswith('digraph "say \\"hi\\"" {')
