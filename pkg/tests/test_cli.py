from __future__ import annotations

import io
import json

import jsonschema
import pytest

from conftest import FIXTURES, GOLDEN
from ultraquot.cli import VERBS, run
from ultraquot.serialize import load_schema

EX1 = str(FIXTURES / "ex1.ug")


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_breaking_text():
    assert call("breaking", EX1, "--H", "v,a") == (0, "B_H = {w}\n", "")


def test_check_k_fails_with_exit_1():
    code, out, _ = call("check-k", EX1, "--H", "v,a")
    assert code == 1
    assert out == "Condition (K): FAILS at u (loop e g)\n"


def test_check_l():
    assert call("check-l", EX1, "--H", "v,a")[0] == 0
    code, out, _ = call("check-l", EX1, "--H", "v,a", "--B", "w")
    assert code == 1 and "loop e g" in out


def test_validate():
    assert call("validate", EX1)[0] == 0
    code, _, err = call("validate", str(FIXTURES / "empty-range.ug"))
    assert code == 2 and "empty range" in err


def test_missing_file(tmp_path):
    assert call("validate", str(tmp_path / "nope.ug"))[0] == 2


def test_syntax_error_exit(tmp_path):
    p = tmp_path / "bad.ug"
    p.write_text("vertex x\nedge e x -> {x}\n")
    code, _, err = call("validate", str(p))
    assert code == 2 and "line 2" in err


@pytest.mark.parametrize(
    "argv,needle",
    [
        (("breaking", EX1, "--H", "v,zz"), "--H: unknown vertex 'zz'"),
        (("quotient", EX1, "--H", "v,a", "--B", "q"), "--B: unknown vertex 'q'"),
        (("quotient", EX1, "--H", "u"), "--H: {u} is not saturated hereditary"),
        (("quotient", EX1, "--H", "v,a", "--B", "u"), "--B:"),
        (("quotient", EX1), "--H is required"),
        (("primitive", EX1, "--K", "v,a", "--S", "x"), "--S: unknown vertex 'x'"),
        (("dual", EX1, "--H", "v,a"), "--F is required"),
        (("dual", EX1, "--H", "v,a", "--F", "[u]"), "--F:"),
    ],
)
def test_flag_errors(argv, needle):
    code, _, err = call(*argv)
    assert code == 2
    assert needle in err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        run(["frobnicate", EX1])
    assert info.value.code == 2


def test_quotient_json_golden():
    code, out, _ = call("quotient", EX1, "--H", "v,a", "--json")
    assert code == 0
    assert out == (GOLDEN / "ex1_quotient.json").read_text()


def test_ideals_json_golden():
    assert call("ideals", EX1, "--json")[1] == (GOLDEN / "ex1_ideals.json").read_text()


def test_ideals_text():
    code, out, _ = call("ideals", EX1, "--H", "v,a")
    assert code == 0
    assert out.splitlines() == [
        "0: ({v,a}, {}) primitive [Case2]",
        "1: ({v,a}, {w}) not primitive [Case1]",
        "2: ({u,v,w,a}, {}) not primitive [Improper]",
        "covers: 0<1 1<2",
    ]


def test_dot_file_written(tmp_path):
    target = tmp_path / "q.dot"
    code, _, _ = call("quotient", EX1, "--H", "v,a", "--dot", str(target))
    assert code == 0
    assert target.read_text() == (GOLDEN / "ex1_quotient.dot").read_text()


def test_dot_verb():
    assert call("dot", EX1)[1] == (GOLDEN / "ex1.dot").read_text()
    assert call("dot", EX1, "--H", "v,a", "--extended")[1] == (GOLDEN / "ex1_extended.dot").read_text()
    assert call("dot", EX1, "--H", "v,a", "--F", "w',e,g")[1] == (GOLDEN / "ex1_dual.dot").read_text()


ARGS = {
    "validate": (),
    "info": (),
    "closure": ("--H", "v"),
    "breaking": ("--H", "v,a"),
    "pairs": (),
    "quotient": ("--H", "v,a"),
    "check-l": ("--H", "v,a", "--B", "w"),
    "check-k": ("--H", "v,a"),
    "dual": ("--H", "v,a", "--F", "w',e,g"),
    "ideals": (),
    "primitive": ("--K", "v,a", "--S", "w"),
    "report": ("--H", "v,a"),
    "dot": ("--H", "v,a"),
}


# the one-vertex fixtures use the trivial pair: --H "" is the empty set
SMALL_ARGS = {
    "closure": ("--H", "x"),
    "breaking": ("--H", ""),
    "quotient": ("--H", ""),
    "check-l": ("--H", ""),
    "check-k": ("--H", ""),
    "dual": ("--H", "", "--F", "l1,l2"),
    "primitive": ("--K", ""),
    "dot": ("--H", ""),
}


@pytest.mark.parametrize("verb", VERBS)
@pytest.mark.parametrize("graph", ["ex1.ug", "two.ug", "cyc1.ug"])
def test_json_matches_schema_and_is_deterministic(verb, graph):
    args = ARGS[verb] if graph == "ex1.ug" else SMALL_ARGS.get(verb, ())
    path = str(FIXTURES / graph)
    if verb == "dual" and graph == "cyc1.ug":
        args = ("--H", "", "--F", "l")
    code, out, err = call(verb, path, *args, "--json")
    assert code in (0, 1), err
    jsonschema.validate(json.loads(out), load_schema(verb))
    assert call(verb, path, *args, "--json")[1] == out


def test_report_flags_reading_difference(tmp_path):
    p = tmp_path / "diff.ug"
    p.write_text("vertices w v a\nedge h : w -> {v} * inf\nedge f : w -> {a}\n")
    code, out, _ = call("report", str(p), "--H", "a", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["breaking"]["readings_differ"] is True
    assert data["breaking"]["B_H"] == [] and data["breaking"]["B_H_range_set_reading"] == ["w"]
