"""``ug`` command-line driver.

Exit codes: 0 on success, 1 when a ``check-*`` command finds the condition
failing, 2 on parse, validation or flag errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import serialize as ser
from .core import CapacityError, Ultragraph, UltragraphError
from .dot import dual_graph_dot, extended_dot, quotient_dot, ultragraph_dot
from .dualgraph import build_dual_graph, gamma_sets, graph_condition_L, make_fset
from .heredity import (
    DEFAULT_MAX_VERTICES,
    AdmissiblePair,
    breaking_vertices,
    enumerate_admissible_pairs,
    is_admissible,
    is_sat_hereditary,
    saturated_hereditary_closure,
)
from .ideals import classify_ideals, is_primitive
from .paths import condition_K, condition_L
from .quotient import build_quotient
from .ugformat import UgSyntaxError, read_ug

VERBS = (
    "validate",
    "info",
    "closure",
    "breaking",
    "pairs",
    "quotient",
    "check-l",
    "check-k",
    "dual",
    "ideals",
    "primitive",
    "report",
    "dot",
)


class CliError(Exception):
    pass


def _split_names(raw: str) -> list[str]:
    raw = raw.strip()
    if raw.startswith("{") and raw.endswith("}"):
        raw = raw[1:-1]
    return [x.strip() for x in raw.split(",") if x.strip()]


def _vertex_flag(g: Ultragraph, args: argparse.Namespace, flag: str, required: bool = False) -> int:
    raw = getattr(args, flag)
    if raw is None:
        if required:
            raise CliError(f"--{flag} is required for '{args.verb}'")
        return 0
    try:
        return g.mask(_split_names(raw))
    except UltragraphError as exc:
        raise CliError(f"--{flag}: {exc}") from None


def _pair(g: Ultragraph, args: argparse.Namespace, hflag: str = "H", bflag: str = "B", required: bool = True):
    h = _vertex_flag(g, args, hflag, required)
    b = _vertex_flag(g, args, bflag)
    if not is_sat_hereditary(g, h):
        raise CliError(f"--{hflag}: {g.format_set(h)} is not saturated hereditary")
    if not is_admissible(g, AdmissiblePair(h, b)):
        bh = g.format_set(breaking_vertices(g, h))
        raise CliError(f"--{bflag}: {g.format_set(b)} is not contained in B_H = {bh}")
    return AdmissiblePair(h, b)


def _write_dot(args: argparse.Namespace, text: str) -> None:
    if args.dot:
        Path(args.dot).write_text(text, encoding="utf-8")


Result = tuple[dict, str, int]


def cmd_validate(g: Ultragraph, args) -> Result:
    data = {"valid": True, "vertices": g.n, "edges": len(g.edges)}
    return data, f"OK: {g.n} vertices, {len(g.edges)} edge classes", 0


def cmd_info(g: Ultragraph, args) -> Result:
    data = ser.ultragraph_json(g)
    lines = [f"{v['name']}: {v['kind']}, out-multiplicity {v['out_multiplicity']}" for v in data["vertices"]]
    for e in data["edges"]:
        lines.append(f"{e['id']}: {e['source']} -> {{{', '.join(e['range'])}}} * {e['multiplicity']}")
    return data, "\n".join(lines), 0


def cmd_closure(g: Ultragraph, args) -> Result:
    seeds = _vertex_flag(g, args, "H", required=True)
    h = saturated_hereditary_closure(g, [seeds])
    return {"seeds": g.names(seeds), "closure": g.names(h)}, f"closure = {g.format_set(h)}", 0


def cmd_breaking(g: Ultragraph, args) -> Result:
    h = _pair(g, args).h
    data = ser.breaking_json(g, h)
    text = f"B_H = {g.format_set(breaking_vertices(g, h))}"
    if data["readings_differ"]:
        text += f"\n(range-set reading gives {{{','.join(data['B_H_range_set_reading'])}}})"
    return data, text, 0


def cmd_pairs(g: Ultragraph, args) -> Result:
    pairs = enumerate_admissible_pairs(g, args.max_vertices)
    data = {"count": len(pairs), "pairs": [ser.pair_json(g, p) for p in pairs]}
    return data, "\n".join(p.describe(g) for p in pairs), 0


def cmd_quotient(g: Ultragraph, args) -> Result:
    q = build_quotient(g, _pair(g, args))
    _write_dot(args, quotient_dot(q))
    data = ser.quotient_json(q)
    lines = ["vertices: " + " ".join(data["vertices"])]
    for e in data["edges"]:
        lines.append(f"{e['id']}: {e['source']} -> {e['range']} * {e['multiplicity']}")
    return data, "\n".join(lines), 0


def _condition_text(name: str, rep) -> str:
    if rep.holds:
        return f"Condition ({name}): holds"
    loop = rep.witness
    return f"Condition ({name}): FAILS at {loop.base} (loop {' '.join(loop.edges)})"


def cmd_check_l(g: Ultragraph, args) -> Result:
    rep = condition_L(build_quotient(g, _pair(g, args)))
    return ser.condition_json("L", rep), _condition_text("L", rep), 0 if rep.holds else 1


def cmd_check_k(g: Ultragraph, args) -> Result:
    rep = condition_K(g, _pair(g, args).h)
    return ser.condition_json("K", rep), _condition_text("K", rep), 0 if rep.holds else 1


def cmd_dual(g: Ultragraph, args) -> Result:
    q = build_quotient(g, _pair(g, args))
    if args.F is None:
        raise CliError("--F is required for 'dual'")
    try:
        fset = make_fset(q, _split_names(args.F))
    except (UltragraphError, CapacityError) as exc:
        raise CliError(f"--F: {exc}") from None
    dg = build_dual_graph(fset)
    _write_dot(args, dual_graph_dot(dg))
    holds = graph_condition_L(dg)
    data = ser.dual_json(dg, gamma_sets(fset)[1], holds)
    lines = ["vertices: " + " ".join(dg.vertices)]
    lines.extend(f"{s} -> {t}" for s, t in dg.edges)
    lines.append(f"graph Condition (L): {'holds' if holds else 'fails'}")
    return data, "\n".join(lines), 0


def _ideals_text(g: Ultragraph, data: dict) -> str:
    lines = []
    for i, p in enumerate(data["pairs"]):
        mark = "primitive" if p["primitive"] else "not primitive"
        lines.append(f"{i}: ({{{','.join(p['H'])}}}, {{{','.join(p['B'])}}}) {mark} [{p['rule']}]")
    lines.append("covers: " + " ".join(f"{i}<{j}" for i, j in data["hasse"]))
    return "\n".join(lines)


def cmd_ideals(g: Ultragraph, args) -> Result:
    context = _pair(g, args, required=False)
    poset, verdicts = classify_ideals(g, context, args.max_vertices)
    data = ser.ideals_json(g, poset, verdicts)
    return data, _ideals_text(g, data), 0


def cmd_primitive(g: Ultragraph, args) -> Result:
    pair = _pair(g, args, "K", "S")
    v = is_primitive(g, pair.h, pair.b)
    data = ser.pair_json(g, pair)
    data.update(ser.verdict_json(v))
    text = f"{pair.describe(g)}: {'primitive' if v.primitive else 'not primitive'} [{v.rule.value}]"
    if v.evidence:
        parts = []
        for k, val in sorted(v.evidence.items()):
            parts.append(f"{k}={' '.join(val) if isinstance(val, list) else val}")
        text += " " + ", ".join(parts)
    return data, text, 0


def cmd_report(g: Ultragraph, args) -> Result:
    pair = _pair(g, args, required=False)
    q = build_quotient(g, pair)
    lrep = condition_L(q)
    krep = condition_K(g, pair.h)
    poset, verdicts = classify_ideals(g, pair, args.max_vertices)
    data = {
        "ultragraph": ser.ultragraph_json(g),
        "pair": ser.pair_json(g, pair),
        "closure_ok": saturated_hereditary_closure(g, [pair.h]) == pair.h,
        "breaking": ser.breaking_json(g, pair.h),
        "quotient": ser.quotient_json(q),
        "condition_L": ser.condition_json("L", lrep),
        "condition_K": ser.condition_json("K", krep),
        "ideals": ser.ideals_json(g, poset, verdicts),
    }
    lines = [
        f"pair {pair.describe(g)}",
        f"B_H = {g.format_set(breaking_vertices(g, pair.h))}",
        "quotient vertices: " + " ".join(data["quotient"]["vertices"]),
        _condition_text("L", lrep),
        _condition_text("K", krep),
        _ideals_text(g, data["ideals"]),
    ]
    return data, "\n".join(lines), 0


def cmd_dot(g: Ultragraph, args) -> Result:
    if args.H is None and args.B is None:
        text = ultragraph_dot(g)
    else:
        pair = _pair(g, args)
        q = build_quotient(g, pair)
        if args.F is not None:
            text = dual_graph_dot(build_dual_graph(make_fset(q, _split_names(args.F))))
        elif args.extended:
            text = extended_dot(q.ext)
        else:
            text = quotient_dot(q)
    _write_dot(args, text)
    return {"dot": text}, text.rstrip("\n"), 0


COMMANDS: dict[str, Callable[[Ultragraph, argparse.Namespace], Result]] = {
    "validate": cmd_validate,
    "info": cmd_info,
    "closure": cmd_closure,
    "breaking": cmd_breaking,
    "pairs": cmd_pairs,
    "quotient": cmd_quotient,
    "check-l": cmd_check_l,
    "check-k": cmd_check_k,
    "dual": cmd_dual,
    "ideals": cmd_ideals,
    "primitive": cmd_primitive,
    "report": cmd_report,
    "dot": cmd_dot,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ug", description="Ultragraph quotients, Conditions (L)/(K) and ideals.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("file", help="path to a .ug description")
    p.add_argument("--H", help="comma-separated vertices of H (seeds for 'closure')")
    p.add_argument("--B", help="comma-separated breaking vertices in B")
    p.add_argument("--K", help="vertices of K for 'primitive'")
    p.add_argument("--S", help="vertices of S for 'primitive'")
    p.add_argument("--F", help="items of F: [v] or w' for vertex classes, e or e#k for edges")
    p.add_argument("--json", action="store_true", help="print JSON instead of text")
    p.add_argument("--dot", metavar="PATH", help="also write a DOT rendering to PATH")
    p.add_argument("--extended", action="store_true", help="'dot': render the extended ultragraph")
    p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        g = read_ug(args.file)
        data, text, code = COMMANDS[args.verb](g, args)
    except OSError as exc:
        print(f"ug: {exc}", file=err)
        return 2
    except UgSyntaxError as exc:
        print(f"ug: {args.file}: {exc}", file=err)
        return 2
    except (CliError, UltragraphError, CapacityError) as exc:
        print(f"ug: {exc}", file=err)
        return 2
    out.write(ser.dumps(data) if args.json else text + "\n")
    return code


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
