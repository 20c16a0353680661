"""Command-line surface: info / ring / milnor / verify / scan.

Exit codes: 0 verified or printed, 1 verification failure, 2 invalid
input.  All exports are deterministic: fixed basis order, canonical
"num/den" rationals, newline-terminated UTF-8.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arith import rat_str
from .amodel import FrobeniusAlgebra, build_state_space
from .bmodel import MilnorRing
from .mirror import find_generators, verification_suite
from .singularity import make_chain, make_dual

SCHEMA = "lg-mirror-ring/1"
MAX_PQ = 64


class InputError(Exception):
    pass


def _check_bounds(*values):
    for v in values:
        if not 2 <= v <= MAX_PQ:
            raise InputError(f"p and q must lie in 2..{MAX_PQ}, got {v}")


def _mono_label(m) -> str:
    a, b = m
    parts = []
    if a == 1:
        parts.append("x")
    elif a > 1:
        parts.append(f"x^{a}")
    if b == 1:
        parts.append("y")
    elif b > 1:
        parts.append(f"y^{b}")
    return " ".join(parts) or "1"


def cmd_info(args) -> int:
    _check_bounds(args.p, args.q)
    s = make_chain(args.p, args.q)
    dual = make_dual(args.p, args.q)
    space = build_state_space(s)
    gp = find_generators(s)
    unit = space.basis[space.unit_pos].label()
    print(f"W = {s.poly().render()}   dual = {dual.poly().render()}")
    print(f"weights W: q_x={rat_str(s.q_x)} q_y={rat_str(s.q_y)}   "
          f"dual: q_x={rat_str(dual.q_x)} q_y={rat_str(dual.q_y)}")
    print(f"c_hat = {rat_str(s.c_hat)}   mu(W) = {s.mu}   mu(dual) = {dual.mu}")
    print(f"d = {s.d} ({gp.regime} regime)   dim H = {space.dim}   unit = {unit}")
    klabel = "broad" if gp.k_index == 0 else f"e{gp.k_index}"
    print(f"generators: {klabel}, e{gp.m_index}")
    return 0


def ring_document(p: int, q: int) -> dict:
    s = make_chain(p, q)
    space = build_state_space(s)
    alg = FrobeniusAlgebra(space)
    recs = sorted(alg.structure_constant_records(),
                  key=lambda r: (r["a"], r["b"], r["c"]))
    return {
        "schema": SCHEMA,
        "p": p,
        "q": q,
        "d": s.d,
        "basis": [{"label": b.label(), "k": b.k, "degree": rat_str(b.degree)}
                  for b in space.basis],
        "unit_index": space.unit_pos,
        "eta": [[rat_str(x) for x in row] for row in alg.eta],
        "structure_constants": recs,
    }


def milnor_document(p: int, q: int) -> dict:
    ring = MilnorRing(make_dual(p, q).poly())
    return {
        "schema": SCHEMA,
        "p": p,
        "q": q,
        "polynomial": ring.W.render(),
        "basis": [_mono_label(m) for m in ring.basis],
        "ideal_basis": [g.render() for g in ring.ideal_basis],
        "top_monomial": _mono_label(ring.top_monomial),
        "gram": [[rat_str(x) for x in row] for row in ring.gram_matrix()],
    }


def _ring_markdown(doc: dict) -> str:
    labels = [b["label"] for b in doc["basis"]]
    lines = [f"# quantum ring of x^{doc['p']} + x*y^{doc['q']}", ""]
    lines.append("| element | degree |")
    lines.append("|---|---|")
    for b in doc["basis"]:
        lines.append(f"| {b['label']} | {b['degree']} |")
    lines.append("")
    lines.append("| a | b | a*b |")
    lines.append("|---|---|---|")
    by_pair = {(r["a"], r["b"]): r for r in doc["structure_constants"]}
    n = len(labels)
    for a in range(n):
        for b in range(a, n):
            r = by_pair.get((a, b))
            prod = f"{r['value']} * {labels[r['c']]}" if r else "0"
            lines.append(f"| {labels[a]} | {labels[b]} | {prod} |")
    return "\n".join(lines)


def _milnor_markdown(doc: dict) -> str:
    lines = [f"# Milnor ring of {doc['polynomial']}", ""]
    lines.append(f"basis: {', '.join(doc['basis'])}")
    lines.append(f"ideal basis: {'; '.join(doc['ideal_basis'])}")
    lines.append(f"socle: {doc['top_monomial']}")
    lines.append("")
    header = "| | " + " | ".join(doc["basis"]) + " |"
    lines.append(header)
    lines.append("|" + "---|" * (len(doc["basis"]) + 1))
    for label, row in zip(doc["basis"], doc["gram"]):
        lines.append(f"| {label} | " + " | ".join(row) + " |")
    return "\n".join(lines)


def _ring_csv(doc: dict) -> str:
    lines = ["a,b,c,value"]
    for r in doc["structure_constants"]:
        lines.append(f"{r['a']},{r['b']},{r['c']},{r['value']}")
    return "\n".join(lines)


def _milnor_csv(doc: dict) -> str:
    lines = ["u,v,value"]
    for u, row in enumerate(doc["gram"]):
        for v, val in enumerate(row):
            lines.append(f"{u},{v},{val}")
    return "\n".join(lines)


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_ring(args) -> int:
    _check_bounds(args.p, args.q)
    doc = ring_document(args.p, args.q)
    if args.format == "json":
        _emit(json.dumps(doc, indent=2), args.out)
    elif args.format == "md":
        _emit(_ring_markdown(doc), args.out)
    else:
        _emit(_ring_csv(doc), args.out)
    return 0


def cmd_milnor(args) -> int:
    _check_bounds(args.p, args.q)
    doc = milnor_document(args.p, args.q)
    if args.format == "json":
        _emit(json.dumps(doc, indent=2), args.out)
    elif args.format == "md":
        _emit(_milnor_markdown(doc), args.out)
    else:
        _emit(_milnor_csv(doc), args.out)
    return 0


def cmd_verify(args) -> int:
    _check_bounds(args.p, args.q)
    results = verification_suite(args.p, args.q)
    ok = True
    for name, passed, detail in results:
        status = "pass" if passed else "FAIL"
        print(f"[{status}] {name}: {detail}")
        ok = ok and passed
    print(f"verify ({args.p},{args.q}): {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_scan(args) -> int:
    _check_bounds(args.p_max, args.q_max)
    all_ok = True
    header = "p\\q " + " ".join(f"{q:>4}" for q in range(2, args.q_max + 1))
    print(header)
    for p in range(2, args.p_max + 1):
        row = [f"{p:>3} "]
        for q in range(2, args.q_max + 1):
            results = verification_suite(p, q)
            ok = all(r[1] for r in results)
            if not ok:
                all_ok = False
                first = next(r for r in results if not r[1])
                print(f"FAIL at ({p},{q}): {first[0]}: {first[2]}", file=sys.stderr)
            row.append(f"{'ok' if ok else 'FAIL':>4}")
        print(" ".join(row))
    print("scan:", "all pass" if all_ok else "FAILURES found")
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chainmirror",
        description="Exact mirror-symmetry verification for x^p + x*y^q")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pq(sp, fmt=False):
        sp.add_argument("p", type=int)
        sp.add_argument("q", type=int)
        if fmt:
            sp.add_argument("--format", choices=["json", "md", "csv"], default="json")
            sp.add_argument("--out", default=None)

    add_pq(sub.add_parser("info", help="singularity and state-space summary"))
    add_pq(sub.add_parser("ring", help="export the quantum ring"), fmt=True)
    add_pq(sub.add_parser("milnor", help="export the dual Milnor ring"), fmt=True)
    add_pq(sub.add_parser("verify", help="run every check for one (p,q)"))
    scan = sub.add_parser("scan", help="verify a whole (p,q) grid")
    scan.add_argument("p_max", type=int)
    scan.add_argument("q_max", type=int)
    return parser


COMMANDS = {
    "info": cmd_info,
    "ring": cmd_ring,
    "milnor": cmd_milnor,
    "verify": cmd_verify,
    "scan": cmd_scan,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage already; normalize other codes
        return 2 if exc.code not in (0,) else 0
    try:
        return COMMANDS[args.command](args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
