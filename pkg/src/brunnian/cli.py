"""Command-line front end.

Exit codes: 0 success (or realizable), 1 domain rejection, 2 input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence, TextIO

from brunnian.alternation import alternation_table, check_theorem7
from brunnian.core.blocks import MultiBlockForm, SeifertBlock2, decompose_block2, decompose_multi
from brunnian.core.formats import (block2_from_json, block2_to_json, dumps, format_matrix_text,
                                   load_json, multi_from_json, multi_to_json, parse_matrix_text)
from brunnian.core.matrix import IntMatrix
from brunnian.core.polynomial import alexander, format_poly
from brunnian.core.sublinks import sublink_vanishing
from brunnian.errors import (BrunnianError, InadmissibleChain, InvalidHistory, NotBlockForm,
                             NotRealizable, ParseError)
from brunnian.realizability.engines import ENGINES, check_block
from brunnian.realizability.plan import construction_plan
from brunnian.sequences import extend_listing, format_seq, parse_chain, quotient

OK, REJECTED, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    """Unreadable or malformed input; maps to exit code 2."""


def _read(source: str, stdin: TextIO) -> str:
    if source == "-":
        return stdin.read()
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror or exc}") from None


def _parse_parts(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        parts = tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise InputError(f"--parts must be comma-separated integers, got {text!r}") from None
    if not parts or any(p < 1 for p in parts):
        raise InputError("--parts needs positive sizes")
    return parts


def _load(text: str, lenient_e: bool = False) -> IntMatrix | SeifertBlock2 | MultiBlockForm:
    """A matrix from text, or a block form from JSON (detected by a leading '{')."""
    if text.lstrip().startswith("{"):
        doc = load_json(text)
        if "parts" in doc:
            return multi_from_json(doc, lenient_e)
        return block2_from_json(doc)
    return parse_matrix_text(text)


def _as_matrix(obj) -> IntMatrix:
    if isinstance(obj, IntMatrix):
        return obj
    return obj.matrix()


def _as_block2(obj) -> SeifertBlock2:
    if isinstance(obj, SeifertBlock2):
        return obj
    if isinstance(obj, MultiBlockForm):
        raise InputError("expected a 2-component block form, got a multi-part form")
    return decompose_block2(obj)


def _as_multi(obj, parts: tuple[int, ...] | None, lenient_e: bool) -> MultiBlockForm:
    if isinstance(obj, MultiBlockForm):
        if parts is not None and parts != obj.parts:
            raise InputError(f"--parts {parts} disagrees with the document's parts {obj.parts}")
        return obj
    if parts is None:
        raise InputError("--parts is required for matrix input")
    return decompose_multi(_as_matrix(obj), parts, lenient_e)


def _tuple_text(t: tuple[int, ...]) -> str:
    return "(" + ", ".join(str(x) for x in t) + ")"


# --- subcommands -----------------------------------------------------------

def cmd_check(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    b = _as_block2(_load(_read(args.input, stdin)))
    verdict = check_block(b, reverse=args.reverse_order)
    if args.format == "json":
        doc = verdict.to_json()
        doc["block"] = block2_to_json(b)
        out.write(dumps(doc) + "\n")
    else:
        out.write("realizable\n" if verdict.realizable else "not realizable\n")
        if verdict.witness is not None:
            out.write("witness: " + (", ".join(map(format_seq, verdict.witness)) or "(empty)") + "\n")
        if verdict.failed_column is not None:
            out.write(f"failed at column {verdict.failed_column}\n")
        for v in verdict.violations:
            out.write(f"violation: {v}\n")
        for note in verdict.notes:
            out.write(f"note: {note}\n")
    return OK if verdict.realizable else REJECTED


def cmd_enumerate(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    k = args.k
    if args.engine != "all":
        tuples = sorted(ENGINES[args.engine](k))
        if args.format == "json":
            out.write(dumps({"k": k, "engine": args.engine, "tuples": [list(t) for t in tuples]}) + "\n")
        else:
            out.writelines(_tuple_text(t) + "\n" for t in tuples)
        return OK

    results = {name: ENGINES[name](k) for name in ("sequence", "chord", "constraint")}
    gen_agree = results["sequence"] == results["chord"]
    superset = results["sequence"] <= results["constraint"]
    surplus = sorted(results["constraint"] - results["sequence"])
    consistent = gen_agree and superset
    if args.format == "json":
        out.write(dumps({
            "k": k,
            "engines": {n: [list(t) for t in sorted(s)] for n, s in results.items()},
            "generative_agree": gen_agree,
            "constraint_superset": superset,
            "surplus": [list(t) for t in surplus],
        }) + "\n")
    else:
        out.writelines(_tuple_text(t) + "\n" for t in sorted(results["sequence"]))
        for name, s in results.items():
            out.write(f"# {name}: {len(s)}\n")
        out.write("# sequence and chord engines " + ("agree" if gen_agree else "DISAGREE") + "\n")
        out.write(f"# constraint surplus: {len(surplus)}"
                  + ("" if superset else " (constraint engine MISSES realizable tuples)") + "\n")
        for t in surplus:
            out.write(f"# surplus {_tuple_text(t)}\n")
    return OK if consistent else REJECTED


def cmd_alexander(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    m = _as_matrix(_load(_read(args.input, stdin), args.lenient_e))
    poly = alexander(m)
    if args.format == "json":
        out.write(dumps({"alexander": format_poly(poly), "coeffs": list(poly.coeffs)}) + "\n")
    else:
        out.write(format_poly(poly) + "\n")
    return OK


def cmd_sublinks(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    obj = _load(_read(args.input, stdin), args.lenient_e)
    f = _as_multi(obj, _parse_parts(args.parts), args.lenient_e)
    if len(f.parts) < 2:
        raise InputError("sublink test needs at least 2 parts")
    warnings = check_theorem7(f)
    report = sublink_vanishing(f)
    if args.format == "json":
        out.write(dumps({
            "warnings": [w.to_json() for w in warnings],
            "subsets": [{"subset": list(v.subset), "determinant": format_poly(v.determinant),
                         "vanishes": v.vanishes} for v in report.verdicts],
            "all_vanish": report.all_vanish,
        }) + "\n")
    else:
        for w in warnings:
            out.write(f"warning: {w}\n")
        for v in report.verdicts:
            label = "{" + ",".join(map(str, v.subset)) + "}"
            status = "vanishes" if v.vanishes else "does not vanish"
            out.write(f"{label}: {format_poly(v.determinant)} {status}\n")
    return OK if report.all_vanish else REJECTED


def cmd_sequences(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    text = _read(args.chain[1:], stdin) if args.chain.startswith("@") else args.chain
    if text == "-":
        text = stdin.read()
    chain = parse_chain(text)
    try:
        members = extend_listing(chain)
    except InvalidHistory as exc:
        raise InadmissibleChain(str(exc)) from None
    classes = quotient(members)
    m = len(chain) + 2
    if args.format == "json":
        out.write(dumps({
            "chain": [format_seq(s) for s in chain],
            "modulus": m,
            "set": [format_seq(s) for s in members],
            "classes": [[format_seq(s) for s in ms] for _, ms in classes],
        }) + "\n")
    else:
        hist = ", ".join(map(format_seq, chain))
        out.write(f"S({hist}, {m}) = {{" + ", ".join(map(format_seq, members)) + "}\n")
        out.write(f"S({hist}, {m})/~{m} = {{"
                  + ", ".join("[" + format_seq(rep) + "]" for rep, _ in classes) + "}\n")
        for rep, ms in classes:
            out.write(f"[{format_seq(rep)}] = {{" + ", ".join(map(format_seq, ms)) + "}\n")
    return OK


def cmd_plan(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    b = _as_block2(_load(_read(args.input, stdin)))
    try:
        plan = construction_plan(b)
    except NotRealizable as exc:
        err.write(f"error: {exc}\n")
        for v in exc.verdict.violations if exc.verdict else ():
            err.write(f"violation: {v}\n")
        return REJECTED
    if args.format == "json":
        out.write(dumps(plan.to_json()) + "\n")
    else:
        out.writelines(line + "\n" for line in plan.lines())
    return OK


def cmd_decompose(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    obj = _load(_read(args.input, stdin), args.lenient_e)
    parts = _parse_parts(args.parts)
    if parts is not None or isinstance(obj, MultiBlockForm):
        f = _as_multi(obj, parts, args.lenient_e)
        if args.format == "json":
            out.write(dumps(multi_to_json(f)) + "\n")
        else:
            out.write(f"parts: {', '.join(map(str, f.parts))}\n")
            for l, (e, h) in enumerate(zip(f.E_blocks, f.H_blocks), start=1):
                out.write(f"E{l}: {' '.join(map(str, e.signs))}\n")
                out.write(f"H{l}:\n{format_matrix_text(h)}")
            for (l, m), blk in sorted(f.P_blocks.items()):
                if any(any(r) for r in blk.entries):
                    out.write(f"P{l},{m}:\n{format_matrix_text(blk)}")
        return OK
    b = _as_block2(obj)
    if args.format == "json":
        out.write(dumps(block2_to_json(b)) + "\n")
    else:
        out.write(f"n: {b.n}\nE: {' '.join(map(str, b.E.signs))}\n")
        out.write(f"H:\n{format_matrix_text(b.H)}")
        t = alternation_table(b.H, reverse=args.reverse_order)
        out.write(f"alternations:\n{t.render()}\n")
    return OK


# --- parser ----------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser, parts: bool = False, reverse: bool = False) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--lenient-E", dest="lenient_e", action="store_true",
                   help="accept any sign pattern in the E blocks of multi-part forms")
    if parts:
        p.add_argument("--parts", help="comma-separated part sizes, e.g. 2,2,2")
    if reverse:
        p.add_argument("--reverse-order", dest="reverse_order", action="store_true",
                       help="read H in the reversed loop order")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brunnian", description="Seifert matrices of Brunnian links.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide realizability of a 2-component block form")
    p.add_argument("input", help="matrix text or JSON file, or '-' for stdin")
    _add_common(p, reverse=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="list realizable alternation tuples for k loops")
    p.add_argument("k", type=int)
    p.add_argument("--engine", choices=(*ENGINES, "all"), default="sequence")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("alexander", help="print det(M - tM^T)")
    p.add_argument("input")
    _add_common(p)
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("sublinks", help="test vanishing of proper-sublink determinants")
    p.add_argument("input")
    _add_common(p, parts=True)
    p.set_defaults(func=cmd_sublinks)

    p = sub.add_parser("sequences", help="expand a chain of residue sequences")
    p.add_argument("chain", help="e.g. '(0)_2' or '(1)_2 (0, 1)_3'; '@file' or '-' to read")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_sequences)

    p = sub.add_parser("plan", help="construction recipe for a realizable block form")
    p.add_argument("input")
    _add_common(p)
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("decompose", help="split a matrix into its blocks")
    p.add_argument("input")
    _add_common(p, parts=True, reverse=True)
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv: Sequence[str] | None = None, stdin: TextIO | None = None,
         stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.func(args, out, err, stdin)
    except (NotBlockForm, InadmissibleChain) as exc:
        err.write(f"rejected: {exc}\n")
        return REJECTED
    except (InputError, ParseError) as exc:
        err.write(f"error: {exc}\n")
        return BAD_INPUT
    except (BrunnianError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
