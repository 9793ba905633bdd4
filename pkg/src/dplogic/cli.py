"""Command-line interface.

Exit codes: 0 success (or entailment holds), 1 negative answer (entailment
fails, proof rejected), 2 usage or input errors, 3 resource caps exceeded.
With ``--json`` every command prints one object::

    {"schema_version": 1, "command": ..., "ok": true, "result": {...}}

A negative answer is still ``"ok": true``; errors print ``"ok": false``
with an ``"error"`` object instead of a result.  Diagnostics always go to standard error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .calculus import NotDerivable, ProofFormatError, RuleViolation, check_proof, prove_nf, read_proof, write_proof
from .core import Atom, Const, Formula, Neg, WeightError, With
from .kb import KnowledgeBase, expand, fuse, kb_height, query
from .normalform import BlowupLimit, normalize
from .parser import ParseError, decimal_or_none, format_kb, parse_formula, parse_kb, print_formula
from .semantics import FrameTooLarge, Frame, SemanticsError, first_violation, format_dist, height, u_eval

SCHEMA_VERSION = 1


class _Usage(Exception):
    pass


def _weight_json(w):
    return {"fraction": str(w), "decimal": decimal_or_none(w)}


def _weight_text(w) -> str:
    dec = decimal_or_none(w)
    return f"{w} ({dec})" if dec is not None and dec != str(w) else str(w)


def _ast_json(f: Formula):
    if isinstance(f, Atom):
        return {"atom": f.name}
    if isinstance(f, Const):
        return {"const": str(f.w)}
    if isinstance(f, Neg):
        return {"neg": _ast_json(f.sub)}
    tag = "with" if isinstance(f, With) else "times"
    return {tag: [_ast_json(f.left), _ast_json(f.right)]}


def _clauses_json(nf, unicode):
    return [{"weight": _weight_json(c.weight), "body": print_formula(c.body, unicode)} for c in nf]


def _formula_arg(text: str) -> Formula:
    return parse_formula(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise _Usage(f"cannot read {path}: {e}") from None


def _load_kb(path: str) -> KnowledgeBase:
    return KnowledgeBase.from_text(_read(path), Path(path).name)


def _write_out(text: str, out: str | None) -> str | None:
    if out is None:
        return text
    Path(out).write_text(text, encoding="utf-8")
    return None


def cmd_parse(args):
    if os.path.isfile(args.input):
        pairs = parse_kb(_read(args.input))
        clauses = [{"weight": _weight_json(w), "body": print_formula(f, args.unicode)} for w, f in pairs]
        return 0, format_kb(pairs, args.unicode), {"kind": "kb", "clauses": clauses}
    f = _formula_arg(args.input)
    text = print_formula(f, args.unicode) + "\n"
    if args.ast:
        text += repr(f) + "\n"
    return 0, text, {"kind": "formula", "pretty": print_formula(f, args.unicode), "ast": _ast_json(f)}


def cmd_eval(args):
    f = _formula_arg(args.expr)
    frame = Frame.over(f, max_atoms=args.max_atoms)
    d = u_eval(f, frame)
    worlds = [{"world": frame.bits(w), **_weight_json(v)} for w, v in enumerate(d.values)]
    return 0, format_dist(d), {"atoms": list(frame.atom_list), "worlds": worlds}


def cmd_nf(args):
    f = _formula_arg(args.expr)
    nf = normalize(f, args.max_clauses)
    return 0, format_kb(nf.clauses, args.unicode), {"clauses": _clauses_json(nf, args.unicode)}


def cmd_entails(args):
    a, b = _formula_arg(args.lhs), _formula_arg(args.rhs)
    frame = Frame.over(a, b, max_atoms=args.max_atoms)
    bad = first_violation(u_eval(a, frame), u_eval(b, frame))
    result = {"entails": bad is None, "atoms": list(frame.atom_list)}
    if bad is not None:
        result["counterexample"] = frame.bits(bad)
        text = f"not entailed: counterexample world {frame.bits(bad)} over {' '.join(frame.atom_list)}\n"
    else:
        text = "entailed\n"
    if args.proof is not None and bad is None:
        na, nb = normalize(a, args.max_clauses), normalize(b, args.max_clauses)
        proof = prove_nf(na, nb, max_atoms=args.max_atoms)
        header = [
            f"lhs: {print_formula(a)}",
            f"rhs: {print_formula(b)}",
            f"lhs-nf: {print_formula(na.formula())}",
            f"rhs-nf: {print_formula(nb.formula())}",
            "the proof derives rhs-nf from lhs-nf; each side is equivalent to its formula",
        ]
        Path(args.proof).write_text(write_proof(proof, header), encoding="utf-8")
        result["proof"] = args.proof
    return (0 if bad is None else 1), text, result


def cmd_query(args):
    k = _load_kb(args.kb)
    goal = _formula_arg(args.goal)
    w = query(k, goal, max_atoms=args.max_atoms)
    return 0, _weight_text(w) + "\n", {"necessity": _weight_json(w)}


def _combine(args, op):
    k1, k2 = _load_kb(args.kb1), _load_kb(args.kb2)
    k = op(k1, k2)
    text = k.to_text(args.unicode)
    shown = _write_out(text, args.output)
    return 0, shown or "", {"clauses": _clauses_json(k.nf, args.unicode), "output": args.output}


def cmd_fuse(args):
    return _combine(args, lambda a, b: fuse(a, b, args.max_clauses))


def cmd_expand(args):
    return _combine(args, expand)


def cmd_check(args):
    p = read_proof(_read(args.proof_file))
    try:
        check_proof(p)
    except RuleViolation as e:
        return 1, f"rejected: {e}\n", {"valid": False, "rule": e.rule, "reason": e.reason,
                                       "sequent": str(e.node.conclusion)}
    return 0, f"ok: {p.conclusion} ({p.size()} steps)\n", {
        "valid": True, "conclusion": str(p.conclusion), "steps": p.size()}


def cmd_height(args):
    if os.path.isfile(args.input):
        w = kb_height(_load_kb(args.input), max_atoms=args.max_atoms)
    else:
        f = _formula_arg(args.input)
        w = height(u_eval(f, Frame.over(f, max_atoms=args.max_atoms)))
    return 0, _weight_text(w) + "\n", {"height": _weight_json(w)}


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-atoms", type=_positive, default=argparse.SUPPRESS,
                        help="largest number of atoms to enumerate (default 16)")
    common.add_argument("--max-clauses", type=_positive, default=argparse.SUPPRESS,
                        help="largest intermediate normal form (default 4096)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print a machine-readable envelope")
    common.add_argument("--unicode", action="store_true", default=argparse.SUPPRESS,
                        help="print connectives as Unicode symbols")

    top = argparse.ArgumentParser(prog="dplogic", parents=[common],
                                  description="Possibilistic reasoning with exact weights.")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("parse", cmd_parse, "parse a formula or knowledge-base file and print it back")
    p.add_argument("input")
    p.add_argument("--ast", action="store_true", help="also print the syntax tree")
    add("eval", cmd_eval, "print the least informative distribution of a formula").add_argument("expr")
    add("nf", cmd_nf, "print the weighted-clause normal form").add_argument("expr")
    p = add("entails", cmd_entails, "decide whether one formula entails another")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument("--proof", metavar="OUT", help="write a checkable proof of the entailment")
    p = add("query", cmd_query, "necessity degree of a crisp goal in a knowledge base")
    p.add_argument("kb")
    p.add_argument("goal")
    for name, func, text in (("fuse", cmd_fuse, "combine independent sources"),
                             ("expand", cmd_expand, "add the clauses of one base to another")):
        p = add(name, func, text)
        p.add_argument("kb1")
        p.add_argument("kb2")
        p.add_argument("-o", "--output", help="write the result here instead of stdout")
    add("check", cmd_check, "check a proof file").add_argument("proof_file")
    add("height", cmd_height, "degree of consistency of a formula or knowledge base").add_argument("input")
    return top


def _error(kind: str, message: str, code: int, args, **extra):
    print(f"dplogic: {message}", file=sys.stderr)
    if getattr(args, "json", False):
        print(json.dumps({"schema_version": SCHEMA_VERSION, "command": args.command, "ok": False,
                          "error": {"kind": kind, "message": message, **extra}}, sort_keys=True))
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    for name, default in (("max_atoms", 16), ("max_clauses", 4096), ("json", False), ("unicode", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        code, text, result = args.func(args)
    except ParseError as e:
        extra = {"start": e.span.start, "end": e.span.end}
        if e.line is not None:
            extra["line"] = e.line
        return _error("parse", str(e), 2, args, **extra)
    except (ProofFormatError, WeightError, _Usage) as e:
        return _error("input", str(e), 2, args)
    except FrameTooLarge as e:
        return _error("frame-too-large", str(e), 3, args, atoms=e.n, cap=e.cap)
    except BlowupLimit as e:
        return _error("blowup", str(e), 3, args, clauses=e.count, cap=e.cap)
    except SemanticsError as e:
        return _error("input", str(e), 2, args)
    except NotDerivable as e:
        # cannot happen after the semantic check; reported rather than hidden
        return _error("not-derivable", str(e), 1, args)
    if args.json:
        print(json.dumps({"schema_version": SCHEMA_VERSION, "command": args.command,
                          "ok": True, "result": result}, sort_keys=True))
    else:
        sys.stdout.write(text)
    return code
