"""Text format for proof trees.

One node per line, indented two spaces per level::

    (cut "p |- p" ((cut "p * p"))
      (abs "p |- p * p" ((principal 0))
        (id "p |- p" ()))
      (timesL "p * p |- p" ((principal 0))
        ...))

Each node is ``(rule "sequent" (params) premises...)``.  Sequents use the
formula syntax with ``|-`` as turnstile.  Parameter values are integers or
quoted formulas.  Lines starting with ``;`` are comments and are only allowed
before the tree.  :func:`write_proof` and :func:`read_proof` are exact
inverses on the tree part.
"""

from __future__ import annotations

import json
import re

from ..core import Formula
from ..parser import ParseError, parse_formula, parse_sequent, print_formula
from .proof import ProofNode, Sequent


class ProofFormatError(ValueError):
    pass


def _param_text(params) -> str:
    items = []
    for k in sorted(params):
        v = params[k]
        if isinstance(v, Formula):
            items.append(f"({k} {json.dumps(print_formula(v))})")
        elif isinstance(v, int) and not isinstance(v, bool):
            items.append(f"({k} {v})")
        else:
            raise ProofFormatError(f"cannot serialise parameter {k}={v!r}")
    return "(" + " ".join(items) + ")"


def write_proof(p: ProofNode, header=()) -> str:
    out = [f"; {h}" for h in header]
    stack = [(p, 0, 0)]
    while stack:
        node, depth, closers = stack.pop()
        head = "  " * depth + f"({node.rule} {json.dumps(str(node.conclusion))} {_param_text(node.params)}"
        prem = node.premises
        if not prem:
            out.append(head + ")" * (1 + closers))
            continue
        out.append(head)
        for i in reversed(range(len(prem))):
            stack.append((prem[i], depth + 1, closers + 1 if i == len(prem) - 1 else 0))
    return "\n".join(out) + "\n"


_TOKEN = re.compile(r'\s+|;[^\n]*|\(|\)|"(?:[^"\\]|\\.)*"|[^\s()";]+')


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ProofFormatError(f"unexpected character at offset {pos}")
        tok = m.group()
        if not tok[0].isspace() and tok[0] != ";":
            yield tok, pos
        pos = m.end()


def _sexp(text: str):
    stack: list[list] = [[]]
    for tok, pos in _tokens(text):
        if tok == "(":
            stack.append([])
        elif tok == ")":
            if len(stack) == 1:
                raise ProofFormatError(f"unbalanced ')' at offset {pos}")
            done = stack.pop()
            stack[-1].append(done)
        elif tok.startswith('"'):
            stack[-1].append(("str", json.loads(tok)))
        else:
            stack[-1].append(("sym", tok))
    if len(stack) != 1:
        raise ProofFormatError("unbalanced '('")
    if len(stack[0]) != 1 or not isinstance(stack[0][0], list):
        raise ProofFormatError("expected exactly one proof tree")
    return stack[0][0]


def _param_value(v):
    if isinstance(v, tuple) and v[0] == "sym" and re.fullmatch(r"-?\d+", v[1]):
        return int(v[1])
    if isinstance(v, tuple) and v[0] == "str":
        return parse_formula(v[1])
    raise ProofFormatError(f"bad parameter value {v!r}")


def _node_parts(item):
    if (not isinstance(item, list) or len(item) < 3 or item[0][0:1] != ("sym",)
            or not isinstance(item[1], tuple) or item[1][0] != "str"
            or not isinstance(item[2], list)):
        raise ProofFormatError("node must be (rule \"sequent\" (params) premises...)")
    params = {}
    for entry in item[2]:
        if not isinstance(entry, list) or len(entry) != 2 or not isinstance(entry[0], tuple) \
                or entry[0][0] != "sym":
            raise ProofFormatError(f"bad parameter {entry!r}")
        params[entry[0][1]] = _param_value(entry[1])
    gamma, delta = parse_sequent(item[1][1])
    return item[0][1], Sequent(gamma, delta), params, item[3:]


def read_proof(text: str) -> ProofNode:
    """Parse a proof written by :func:`write_proof`."""
    try:
        tree = _sexp(text)
        # post-order without recursion
        work = [(tree, False)]
        built: list[ProofNode] = []
        while work:
            item, ready = work.pop()
            rule, seq, params, prem = _node_parts(item)
            if ready:
                kids = built[len(built) - len(prem):] if prem else []
                del built[len(built) - len(prem):]
                built.append(ProofNode(rule, seq, tuple(kids), params))
            else:
                work.append((item, True))
                work.extend((c, False) for c in reversed(prem))
        return built[0]
    except ParseError as e:
        raise ProofFormatError(f"bad formula in proof: {e}") from None


def proof_header(text: str) -> list[str]:
    """The leading ``;`` comment lines, without the marker."""
    out = []
    for line in text.splitlines():
        if line.startswith(";"):
            out.append(line[1:].strip())
        elif line.strip():
            break
    return out
