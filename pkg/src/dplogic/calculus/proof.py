"""Sequents, proof trees and the rule checker."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Iterator, Mapping, Optional, Sequence

from ..core import (
    ONE,
    ZERO,
    Const,
    Formula,
    Neg,
    Times,
    With,
    is_l1,
    match_arrow,
    match_oplus,
    match_par,
    w_times,
)
from ..parser import print_formula, print_sequent

RULES = (
    "id", "cut", "exL", "exR", "wL", "wR", "abs",
    "andL", "andR", "timesL", "timesR", "oplusL", "oplusR",
    "parL", "parR", "arrowL", "arrowR", "negL", "negR",
    "one", "oneAx", "zeroAx", "distr", "Sprime", "timesDef", "negDef",
)

ARITY = {
    "id": 0, "oneAx": 0, "zeroAx": 0, "distr": 0, "Sprime": 0, "timesDef": 0, "negDef": 0,
    "cut": 2, "andR": 2, "timesR": 2, "oplusL": 2, "parL": 2, "arrowL": 2,
}


@dataclass(frozen=True)
class Sequent:
    gamma: tuple[Formula, ...] = ()
    delta: tuple[Formula, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(self.gamma))
        object.__setattr__(self, "delta", tuple(self.delta))

    def __str__(self):
        return print_sequent(self.gamma, self.delta)


@dataclass(frozen=True, eq=True)
class ProofNode:
    rule: str
    conclusion: Sequent
    premises: tuple["ProofNode", ...] = ()
    params: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))
        object.__setattr__(self, "params", dict(self.params))

    __hash__ = None  # params is a dict

    def walk(self) -> Iterator["ProofNode"]:
        """Nodes in preorder."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.premises))

    def size(self) -> int:
        return sum(1 for _ in self.walk())

    def depth(self) -> int:
        best = 0
        stack = [(self, 1)]
        while stack:
            node, d = stack.pop()
            best = max(best, d)
            stack.extend((p, d + 1) for p in node.premises)
        return best


class RuleViolation(Exception):
    def __init__(self, rule: str, node: ProofNode, reason: str):
        self.rule, self.node, self.reason = rule, node, reason
        super().__init__(f"{rule} at [{node.conclusion}]: {reason}")


# --------------------------------------------------------------------------
# checking
# --------------------------------------------------------------------------


class _Fail(Exception):
    pass


def _require(cond: bool, reason: str):
    if not cond:
        raise _Fail(reason)


def _ms(fs: Sequence[Formula]) -> Counter:
    return Counter(fs)


def _minus(c: Counter, f: Formula, what: str) -> Counter:
    _require(c[f] > 0, f"{what} lacks {print_formula(f)}")
    out = c.copy()
    out[f] -= 1
    if not out[f]:
        del out[f]
    return out


def _principal(node: ProofNode, side: str) -> tuple[Formula, Counter]:
    seq = node.conclusion.gamma if side == "L" else node.conclusion.delta
    i = node.params.get("principal")
    _require(isinstance(i, int) and not isinstance(i, bool), "missing principal index")
    _require(0 <= i < len(seq), f"principal index {i} out of range")
    rest = list(seq[:i]) + list(seq[i + 1:])
    return seq[i], _ms(rest)


def _side_param(node: ProofNode) -> int:
    s = node.params.get("side")
    _require(s in (0, 1) and not isinstance(s, bool), "side must be 0 or 1")
    return s


def _shape(f: Formula, cls, what: str):
    _require(isinstance(f, cls), f"principal formula {print_formula(f)} is not {what}")
    return f.left, f.right


def _derived(f: Formula, matcher, what: str):
    m = matcher(f)
    _require(m is not None, f"principal formula {print_formula(f)} is not {what}")
    return m


def _const(f: Formula, what: str):
    _require(isinstance(f, Const), f"{what} {print_formula(f)} is not a constant")
    return f.w


def _check(node: ProofNode):
    rule = node.rule
    _require(rule in RULES, f"unknown rule {rule!r}")
    prem = node.premises
    _require(len(prem) == ARITY.get(rule, 1),
             f"expected {ARITY.get(rule, 1)} premise(s), got {len(prem)}")
    G, D = _ms(node.conclusion.gamma), _ms(node.conclusion.delta)
    ps = [p.conclusion for p in prem]
    PG = [_ms(s.gamma) for s in ps]
    PD = [_ms(s.delta) for s in ps]
    gamma, delta = node.conclusion.gamma, node.conclusion.delta

    if rule == "id":
        _require(len(gamma) == 1 and len(delta) == 1 and gamma[0] == delta[0],
                 "identity axiom must be A |- A")
    elif rule == "cut":
        b = node.params.get("cut")
        _require(isinstance(b, Formula), "missing cut formula")
        _require(G == PG[0] + _minus(PG[1], b, "right premise antecedent"),
                 "antecedent is not the union of the premise antecedents")
        _require(D == _minus(PD[0], b, "left premise succedent") + PD[1],
                 "succedent is not the union of the premise succedents")
    elif rule in ("exL", "exR"):
        _require(G == PG[0] and D == PD[0], "exchange must not change the multisets")
    elif rule == "wL":
        _, ctx = _principal(node, "L")
        _require(ctx == PG[0] and D == PD[0], "weakening adds exactly one antecedent formula")
    elif rule == "wR":
        _, ctx = _principal(node, "R")
        _require(ctx == PD[0] and G == PG[0], "weakening adds exactly one succedent formula")
    elif rule == "abs":
        f, ctx = _principal(node, "R")
        l, b = _shape(f, Times, "of the form L * B")
        _require(is_l1(l), f"absorbed formula {print_formula(l)} is not in L1")
        _require(G[b] > 0, f"{print_formula(b)} is not in the antecedent")
        _require(PG[0] == G, "antecedent must be unchanged")
        _require(PD[0] == ctx + Counter([l]), "premise succedent must hold L in place of L * B")
    elif rule == "andL":
        f, ctx = _principal(node, "L")
        parts = _shape(f, With, "a & formula")
        chosen = parts[_side_param(node)]
        _require(PG[0] == ctx + Counter([chosen]), "premise must keep the chosen conjunct")
        _require(PD[0] == D, "succedent must be unchanged")
    elif rule == "andR":
        f, ctx = _principal(node, "R")
        a, b = _shape(f, With, "a & formula")
        _require(PG[0] == G and PG[1] == G, "both premises need the conclusion's antecedent")
        _require(ctx == _minus(PD[0], a, "left premise") + _minus(PD[1], b, "right premise"),
                 "succedent context is not the union of the premise contexts")
    elif rule == "timesL":
        f, ctx = _principal(node, "L")
        a, b = _shape(f, Times, "a * formula")
        _require(PG[0] == ctx + Counter([a, b]), "premise must hold both factors")
        _require(PD[0] == D, "succedent must be unchanged")
    elif rule == "timesR":
        f, ctx = _principal(node, "R")
        a, b = _shape(f, Times, "a * formula")
        _require(G == PG[0] + PG[1], "antecedent is not the union of the premise antecedents")
        _require(ctx == _minus(PD[0], a, "left premise") + _minus(PD[1], b, "right premise"),
                 "succedent context is not the union of the premise contexts")
    elif rule == "oplusL":
        f, ctx = _principal(node, "L")
        a, b = _derived(f, match_oplus, "a | formula")
        _require(PG[0] == ctx + Counter([a]) and PG[1] == ctx + Counter([b]),
                 "premises must hold one disjunct each in the same context")
        _require(PD[0] == D and PD[1] == D, "succedents must be unchanged")
    elif rule == "oplusR":
        f, ctx = _principal(node, "R")
        parts = _derived(f, match_oplus, "a | formula")
        chosen = parts[_side_param(node)]
        _require(PD[0] == ctx + Counter([chosen]), "premise must hold the chosen disjunct")
        _require(PG[0] == G, "antecedent must be unchanged")
    elif rule == "parL":
        f, ctx = _principal(node, "L")
        a, b = _derived(f, match_par, "a % formula")
        _require(ctx == _minus(PG[0], a, "left premise") + _minus(PG[1], b, "right premise"),
                 "antecedent context is not the union of the premise contexts")
        _require(D == PD[0] + PD[1], "succedent is not the union of the premise succedents")
    elif rule == "parR":
        f, ctx = _principal(node, "R")
        a, b = _derived(f, match_par, "a % formula")
        _require(PD[0] == ctx + Counter([a, b]), "premise must hold both components")
        _require(PG[0] == G, "antecedent must be unchanged")
    elif rule == "arrowL":
        f, ctx = _principal(node, "L")
        a, b = _derived(f, match_arrow, "an -> formula")
        _require(ctx == PG[0] + _minus(PG[1], b, "right premise"),
                 "antecedent context is not the union of the premise contexts")
        _require(D == _minus(PD[0], a, "left premise") + PD[1],
                 "succedent is not the union of the premise succedents")
    elif rule == "arrowR":
        f, ctx = _principal(node, "R")
        a, b = _derived(f, match_arrow, "an -> formula")
        _require(PG[0] == G + Counter([a]), "premise antecedent must add the hypothesis")
        _require(PD[0] == ctx + Counter([b]), "premise succedent must hold the consequent")
    elif rule == "negL":
        f, ctx = _principal(node, "L")
        _require(isinstance(f, Neg), "principal formula is not a negation")
        _require(PG[0] == ctx and PD[0] == D + Counter([f.sub]),
                 "premise must move the negated formula to the succedent")
    elif rule == "negR":
        f, ctx = _principal(node, "R")
        _require(isinstance(f, Neg), "principal formula is not a negation")
        _require(PD[0] == ctx and PG[0] == G + Counter([f.sub]),
                 "premise must move the negated formula to the antecedent")
    elif rule == "one":
        f, ctx = _principal(node, "L")
        _require(f == Const(ONE), "principal formula is not 1")
        _require(PG[0] == ctx and PD[0] == D, "premise must drop exactly the 1")
    elif rule == "oneAx":
        f, _ = _principal(node, "R")
        _require(f == Const(ONE), "principal formula is not 1")
    elif rule == "zeroAx":
        f, _ = _principal(node, "L")
        _require(f == Const(ZERO), "principal formula is not 0")
    elif rule == "distr":
        _require(len(gamma) == 1 and len(delta) == 1, "distributivity has one formula per side")
        l1, l2 = _shape(gamma[0], With, "(A * C) & (B * C)")
        a, c1 = _shape(l1, Times, "A * C")
        b, c2 = _shape(l2, Times, "B * C")
        _require(c1 == c2, "the two products must share their right factor")
        _require(delta[0] == Times(With(a, b), c1), "succedent must be (A & B) * C")
    elif rule == "Sprime":
        _require(len(gamma) == 1 and len(delta) == 1, "S' has one constant per side")
        b, a = _const(gamma[0], "antecedent"), _const(delta[0], "succedent")
        _require(b <= a, f"{b} > {a}")
    elif rule == "timesDef":
        _require(len(gamma) == 1 and len(delta) == 1, "*def has one formula per side")
        prod, single = gamma[0], delta[0]
        if not isinstance(prod, Times):
            prod, single = single, prod
        a, b = _shape(prod, Times, "a product of constants")
        a, b = _const(a, "factor"), _const(b, "factor")
        g = _const(single, "result")
        _require(g == w_times(a, b), f"{a} * {b} is {w_times(a, b)}, not {g}")
    elif rule == "negDef":
        _require(len(gamma) == 1 and len(delta) == 1, "~def has one formula per side")
        _require(isinstance(gamma[0], Neg), "antecedent must be a negated constant")
        a = _const(gamma[0].sub, "negated formula")
        g = _const(delta[0], "succedent")
        _require(g == ONE - a, f"~{a} is {ONE - a}, not {g}")


def check_node(n: ProofNode) -> None:
    """Raise :class:`RuleViolation` unless ``n`` follows from its premises."""
    try:
        _check(n)
    except _Fail as e:
        raise RuleViolation(n.rule, n, str(e)) from None


def check_proof(p: ProofNode) -> None:
    """Check every node; raises on the first failure in preorder."""
    for node in p.walk():
        check_node(node)


def first_violation(p: ProofNode) -> Optional[RuleViolation]:
    try:
        check_proof(p)
    except RuleViolation as e:
        return e
    return None
