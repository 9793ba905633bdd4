"""Constructors for single inference steps.

Each function takes the premise proofs and the formulas the rule acts on, and
computes the conclusion and the principal-occurrence parameter, so callers
never do multiset bookkeeping by hand.  Builders do not check side
conditions; :func:`~dplogic.calculus.proof.check_proof` does.
"""

from __future__ import annotations

from ..core import ONE, ZERO, Const, Formula, Neg, Times, With, make_arrow, make_oplus, make_par, w_times
from .proof import ProofNode, Sequent


def _drop(seq: tuple, f: Formula) -> tuple[tuple, int]:
    i = seq.index(f)
    return seq[:i] + seq[i + 1:], i


def _node(rule, gamma, delta, premises=(), **params) -> ProofNode:
    return ProofNode(rule, Sequent(tuple(gamma), tuple(delta)), tuple(premises), params)


def identity(a: Formula) -> ProofNode:
    return _node("id", (a,), (a,))


def cut(p1: ProofNode, p2: ProofNode, b: Formula) -> ProofNode:
    """From ``G |- b, D`` and ``G', b |- D'`` conclude ``G, G' |- D, D'``."""
    d1, _ = _drop(p1.conclusion.delta, b)
    g2, _ = _drop(p2.conclusion.gamma, b)
    return _node("cut", p1.conclusion.gamma + g2, d1 + p2.conclusion.delta, (p1, p2), cut=b)


def weaken_left(p: ProofNode, a: Formula) -> ProofNode:
    g = p.conclusion.gamma
    return _node("wL", g + (a,), p.conclusion.delta, (p,), principal=len(g))


def weaken_right(p: ProofNode, a: Formula) -> ProofNode:
    d = p.conclusion.delta
    return _node("wR", p.conclusion.gamma, d + (a,), (p,), principal=len(d))


def weaken_left_all(p: ProofNode, fs) -> ProofNode:
    for f in fs:
        p = weaken_left(p, f)
    return p


def absorb(p: ProofNode, l: Formula, b: Formula) -> ProofNode:
    """From ``G, b |- l, D`` conclude ``G, b |- l * b, D``."""
    d = p.conclusion.delta
    i = d.index(l)
    return _node("abs", p.conclusion.gamma, d[:i] + (Times(l, b),) + d[i + 1:], (p,), principal=i)


def _replace_left(p, rule, old, new, **params):
    g = p.conclusion.gamma
    i = g.index(old)
    return _node(rule, g[:i] + (new,) + g[i + 1:], p.conclusion.delta, (p,), principal=i, **params)


def _replace_right(p, rule, old, new, **params):
    d = p.conclusion.delta
    i = d.index(old)
    return _node(rule, p.conclusion.gamma, d[:i] + (new,) + d[i + 1:], (p,), principal=i, **params)


def and_left(p: ProofNode, f: With, side: int) -> ProofNode:
    """Replace the chosen conjunct of ``f`` in the antecedent by ``f``."""
    return _replace_left(p, "andL", (f.left, f.right)[side], f, side=side)


def and_right(p1: ProofNode, p2: ProofNode, a: Formula, b: Formula) -> ProofNode:
    d1, _ = _drop(p1.conclusion.delta, a)
    d2, _ = _drop(p2.conclusion.delta, b)
    return _node("andR", p1.conclusion.gamma, d1 + (With(a, b),) + d2, (p1, p2), principal=len(d1))


def times_left(p: ProofNode, a: Formula, b: Formula) -> ProofNode:
    g, i = _drop(p.conclusion.gamma, a)
    g, j = _drop(g, b)
    k = min(i, len(g))
    return _node("timesL", g[:k] + (Times(a, b),) + g[k:], p.conclusion.delta, (p,), principal=k)


def times_right(p1: ProofNode, p2: ProofNode, a: Formula, b: Formula) -> ProofNode:
    d1, _ = _drop(p1.conclusion.delta, a)
    d2, _ = _drop(p2.conclusion.delta, b)
    return _node("timesR", p1.conclusion.gamma + p2.conclusion.gamma,
                 d1 + (Times(a, b),) + d2, (p1, p2), principal=len(d1))


def oplus_left(p1: ProofNode, p2: ProofNode, a: Formula, b: Formula) -> ProofNode:
    g, i = _drop(p1.conclusion.gamma, a)
    return _node("oplusL", g[:i] + (make_oplus(a, b),) + g[i:], p1.conclusion.delta, (p1, p2),
                 principal=i)


def oplus_right(p: ProofNode, a: Formula, b: Formula, side: int) -> ProofNode:
    return _replace_right(p, "oplusR", (a, b)[side], make_oplus(a, b), side=side)


def par_left(p1: ProofNode, p2: ProofNode, a: Formula, b: Formula) -> ProofNode:
    g1, _ = _drop(p1.conclusion.gamma, a)
    g2, _ = _drop(p2.conclusion.gamma, b)
    return _node("parL", g1 + (make_par(a, b),) + g2, p1.conclusion.delta + p2.conclusion.delta,
                 (p1, p2), principal=len(g1))


def par_right(p: ProofNode, a: Formula, b: Formula) -> ProofNode:
    d, i = _drop(p.conclusion.delta, a)
    d, _ = _drop(d, b)
    k = min(i, len(d))
    return _node("parR", p.conclusion.gamma, d[:k] + (make_par(a, b),) + d[k:], (p,), principal=k)


def arrow_left(p1: ProofNode, p2: ProofNode, a: Formula, b: Formula) -> ProofNode:
    """From ``G |- a, D`` and ``G', b |- D'`` conclude ``G, a -> b, G' |- D, D'``."""
    d1, _ = _drop(p1.conclusion.delta, a)
    g2, _ = _drop(p2.conclusion.gamma, b)
    g1 = p1.conclusion.gamma
    return _node("arrowL", g1 + (make_arrow(a, b),) + g2, d1 + p2.conclusion.delta, (p1, p2),
                 principal=len(g1))


def arrow_right(p: ProofNode, a: Formula, b: Formula) -> ProofNode:
    g, _ = _drop(p.conclusion.gamma, a)
    d = p.conclusion.delta
    i = d.index(b)
    return _node("arrowR", g, d[:i] + (make_arrow(a, b),) + d[i + 1:], (p,), principal=i)


def neg_left(p: ProofNode, a: Formula) -> ProofNode:
    d, _ = _drop(p.conclusion.delta, a)
    g = p.conclusion.gamma
    return _node("negL", g + (Neg(a),), d, (p,), principal=len(g))


def neg_right(p: ProofNode, a: Formula) -> ProofNode:
    g, _ = _drop(p.conclusion.gamma, a)
    d = p.conclusion.delta
    return _node("negR", g, d + (Neg(a),), (p,), principal=len(d))


def one_left(p: ProofNode) -> ProofNode:
    g = p.conclusion.gamma
    return _node("one", g + (Const(ONE),), p.conclusion.delta, (p,), principal=len(g))


def one_axiom(gamma=(), delta=()) -> ProofNode:
    """``gamma |- 1, delta``."""
    return _node("oneAx", gamma, (Const(ONE),) + tuple(delta), principal=0)


def zero_axiom(gamma=(), delta=()) -> ProofNode:
    """``0, gamma |- delta``."""
    return _node("zeroAx", (Const(ZERO),) + tuple(gamma), delta, principal=0)


def distributivity(a: Formula, b: Formula, c: Formula) -> ProofNode:
    return _node("distr", (With(Times(a, c), Times(b, c)),), (Times(With(a, b), c),))


def s_prime(beta, alpha) -> ProofNode:
    """``beta |- alpha`` for constants ``beta <= alpha``."""
    return _node("Sprime", (Const(beta),), (Const(alpha),))


def times_def(a, b, reverse: bool = False) -> ProofNode:
    """``a * b |- c`` with ``c = max(0, a + b - 1)``, or ``c |- a * b`` if reversed."""
    prod, res = Times(Const(a), Const(b)), Const(w_times(Const(a).w, Const(b).w))
    if reverse:
        return _node("timesDef", (res,), (prod,))
    return _node("timesDef", (prod,), (res,))


def neg_def(a) -> ProofNode:
    """``~a |- 1 - a``."""
    a = Const(a)
    return _node("negDef", (Neg(a),), (Const(ONE - a.w),))


def exchange_left(p: ProofNode, order) -> ProofNode:
    """Permute the antecedent; ``order`` lists the old positions."""
    g = p.conclusion.gamma
    return _node("exL", tuple(g[i] for i in order), p.conclusion.delta, (p,))


def exchange_right(p: ProofNode, order) -> ProofNode:
    d = p.conclusion.delta
    return _node("exR", p.conclusion.gamma, tuple(d[i] for i in order), (p,))
