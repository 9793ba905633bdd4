"""Checked derivations of standard sequents.

Every function returns a proof tree; :func:`derivation_library` bundles one
instance of each for tests and demos.
"""

from __future__ import annotations

from fractions import Fraction

from ..core import Atom, Const, Formula, Neg, Times, With, make_arrow, make_oplus, make_par, w_min
from ..normalform import Clause, NormalForm
from . import build as b
from .proof import ProofNode
from .prover import derive_clause_entailment
from .tactics import contract_left, negated_constant, prove_by_worlds


def identity(a: Formula) -> ProofNode:
    return b.identity(a)


def absorption_contraction(l: Formula) -> ProofNode:
    """``l |- l * l`` through absorption, ``*L`` and cut (no contraction rule)."""
    dup = b.absorb(b.identity(l), l, l)                                   # l |- l * l
    use = b.times_left(b.times_right(b.identity(l), b.identity(l), l, l), l, l)
    return b.cut(dup, use, Times(l, l))


def cumulative_cut(left: ProofNode, right: ProofNode, a: Formula, l: Formula) -> ProofNode:
    """From ``a |- l`` and ``a, l |- B`` derive ``a |- B`` for crisp ``l``."""
    p = b.absorb(left, l, a)                    # a |- l * a
    q = b.times_left(right, l, a)               # l * a |- B
    return b.cut(p, q, Times(l, a))


def modus_ponens(a: Formula, c: Formula) -> ProofNode:
    """``a & (a -> c) |- c`` for crisp ``a`` and ``c``."""
    imp = make_arrow(a, c)
    both = With(a, imp)
    p = b.arrow_left(b.identity(a), b.identity(c), a, c)    # a, a -> c |- c
    p = b.and_left(p, both, 0)
    p = b.and_left(p, both, 1)
    return contract_left(p, both)


def weakening_s(alpha, beta, a: Formula) -> ProofNode:
    """``alpha -> a |- beta -> a`` for ``beta <= alpha``."""
    return derive_clause_entailment(NormalForm.of((alpha, a)), Clause(beta, a))


def generalized_mp(alpha, beta, a: Formula, c: Formula) -> ProofNode:
    """``(alpha -> a) & (beta -> (a -> c)) |- (alpha & beta) -> c``."""
    alpha, beta = Const(alpha), Const(beta)
    gamma = Const(w_min(alpha.w, beta.w))
    kb = NormalForm.of((alpha.w, a), (beta.w, make_arrow(a, c)))
    p = derive_clause_entailment(kb, Clause(gamma.w, c))               # kb |- gamma -> c
    pair = With(alpha, beta)
    pick = b.and_left(b.identity(gamma), pair, 0 if gamma == alpha else 1)
    widen = b.arrow_right(b.arrow_left(pick, b.identity(c), gamma, c), pair, c)
    return b.cut(p, widen, make_arrow(gamma, c))


def times_reduction_lhs(alpha, beta, l: Formula, m: Formula) -> Formula:
    return Times(make_arrow(Const(alpha), l), make_arrow(Const(beta), m))


def times_reduction_rhs(alpha, beta, l: Formula, m: Formula) -> Formula:
    a, c = Const(alpha), Const(beta)
    return With(With(make_arrow(c, make_arrow(l, m)), make_arrow(a, make_arrow(m, l))),
                make_arrow(make_par(a, c), make_oplus(l, m)))


def times_reduction(alpha, beta, l: Formula, m: Formula, reverse: bool = False) -> ProofNode:
    lhs, rhs = times_reduction_lhs(alpha, beta, l, m), times_reduction_rhs(alpha, beta, l, m)
    return prove_by_worlds(rhs, lhs) if reverse else prove_by_worlds(lhs, rhs)


def negation_reduction(alpha, l: Formula, reverse: bool = False) -> ProofNode:
    """``~(alpha -> l) -||- alpha & ~l``."""
    lhs, rhs = Neg(make_arrow(Const(alpha), l)), With(Const(alpha), Neg(l))
    return prove_by_worlds(rhs, lhs) if reverse else prove_by_worlds(lhs, rhs)


def oplus_distributivity(a: Formula, c: Formula, d: Formula, reverse: bool = False) -> ProofNode:
    """``(a | c) * d -||- (a * d) | (c * d)``."""
    lhs = Times(make_oplus(a, c), d)
    rhs = make_oplus(Times(a, d), Times(c, d))
    return prove_by_worlds(rhs, lhs) if reverse else prove_by_worlds(lhs, rhs)


def and_distributivity_converse(a: Formula, c: Formula, d: Formula) -> ProofNode:
    """``(a & c) * d |- (a * d) & (c * d)`` from the logical rules alone."""
    pair = With(a, c)
    sides = []
    for side, x in enumerate((a, c)):
        p = b.and_left(b.identity(x), pair, side)
        p = b.times_right(p, b.identity(d), x, d)
        sides.append(b.times_left(p, pair, d))
    return b.and_right(sides[0], sides[1], Times(a, d), Times(c, d))


def derivation_library() -> dict[str, ProofNode]:
    """One instance of each derivation, keyed by a short name."""
    p, q = Atom("p"), Atom("q")
    a7, a4 = Fraction(7, 10), Fraction(4, 10)
    excluded = make_oplus(p, Neg(p))
    return {
        "id": identity(p),
        "contraction-by-absorption": absorption_contraction(p),
        "contraction-by-absorption-compound": absorption_contraction(excluded),
        "MP": modus_ponens(p, q),
        "MP-compound": modus_ponens(With(p, q), Neg(p)),
        "GMP": generalized_mp(a7, a4, p, q),
        "S": weakening_s(a7, Fraction(1, 2), p),
        "times-red": times_reduction(a7, a4, p, q),
        "times-red-converse": times_reduction(a7, a4, p, q, reverse=True),
        "neg-red": negation_reduction(a7, p),
        "neg-red-converse": negation_reduction(a7, p, reverse=True),
        "times-oplus-distr": oplus_distributivity(p, q, Const(Fraction(3, 5))),
        "times-oplus-distr-converse": oplus_distributivity(p, q, Const(Fraction(3, 5)), reverse=True),
        "times-and-distr": b.distributivity(p, q, Const(Fraction(3, 5))),
        "times-and-distr-converse": and_distributivity_converse(p, q, Const(Fraction(3, 5))),
        "neg-def-converse": negated_constant(a7),
        "cumulative-cut": cumulative_cut(b.and_left(b.identity(p), With(p, q), 0),
                                         b.times_right(b.identity(p), b.identity(With(p, q)), p, With(p, q)),
                                         With(p, q), p),
    }
