"""Derived proof patterns assembled from primitive steps.

Contraction is not a rule of the calculus, but absorption yields it for crisp
formulas on either side.  On top of that, :func:`prove_by_worlds` proves any
semantically valid single-formula sequent ``X |- T`` by splitting on every
atom with excluded middle and evaluating both sides with the numerical rules
at each world.  It is a closed construction for a fixed sequent, used for the
derivation library and for the classical premises of the normal-form prover,
and not a search procedure.
"""

from __future__ import annotations

from ..core import ONE, ZERO, TOP, Atom, Const, Formula, Neg, Times, With, atoms, is_l1, make_oplus
from ..semantics import value_at
from . import build as b
from .proof import ProofNode


class TacticError(ValueError):
    pass


def contract_left(p: ProofNode, l: Formula) -> ProofNode:
    """From ``G, l, l |- D`` derive ``l, G |- D`` for crisp ``l``."""
    merged = b.times_left(p, l, l)
    dup = b.absorb(b.identity(l), l, l)
    return b.cut(dup, merged, Times(l, l))


def par_self_elim(l: Formula) -> ProofNode:
    """``l % l |- l`` for crisp ``l``."""
    nl = Neg(l)
    p = b.absorb(b.identity(nl), nl, nl)      # ~l |- ~l * ~l
    p = b.neg_left(p, Times(nl, nl))          # ~l, l % l |-
    p = b.neg_right(p, nl)                    # l % l |- ~~l
    dn = b.neg_left(b.neg_right(b.identity(l), l), nl)  # ~~l |- l
    return b.cut(p, dn, Neg(nl))


def contract_right(p: ProofNode, l: Formula) -> ProofNode:
    """From ``G |- l, l, D`` derive ``G |- D, l`` for crisp ``l``."""
    from ..core import make_par

    joined = b.par_right(p, l, l)
    return b.cut(joined, par_self_elim(l), make_par(l, l))


def excluded_middle(a: Formula) -> ProofNode:
    """``|- a | ~a`` for crisp ``a``."""
    p = b.neg_right(b.identity(a), a)        # |- a, ~a
    p = b.oplus_right(p, a, Neg(a), 1)
    p = b.oplus_right(p, a, Neg(a), 0)
    return contract_right(p, make_oplus(a, Neg(a)))


def negated_constant(a) -> ProofNode:
    """``1 - a |- ~a`` (the converse direction of the negation axiom)."""
    ca, cn = Const(a), Const(ONE - Const(a).w)
    p = b.times_right(b.identity(ca), b.identity(cn), ca, cn)
    p = b.cut(p, b.times_def(ca.w, cn.w), Times(ca, cn))          # a, 1-a |- 0
    p = b.cut(p, b.zero_axiom(), Const(ZERO))                      # a, 1-a |-
    return b.neg_right(p, ca)


class _World:
    """Evaluation proofs under a fixed literal context ``lits``."""

    def __init__(self, lits: tuple[Formula, ...], assignment: dict[str, bool]):
        self.lits = lits
        self.assignment = assignment

    def value(self, f: Formula):
        return value_at(f, self.assignment)

    def contract_all(self, p: ProofNode) -> ProofNode:
        for l in self.lits:
            p = contract_left(p, l)
        return p

    def weaken_rest(self, p: ProofNode, used: Formula | None = None) -> ProofNode:
        rest = list(self.lits)
        if used is not None:
            rest.remove(used)
        return b.weaken_left_all(p, rest)

    def down(self, a: Formula) -> ProofNode:
        """``lits, a |- c`` where ``c`` is the value of ``a``."""
        c = self.value(a)
        if c == ONE:
            return b.one_axiom(self.lits + (a,))
        if isinstance(a, Const):
            return self.weaken_rest(b.identity(a))
        if isinstance(a, Atom):
            # false here, so ~a is among the literals
            p = b.weaken_right(b.neg_left(b.identity(a), a), Const(ZERO))
            return self.weaken_rest(p, Neg(a))
        if isinstance(a, Neg):
            cb = self.value(a.sub)
            p = b.neg_left(self.up(a.sub), a.sub)         # lits, cb, ~B |-
            p = b.neg_right(p, Const(cb))                 # lits, ~B |- ~cb
            return b.cut(p, b.neg_def(cb), Neg(Const(cb)))
        if isinstance(a, With):
            side = 0 if self.value(a.left) <= self.value(a.right) else 1
            return b.and_left(self.down((a.left, a.right)[side]), a, side)
        if isinstance(a, Times):
            cl, cr = self.value(a.left), self.value(a.right)
            if cl == ZERO or cr == ZERO:
                zero_side = a.left if cl == ZERO else a.right
                other = a.right if cl == ZERO else a.left
                p = b.weaken_left(self.down(zero_side), other)
                return b.times_left(p, a.left, a.right)
            p = b.times_right(self.down(a.left), self.down(a.right), Const(cl), Const(cr))
            p = b.cut(p, b.times_def(cl, cr), Times(Const(cl), Const(cr)))
            p = self.contract_all(p)
            return b.times_left(p, a.left, a.right)
        raise TypeError(a)

    def up(self, a: Formula) -> ProofNode:
        """``lits, c |- a`` where ``c`` is the value of ``a``."""
        c = self.value(a)
        if c == ZERO:
            return b.zero_axiom(self.lits, (a,))
        if isinstance(a, Const):
            return self.weaken_rest(b.identity(a))
        if isinstance(a, Atom):
            return b.one_left(self.weaken_rest(b.identity(a), a))
        if isinstance(a, Neg):
            cb = self.value(a.sub)
            p = b.neg_left(self.down(a.sub), Const(cb))   # lits, B, ~cb |-
            p = b.neg_right(p, a.sub)                     # lits, ~cb |- ~B
            return b.cut(negated_constant(cb), p, Neg(Const(cb)))
        if isinstance(a, With):
            parts = []
            for sub in (a.left, a.right):
                p = self.up(sub)
                cs = self.value(sub)
                if c < cs:
                    p = b.cut(b.s_prime(c, cs), p, Const(cs))
                parts.append(p)
            return b.and_right(parts[0], parts[1], a.left, a.right)
        if isinstance(a, Times):
            cl, cr = self.value(a.left), self.value(a.right)
            p = b.times_right(self.up(a.left), self.up(a.right), a.left, a.right)
            p = self.contract_all(p)
            p = b.times_left(p, Const(cl), Const(cr))
            return b.cut(b.times_def(cl, cr, reverse=True), p, Times(Const(cl), Const(cr)))
        raise TypeError(a)

    def leaf(self, x: Formula, t: Formula) -> ProofNode:
        """``x, lits |- t`` at this world."""
        cx, ct = self.value(x), self.value(t)
        if cx > ct:
            raise TacticError(f"{x} |- {t} fails at {self.assignment}")
        if cx == ZERO:
            return b.cut(self.down(x), b.zero_axiom((), (t,)), Const(ZERO))
        if ct == ONE:
            return b.cut(b.one_axiom((x,)), self.up(t), Const(ONE))
        p = self.down(x)
        if cx < ct:
            p = b.cut(p, b.s_prime(cx, ct), Const(cx))
        p = b.cut(p, self.up(t), Const(ct))
        return self.contract_all(p)


def prove_by_worlds(x: Formula | None, t: Formula) -> ProofNode:
    """Proof of ``x |- t`` (or ``|- t`` when ``x`` is None) by world splitting.

    Raises :class:`TacticError` if the sequent is not semantically valid.
    """
    if x is None:
        return b.cut(b.one_axiom(), prove_by_worlds(TOP, t), TOP)
    names = atoms(x, t)

    def split(i: int, lits: tuple, assignment: dict) -> ProofNode:
        if i == len(names):
            return _World(lits, assignment).leaf(x, t)
        a = Atom(names[i])
        na = Neg(a)
        pos = split(i + 1, lits + (a,), {**assignment, a.name: True})
        neg = split(i + 1, lits + (na,), {**assignment, a.name: False})
        em = make_oplus(a, na)
        # pos and neg conclude x, lits, a |- t and x, lits, ~a |- t
        p = b.oplus_left(pos, neg, a, na)
        p = b.times_left(p, em, x)
        ab = b.absorb(b.weaken_left(excluded_middle(a), x), em, x)   # x |- em * x
        return b.cut(ab, p, Times(em, x))

    return split(0, (), {})


def classical_proof(l: Formula, m: Formula) -> ProofNode:
    """``l |- m`` for crisp formulas with every model of ``l`` a model of ``m``."""
    if not (is_l1(l) and is_l1(m)):
        raise TacticError("classical_proof needs crisp formulas")
    return prove_by_worlds(l, m)
