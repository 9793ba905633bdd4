"""Proof-producing entailment between normal forms.

:func:`derive_clause_entailment` proves ``&_i (a_i -> L_i) |- b -> M`` by
induction on the number of premise clauses:

* one clause ``a -> L``: either every model of ``L`` is a model of ``M`` and
  ``b <= a`` (S' plus a classical proof of ``L |- M``), or ``b = 0``, or
  ``M`` is a tautology;
* ``P & (a_n -> L_n)``: if ``P`` alone suffices, prove that and project with
  ``&L``; otherwise prove ``P |- b -> (M | ~L_n)`` recursively and
  ``a_n -> L_n |- b -> L_n``, pair them with ``&R`` and weaken the
  conjoined consequent back to ``b -> M``.

Semantic entailment is checked first, so the construction only runs when it
is bound to succeed.
"""

from __future__ import annotations

from ..core import ZERO, Const, Formula, Neg, With, make_arrow, make_oplus
from ..normalform import Clause, NormalForm, u_of_nf
from ..semantics import DEFAULT_MAX_ATOMS, Frame, first_violation, model_mask
from . import build as b
from .proof import ProofNode
from .tactics import classical_proof, prove_by_worlds


class NotDerivable(Exception):
    """The entailment fails; ``world`` is a counterexample in ``frame``."""

    def __init__(self, frame: Frame, world: int, clause: Clause | None = None):
        self.frame, self.world, self.clause = frame, world, clause
        where = ", ".join(f"{a}={int(v)}" for a, v in frame.assignment(world).items())
        what = f" for clause {clause}" if clause is not None else ""
        super().__init__(f"not entailed{what}: counterexample world [{where}]")


def _goal(c: Clause) -> NormalForm:
    return NormalForm((c,))


def _entails(n: NormalForm, c: Clause, frame: Frame) -> int | None:
    """First world where ``n`` exceeds ``c``, or None."""
    return first_violation(u_of_nf(n, frame), u_of_nf(_goal(c), frame))


def _single(a: Clause, c: Clause, frame: Frame) -> ProofNode:
    alpha, l = a.weight, a.body
    beta, m = c.weight, c.body
    lm, mm = model_mask(l, frame), model_mask(m, frame)
    prem = a.formula()
    if lm & mm == lm and beta <= alpha:
        p = b.arrow_left(b.s_prime(beta, alpha), classical_proof(l, m), Const(alpha), l)
        return b.arrow_right(p, Const(beta), m)
    if beta == ZERO:
        p = b.arrow_right(b.zero_axiom((), (m,)), Const(ZERO), m)
        return b.weaken_left(p, prem)
    if mm == frame.full:
        p = b.weaken_left(prove_by_worlds(None, m), Const(beta))
        return b.weaken_left(b.arrow_right(p, Const(beta), m), prem)
    raise AssertionError("single-clause entailment outside the base cases")


def _empty(c: Clause, frame: Frame) -> ProofNode:
    """``1 |- b -> M`` when the goal clause is valid on its own."""
    beta, m = c.weight, c.body
    if beta == ZERO:
        p = b.arrow_right(b.zero_axiom((), (m,)), Const(ZERO), m)
    else:
        p = b.weaken_left(prove_by_worlds(None, m), Const(beta))
        p = b.arrow_right(p, Const(beta), m)
    return b.one_left(p)


def _implication_meet(beta: Formula, x: Formula, y: Formula) -> ProofNode:
    """``(beta -> x) & (beta -> y) |- beta -> (x & y)``."""
    both = With(make_arrow(beta, x), make_arrow(beta, y))
    px = b.and_left(b.arrow_left(b.identity(beta), b.identity(x), beta, x), both, 0)
    py = b.and_left(b.arrow_left(b.identity(beta), b.identity(y), beta, y), both, 1)
    return b.arrow_right(b.and_right(px, py, x, y), beta, With(x, y))


def _derive(cs: tuple[Clause, ...], c: Clause, frame: Frame) -> ProofNode:
    if len(cs) == 1:
        return _single(cs[0], c, frame)
    rest, last = cs[:-1], cs[-1]
    whole = NormalForm(cs).formula()
    if _entails(NormalForm(rest), c, frame) is None:
        return b.and_left(_derive(rest, c, frame), whole, 0)
    beta = Const(c.weight)
    widened = Clause(c.weight, make_oplus(c.body, Neg(last.body)))
    p_rest = b.and_left(_derive(rest, widened, frame), whole, 0)
    p_last = b.and_left(_single(last, Clause(c.weight, last.body), frame), whole, 1)
    paired = b.and_right(p_rest, p_last, widened.formula(), make_arrow(beta, last.body))
    met = b.cut(paired, _implication_meet(beta, widened.body, last.body),
                With(widened.formula(), make_arrow(beta, last.body)))
    narrowed = Clause(c.weight, With(widened.body, last.body))
    return b.cut(met, _single(narrowed, c, frame), narrowed.formula())


def _frame(n: NormalForm, goal: NormalForm, max_atoms) -> Frame:
    return Frame.over(*(x.body for x in n.clauses + goal.clauses), max_atoms=max_atoms)


def derive_clause_entailment(n: NormalForm, c: Clause,
                             max_atoms: int | None = DEFAULT_MAX_ATOMS) -> ProofNode:
    """Proof of ``n.formula() |- c.formula()``, or :class:`NotDerivable`."""
    frame = _frame(n, _goal(c), max_atoms)
    bad = _entails(n, c, frame)
    if bad is not None:
        raise NotDerivable(frame, bad, c)
    if not n.clauses:
        return _empty(c, frame)
    return _derive(n.clauses, c, frame)


def prove_nf(a: NormalForm, goal: NormalForm,
             max_atoms: int | None = DEFAULT_MAX_ATOMS) -> ProofNode:
    """Proof of ``a.formula() |- goal.formula()``, or :class:`NotDerivable`.

    Each goal clause is derived separately and the results are joined with
    ``&R`` following the left-nested shape of ``goal.formula()``.
    """
    if not goal.clauses:
        return b.one_axiom((a.formula(),))
    acc = None
    acc_formula = None
    for c in goal.clauses:
        p = derive_clause_entailment(a, c, max_atoms)
        if acc is None:
            acc, acc_formula = p, c.formula()
        else:
            acc = b.and_right(acc, p, acc_formula, c.formula())
            acc_formula = With(acc_formula, c.formula())
    return acc
