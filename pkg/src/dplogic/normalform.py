"""Reduction of arbitrary formulas to conjunctions of weighted crisp clauses.

A clause ``(w, L)`` stands for ``w -> L`` with ``L`` crisp: value 1 on the
models of ``L`` and ``1 - w`` elsewhere.  A :class:`NormalForm` is the
``&`` of its clauses, so its value at a world is the minimum of its clause
values, and the empty normal form is the constant 1.

:func:`normalize` works bottom-up:

* an atom ``p`` is ``{(1, p)}`` and a constant ``c`` is ``{(1 - c, 0)}``;
* ``&`` concatenates clause lists;
* ``~`` goes through :func:`negate_nf` (one clause per sign pattern of the
  clause bodies);
* ``*`` multiplies every clause of one side with every clause of the other
  via :func:`times_clause`, which is sound because ``*`` distributes over
  ``&`` in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .core import (
    BOTTOM,
    Atom,
    ONE,
    TOP,
    ZERO,
    Const,
    Formula,
    Neg,
    Times,
    Weight,
    With,
    as_weight,
    atoms,
    conj,
    fold,
    is_l1,
    make_arrow,
    make_oplus,
    w_par,
)
from .parser import print_formula
from .semantics import Dist, Frame, NotL1, model_mask

DEFAULT_MAX_CLAUSES = 4096


class BlowupLimit(RuntimeError):
    def __init__(self, count: int, cap: int, where: str):
        self.count, self.cap = count, cap
        super().__init__(f"{where}: {count} clauses exceeds the cap of {cap}")


@dataclass(frozen=True)
class Clause:
    weight: Weight
    body: Formula

    def __post_init__(self):
        object.__setattr__(self, "weight", as_weight(self.weight))
        if not is_l1(self.body):
            raise NotL1(f"clause body {print_formula(self.body)} is not crisp")

    def formula(self) -> Formula:
        return make_arrow(Const(self.weight), self.body)

    def __str__(self):
        return f"({self.weight}, {print_formula(self.body)})"


@dataclass(frozen=True)
class NormalForm:
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(self.clauses))

    @classmethod
    def of(cls, *pairs) -> "NormalForm":
        return cls(tuple(c if isinstance(c, Clause) else Clause(*c) for c in pairs))

    def __len__(self):
        return len(self.clauses)

    def __iter__(self):
        return iter(self.clauses)

    def atoms(self) -> tuple[str, ...]:
        return atoms(*(c.body for c in self.clauses))

    def formula(self) -> Formula:
        """The ``&`` of the clause formulas, left nested, in stored order."""
        return conj(c.formula() for c in self.clauses)

    def __str__(self):
        return "{" + ", ".join(str(c) for c in self.clauses) + "}"


def _check_cap(count: int, cap: int | None, where: str):
    if cap is not None and count > cap:
        raise BlowupLimit(count, cap, where)


# --------------------------------------------------------------------------
# evaluation
# --------------------------------------------------------------------------


def u_of_nf(n: NormalForm, f: Frame) -> Dist:
    vals = [ONE] * f.world_count
    for c in n.clauses:
        mask = model_mask(c.body, f)
        off = ONE - c.weight
        for w in range(f.world_count):
            if not mask >> w & 1 and off < vals[w]:
                vals[w] = off
    return Dist(f, tuple(vals))


# --------------------------------------------------------------------------
# simplification
# --------------------------------------------------------------------------


def simplify(n: NormalForm) -> NormalForm:
    """Semantics-preserving clean-up of a normal form.

    * clauses of weight 0 and clauses with tautological bodies are dropped;
    * clauses sharing a weight are conjoined into one, since
      ``(w -> L) & (w -> M)`` has the value of ``w -> (L & M)``;
    * a clause is dropped when another clause has at least its weight and a
      body with no more models (so equivalent bodies keep the largest weight);
    * each body is replaced by the smallest of the equivalent bodies seen and
      a minimised sum/product-of-terms form.

    Truth tables are only built over at most ``SIMPLIFY_MAX_ATOMS`` atoms;
    larger forms get the syntactic part of the above (identical bodies,
    literal ``1`` bodies, shared weights).  The result is sorted by
    descending weight, then by printed body.
    """
    clauses = [c for c in n.clauses if c.weight != 0 and c.body != TOP]
    if len(atoms(*(c.body for c in clauses))) > SIMPLIFY_MAX_ATOMS:
        return _simplify_syntactic(clauses)
    frame = Frame.over(*(c.body for c in clauses), max_atoms=None)
    full = frame.full
    by_weight: dict[Weight, tuple[int, list[Formula]]] = {}
    for c in clauses:
        mask = model_mask(c.body, frame)
        if mask == full:
            continue
        if c.weight in by_weight:
            m, bodies = by_weight[c.weight]
            by_weight[c.weight] = (m & mask, bodies + [c.body])
        else:
            by_weight[c.weight] = (mask, [c.body])
    kept: list[tuple[Weight, int, list[Formula]]] = []
    for w in sorted(by_weight, reverse=True):
        mask, bodies = by_weight[w]
        # heavier clauses come first: drop this one if one of them is stronger
        if any(m & mask == m for _, m, _ in kept):
            continue
        kept.append((w, mask, bodies))
    return _sorted([Clause(w, _choose_body(bodies)) for w, _, bodies in kept])


def _simplify_syntactic(clauses: list[Clause]) -> NormalForm:
    best: dict[Formula, Weight] = {}
    for c in clauses:
        best[c.body] = max(best.get(c.body, c.weight), c.weight)
    by_weight: dict[Weight, list[Formula]] = {}
    for body, w in best.items():
        by_weight.setdefault(w, []).append(body)
    return _sorted([Clause(w, conj(bodies)) for w, bodies in by_weight.items()])


def _sorted(out: list[Clause]) -> NormalForm:
    # weights are distinct after merging, so this is also the (weight, body) order
    out.sort(key=lambda c: -c.weight)
    return NormalForm(tuple(out))


def _choose_body(bodies: list[Formula]) -> Formula:
    candidates = list(bodies) if len(bodies) == 1 else [conj(bodies)]
    local = Frame.over(*bodies, max_atoms=None)
    if len(local.atom_list) <= MINIMIZE_MAX_ATOMS:
        candidates.append(canonical_body(local.atom_list, model_mask(candidates[0], local)))
    return min(candidates, key=lambda b: (b.size(), print_formula(b)))


@lru_cache(maxsize=65536)
def canonical_body(atom_list: tuple[str, ...], mask: int) -> Formula:
    """A small crisp formula whose models over ``atom_list`` are ``mask``.

    Uses Quine-McCluskey minimisation (sum and product forms, whichever is
    smaller).
    """
    n_worlds = 1 << len(atom_list)
    full = (1 << n_worlds) - 1
    if mask == 0:
        return BOTTOM
    if mask == full:
        return TOP
    minterms = [w for w in range(n_worlds) if mask >> w & 1]

    import sympy
    from sympy.logic import POSform, SOPform

    syms = sympy.symbols(list(atom_list)) if atom_list else []
    syms = list(syms) if isinstance(syms, (list, tuple)) else [syms]
    def as_bits(w):
        return [w >> i & 1 for i in range(len(atom_list))]

    sop = _from_sympy(SOPform(syms, [as_bits(w) for w in minterms]))
    pos = _from_sympy(POSform(syms, [as_bits(w) for w in minterms]))
    return min((sop, pos), key=lambda b: (b.size(), print_formula(b)))


# truth-table simplification and two-level minimisation limits
SIMPLIFY_MAX_ATOMS = 16
MINIMIZE_MAX_ATOMS = 6


def _disjoin(parts: list[Formula]) -> Formula:
    acc = parts[0]
    for p in parts[1:]:
        acc = make_oplus(acc, p)
    return acc


def _from_sympy(expr) -> Formula:
    import sympy

    if expr is sympy.true:
        return TOP
    if expr is sympy.false:
        return BOTTOM
    if isinstance(expr, sympy.Symbol):
        return Atom(expr.name)
    if isinstance(expr, sympy.Not):
        return Neg(_from_sympy(expr.args[0]))
    args = sorted((_from_sympy(a) for a in expr.args), key=print_formula)
    if isinstance(expr, sympy.And):
        return conj(args)
    if isinstance(expr, sympy.Or):
        return _disjoin(args)
    raise TypeError(f"unexpected boolean expression {expr}")


# --------------------------------------------------------------------------
# clause algebra
# --------------------------------------------------------------------------


def times_clause(c1: Clause, c2: Clause) -> NormalForm:
    """``(a -> L) * (b -> M)`` as three clauses.

    ``(b, L -> M)``, ``(a, M -> L)`` and ``(min(1, a + b), L | M)``.
    """
    a, l = c1.weight, c1.body
    b, m = c2.weight, c2.body
    return NormalForm((
        Clause(b, make_arrow(l, m)),
        Clause(a, make_arrow(m, l)),
        Clause(w_par(a, b), make_oplus(l, m)),
    ))


def negate_clause(c: Clause) -> NormalForm:
    """``~(a -> L)`` as ``a & ~L``: the clauses ``(1 - a, 0)`` and ``(1, ~L)``."""
    return NormalForm((Clause(ONE - c.weight, BOTTOM), Clause(ONE, Neg(c.body))))


def _pattern_clause(clauses: Sequence[Clause], inside: Sequence[bool]) -> Clause:
    lits = [c.body if keep else Neg(c.body) for c, keep in zip(clauses, inside)]
    outside = [c.weight for c, keep in zip(clauses, inside) if not keep]
    weight = ONE - max(outside, default=ZERO)
    cell = conj(lits)
    if cell == TOP:
        body = BOTTOM
    elif isinstance(cell, Neg):
        body = cell.sub
    else:
        body = Neg(cell)
    return Clause(weight, body)


def negate_nf(n: NormalForm, max_clauses: int | None = DEFAULT_MAX_CLAUSES,
              exhaustive: bool = False) -> NormalForm:
    """Negation of a normal form.

    For each subset ``J`` of the clauses, emits the clause whose body rules out
    exactly the worlds satisfying the bodies in ``J`` and falsifying the rest,
    weighted ``1 - max(weights outside J)``.

    With ``exhaustive=False`` only subsets realised by some world are emitted;
    the others have tautological bodies and would vanish in :func:`simplify`.
    Forms over more than ``SIMPLIFY_MAX_ATOMS`` atoms always use every subset.
    """
    cs = n.clauses
    if exhaustive or len(n.atoms()) > SIMPLIFY_MAX_ATOMS:
        _check_cap(2 ** len(cs), max_clauses, "negate_nf")
        patterns: Iterable = product((True, False), repeat=len(cs))
    else:
        frame = Frame.over(*(c.body for c in cs), max_atoms=None)
        masks = [model_mask(c.body, frame) for c in cs]
        seen = {}
        for w in frame.worlds():
            key = tuple(bool(m >> w & 1) for m in masks)
            seen.setdefault(key, None)
        _check_cap(len(seen), max_clauses, "negate_nf")
        patterns = seen
    out = tuple(_pattern_clause(cs, p) for p in patterns)
    return simplify(NormalForm(out))


def _times_nf(l: NormalForm, r: NormalForm, max_clauses: int | None) -> NormalForm:
    # One row of pairwise products at a time, simplified as it is merged, so
    # the cap bounds each step rather than the full cross product.
    acc = NormalForm()
    for c1 in l:
        row = tuple(c for c2 in r for c in times_clause(c1, c2).clauses)
        _check_cap(len(acc) + len(row), max_clauses, "normalize(*)")
        acc = simplify(NormalForm(acc.clauses + row))
    return acc


def normalize(a: Formula, max_clauses: int | None = DEFAULT_MAX_CLAUSES) -> NormalForm:
    """Equivalent conjunction of weighted crisp clauses for ``a``."""

    def step(f: Formula, kids: list) -> NormalForm:
        if isinstance(f, Const):
            r = NormalForm((Clause(ONE - f.w, BOTTOM),))
        elif isinstance(f, Neg):
            r = negate_nf(kids[0], max_clauses)
        elif isinstance(f, With):
            l, r_ = kids
            _check_cap(len(l) + len(r_), max_clauses, "normalize(&)")
            r = NormalForm(l.clauses + r_.clauses)
        elif isinstance(f, Times):
            l, r_ = kids
            # the empty form is 1, the unit of *, not an absorbing element
            if not l.clauses:
                r = r_
            elif not r_.clauses:
                r = l
            else:
                r = _times_nf(l, r_, max_clauses)
        else:
            r = NormalForm((Clause(ONE, f),))
        return simplify(r)

    return fold(a, step)
