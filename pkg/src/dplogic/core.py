"""Formula syntax trees and exact Łukasiewicz weight arithmetic.

Weights are :class:`fractions.Fraction` values in ``[0, 1]``; every operation
here is closed on that interval and never rounds.  Formulas are immutable
trees over five node types.  The derived connectives (``->``, ``|`` and
``%``) have no node of their own: :func:`make_arrow`, :func:`make_oplus` and
:func:`make_par` expand them into the core nodes.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterator, Union

Weight = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class WeightError(ValueError):
    """Raised when a value cannot be used as a weight in [0, 1]."""


def as_weight(value: Union[int, str, float, Decimal, Fraction]) -> Weight:
    """Convert ``value`` to an exact weight, checking the range.

    Strings and floats go through their decimal spelling, so ``0.7`` becomes
    ``7/10`` rather than the nearest binary fraction.
    """
    if isinstance(value, bool):
        raise WeightError(f"not a weight: {value!r}")
    try:
        if isinstance(value, float):
            w = Fraction(repr(value))
        elif isinstance(value, str):
            w = Fraction(value.strip())
        else:
            w = Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise WeightError(f"not a weight: {value!r}") from exc
    if not 0 <= w <= 1:
        raise WeightError(f"weight {w} outside [0, 1]")
    return w


def w_times(a: Weight, b: Weight) -> Weight:
    """Łukasiewicz t-norm: ``max(0, a + b - 1)``."""
    s = a + b - 1
    return s if s > 0 else ZERO


def w_neg(a: Weight) -> Weight:
    return ONE - a


def w_min(a: Weight, b: Weight) -> Weight:
    return a if a <= b else b


def w_max(a: Weight, b: Weight) -> Weight:
    return a if a >= b else b


def w_par(a: Weight, b: Weight) -> Weight:
    """Łukasiewicz t-conorm: ``min(1, a + b)``."""
    s = a + b
    return s if s < 1 else ONE


# --------------------------------------------------------------------------
# Formula AST
# --------------------------------------------------------------------------


class Formula:
    """Base class of the five formula node types."""

    __slots__ = ()

    def __iter__(self) -> Iterator["Formula"]:
        """Yield every subformula in preorder, starting with ``self``."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children()))

    def children(self) -> tuple["Formula", ...]:
        return ()

    def size(self) -> int:
        return sum(1 for _ in self)

    def __str__(self) -> str:
        from .parser import print_formula

        return print_formula(self)


def _leaf_key(f: "Formula"):
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Const):
        return f.w
    return None


def _cached_hash(cls):
    # Formulas are hashed and compared constantly inside multiset checks.  The
    # hash is cached per node, and both hash and equality walk the tree with an
    # explicit stack so that deep formulas do not exhaust the call stack.
    def __hash__(self):
        try:
            return self._hash
        except AttributeError:
            pass
        stack = [self]
        while stack:
            node = stack[-1]
            pending = [c for c in node.children() if "_hash" not in c.__dict__]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            h = hash((type(node).__name__, _leaf_key(node)) + tuple(c._hash for c in node.children()))
            object.__setattr__(node, "_hash", h)
        return self._hash

    def __eq__(self, other):
        if not isinstance(other, Formula):
            return NotImplemented
        if other.__class__ is not cls:
            return False
        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if a.__class__ is not b.__class__ or hash(a) != hash(b) or _leaf_key(a) != _leaf_key(b):
                return False
            stack.extend(zip(a.children(), b.children()))
        return True

    cls.__hash__ = __hash__
    cls.__eq__ = __eq__
    return cls


def postorder(root: "Formula") -> Iterator["Formula"]:
    """Yield each distinct subformula node once, children before parents."""
    seen: set[int] = set()
    stack = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if id(node) in seen:
            continue
        if expanded:
            seen.add(id(node))
            yield node
        else:
            stack.append((node, True))
            stack.extend((c, False) for c in reversed(node.children()))


def fold(root: "Formula", fn):
    """Bottom-up evaluation without recursion: ``fn(node, child_results)``."""
    done: dict[Formula, object] = {}
    for node in postorder(root):
        if node not in done:
            done[node] = fn(node, [done[c] for c in node.children()])
    return done[root]


@_cached_hash
@dataclass(frozen=True, eq=True, repr=True)
class Atom(Formula):
    name: str


@_cached_hash
@dataclass(frozen=True, eq=True, repr=True)
class Const(Formula):
    w: Weight

    def __post_init__(self):
        object.__setattr__(self, "w", as_weight(self.w))


@_cached_hash
@dataclass(frozen=True, eq=True, repr=True)
class Neg(Formula):
    sub: Formula

    def children(self):
        return (self.sub,)


@_cached_hash
@dataclass(frozen=True, eq=True, repr=True)
class With(Formula):
    """The additive conjunction ``&`` (pointwise minimum)."""

    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@_cached_hash
@dataclass(frozen=True, eq=True, repr=True)
class Times(Formula):
    """The multiplicative conjunction ``*`` (Łukasiewicz product)."""

    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


TOP = Const(ONE)
BOTTOM = Const(ZERO)


def make_arrow(a: Formula, b: Formula) -> Formula:
    """``a -> b``, i.e. ``~(a * ~b)``."""
    return Neg(Times(a, Neg(b)))


def make_oplus(a: Formula, b: Formula) -> Formula:
    """``a | b``, i.e. ``~(~a & ~b)``."""
    return Neg(With(Neg(a), Neg(b)))


def make_par(a: Formula, b: Formula) -> Formula:
    """``a % b``, i.e. ``~(~a * ~b)``."""
    return Neg(Times(Neg(a), Neg(b)))


def match_arrow(f: Formula):
    """Return ``(a, b)`` if ``f`` is the expansion of ``a -> b``, else None."""
    if isinstance(f, Neg) and isinstance(f.sub, Times) and isinstance(f.sub.right, Neg):
        return f.sub.left, f.sub.right.sub
    return None


def match_oplus(f: Formula):
    if (
        isinstance(f, Neg)
        and isinstance(f.sub, With)
        and isinstance(f.sub.left, Neg)
        and isinstance(f.sub.right, Neg)
    ):
        return f.sub.left.sub, f.sub.right.sub
    return None


def match_par(f: Formula):
    if (
        isinstance(f, Neg)
        and isinstance(f.sub, Times)
        and isinstance(f.sub.left, Neg)
        and isinstance(f.sub.right, Neg)
    ):
        return f.sub.left.sub, f.sub.right.sub
    return None


def conj(parts, op=With) -> Formula:
    """Left-nested conjunction of ``parts``; the empty conjunction is ``1``."""
    parts = list(parts)
    if not parts:
        return TOP
    acc = parts[0]
    for p in parts[1:]:
        acc = op(acc, p)
    return acc


def is_l1(a: Formula) -> bool:
    """True iff ``a`` has no constant strictly between 0 and 1."""
    return not any(isinstance(n, Const) and 0 < n.w < 1 for n in a)


def atoms(*formulas: Formula) -> tuple[str, ...]:
    """Sorted, duplicate-free atom names occurring in ``formulas``."""
    return tuple(sorted({n.name for f in formulas for n in f if isinstance(n, Atom)}))
