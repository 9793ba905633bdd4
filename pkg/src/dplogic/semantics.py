"""Possibility distributions over the canonical frame and exact evaluation.

A :class:`Frame` fixes an ordered list of atoms; world ``k`` makes atom ``i``
true iff bit ``i`` of ``k`` is set.  :func:`u_eval` computes the least
informative distribution satisfying a formula, pointwise and exactly, and
every entailment question in the package reduces to comparing two such
distributions.

Only the atoms that occur in the formulas are enumerated.  The value of a
formula at a world depends on nothing else, so adding atoms duplicates values
without changing any comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .core import (
    ONE,
    ZERO,
    Atom,
    Const,
    Formula,
    Neg,
    Times,
    Weight,
    With,
    atoms,
    conj,
    fold,
    is_l1,
    make_par,
    w_times,
)

DEFAULT_MAX_ATOMS = 16


class SemanticsError(ValueError):
    pass


class FrameTooLarge(SemanticsError):
    def __init__(self, n: int, cap: int):
        self.n, self.cap = n, cap
        super().__init__(f"{n} atoms exceeds the cap of {cap} ({2**n} worlds)")


class UnknownAtom(SemanticsError):
    pass


class NotL1(SemanticsError):
    pass


class FrameMismatch(SemanticsError):
    pass


@dataclass(frozen=True)
class Frame:
    atom_list: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.atom_list)
        if list(names) != sorted(set(names)):
            raise ValueError("frame atoms must be sorted and distinct")
        object.__setattr__(self, "atom_list", names)

    @classmethod
    def over(cls, *formulas: Formula, extra: Iterable[str] = (),
             max_atoms: int | None = DEFAULT_MAX_ATOMS) -> "Frame":
        names = tuple(sorted(set(atoms(*formulas)) | set(extra)))
        if max_atoms is not None and len(names) > max_atoms:
            raise FrameTooLarge(len(names), max_atoms)
        return cls(names)

    @property
    def world_count(self) -> int:
        return 1 << len(self.atom_list)

    @property
    def full(self) -> int:
        """Bitmask with one bit per world."""
        return (1 << self.world_count) - 1

    def worlds(self) -> range:
        return range(self.world_count)

    def assignment(self, world: int) -> dict[str, bool]:
        return {a: bool(world >> i & 1) for i, a in enumerate(self.atom_list)}

    def bits(self, world: int) -> str:
        """Truth values of the atoms at ``world`` as a 0/1 string in atom order."""
        return "".join("1" if world >> i & 1 else "0" for i in range(len(self.atom_list)))

    def atom_mask(self, name: str) -> int:
        """Bitmask of the worlds in which atom ``name`` is true."""
        try:
            i = self.atom_list.index(name)
        except ValueError:
            raise UnknownAtom(f"atom {name!r} not in frame {self.atom_list}") from None
        return _atom_mask(len(self.atom_list), i)


@lru_cache(maxsize=4096)
def _atom_mask(n_atoms: int, i: int) -> int:
    # worlds alternate in runs of 2**i false then 2**i true; double the pattern up
    run = 1 << i
    mask, width = ((1 << run) - 1) << run, run << 1
    while width < 1 << n_atoms:
        mask |= mask << width
        width <<= 1
    return mask


@dataclass(frozen=True)
class Dist:
    frame: Frame
    values: tuple[Weight, ...]

    def __post_init__(self):
        if len(self.values) != self.frame.world_count:
            raise ValueError("one value per world required")

    def __getitem__(self, world: int) -> Weight:
        return self.values[world]

    def __le__(self, other: "Dist") -> bool:
        return dist_leq(self, other)

    @classmethod
    def constant(cls, frame: Frame, w: Weight) -> "Dist":
        return cls(frame, (w,) * frame.world_count)


def _same_frame(d1: Dist, d2: Dist):
    if d1.frame != d2.frame:
        raise FrameMismatch(f"{d1.frame.atom_list} vs {d2.frame.atom_list}")


def dist_times(d1: Dist, d2: Dist) -> Dist:
    _same_frame(d1, d2)
    return Dist(d1.frame, tuple(w_times(a, b) for a, b in zip(d1.values, d2.values)))


def dist_min(d1: Dist, d2: Dist) -> Dist:
    _same_frame(d1, d2)
    return Dist(d1.frame, tuple(min(a, b) for a, b in zip(d1.values, d2.values)))


def dist_max(d1: Dist, d2: Dist) -> Dist:
    _same_frame(d1, d2)
    return Dist(d1.frame, tuple(max(a, b) for a, b in zip(d1.values, d2.values)))


def dist_complement(d: Dist) -> Dist:
    return Dist(d.frame, tuple(ONE - a for a in d.values))


def dist_leq(d1: Dist, d2: Dist) -> bool:
    _same_frame(d1, d2)
    return all(a <= b for a, b in zip(d1.values, d2.values))


def height(d: Dist) -> Weight:
    """Largest value of ``d``: its degree of consistency."""
    return max(d.values)


# --------------------------------------------------------------------------
# crisp evaluation
# --------------------------------------------------------------------------


def model_mask(l: Formula, frame: Frame) -> int:
    """Bitmask of the worlds of ``frame`` satisfying the crisp formula ``l``.

    ``&`` and ``*`` both act as conjunction on 0/1 values.
    """
    full = frame.full

    def step(f: Formula, kids: list) -> int:
        if isinstance(f, Atom):
            return frame.atom_mask(f.name)
        if isinstance(f, Const):
            if f.w == 0:
                return 0
            if f.w == 1:
                return full
            raise NotL1(f"constant {f.w} in a crisp formula")
        if isinstance(f, Neg):
            return full ^ kids[0]
        return kids[0] & kids[1]

    return fold(l, step)


def classical_models(l: Formula, f: Frame) -> frozenset[int]:
    if not is_l1(l):
        raise NotL1("classical_models needs an L1 formula")
    mask = model_mask(l, f)
    return frozenset(w for w in f.worlds() if mask >> w & 1)


def mask_to_worlds(mask: int, frame: Frame) -> frozenset[int]:
    return frozenset(w for w in frame.worlds() if mask >> w & 1)


# --------------------------------------------------------------------------
# graded evaluation
# --------------------------------------------------------------------------


def u_eval(a: Formula, f: Frame) -> Dist:
    """Least informative distribution satisfying ``a``."""
    n = f.world_count

    def step(g: Formula, kids: list) -> tuple:
        if isinstance(g, Const):
            return (g.w,) * n
        if isinstance(g, Atom):
            mask = f.atom_mask(g.name)
            return tuple(ONE if mask >> w & 1 else ZERO for w in range(n))
        if isinstance(g, Neg):
            return tuple(ONE - v for v in kids[0])
        if isinstance(g, With):
            return tuple(min(x, y) for x, y in zip(*kids))
        if isinstance(g, Times):
            return tuple(w_times(x, y) for x, y in zip(*kids))
        raise TypeError(f"not a formula: {g!r}")

    return Dist(f, fold(a, step))


def value_at(a: Formula, assignment: dict[str, bool]) -> Weight:
    """Value of ``a`` at one world given as an atom -> bool mapping."""

    def step(f: Formula, kids: list) -> Weight:
        if isinstance(f, Const):
            return f.w
        if isinstance(f, Atom):
            return ONE if assignment[f.name] else ZERO
        if isinstance(f, Neg):
            return ONE - kids[0]
        return min(kids) if isinstance(f, With) else w_times(*kids)

    return fold(a, step)


def necessity(d: Dist, x: Iterable[int]) -> Weight:
    """``1 - max(d outside x)``; the max over no worlds is 0."""
    inside = set(x)
    outside = [v for w, v in enumerate(d.values) if w not in inside]
    return ONE - max(outside, default=ZERO)


def first_violation(d1: Dist, d2: Dist) -> int | None:
    """Smallest world where ``d1`` exceeds ``d2``, or None."""
    _same_frame(d1, d2)
    for w, (a, b) in enumerate(zip(d1.values, d2.values)):
        if a > b:
            return w
    return None


def entails_sem(a: Formula, b: Formula, max_atoms: int | None = DEFAULT_MAX_ATOMS) -> bool:
    frame = Frame.over(a, b, max_atoms=max_atoms)
    return dist_leq(u_eval(a, frame), u_eval(b, frame))


def sequent_formulas(gamma: Sequence[Formula], delta: Sequence[Formula]) -> tuple[Formula, Formula]:
    """The formulas ``*gamma`` and ``%delta`` a sequent stands for."""
    left = conj(gamma, Times)
    right = Const(ZERO)
    if delta:
        right = delta[0]
        for d in delta[1:]:
            right = make_par(right, d)
    return left, right


def valid_sequent_sem(gamma: Sequence[Formula], delta: Sequence[Formula],
                      max_atoms: int | None = DEFAULT_MAX_ATOMS) -> bool:
    left, right = sequent_formulas(gamma, delta)
    return entails_sem(left, right, max_atoms=max_atoms)


def format_dist(d: Dist) -> str:
    """One line per world: ``<bits> <fraction> <decimal>``, decimal only when finite."""
    from .parser import decimal_or_none

    lines = []
    for w, v in enumerate(d.values):
        dec = decimal_or_none(v)
        lines.append(f"{d.frame.bits(w)} {v}" + (f" {dec}" if dec is not None else ""))
    return "".join(line + "\n" for line in lines)
