"""Knowledge bases: named normal forms combined by expansion or fusion."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .core import Formula, Times, is_l1
from .normalform import DEFAULT_MAX_CLAUSES, Clause, NormalForm, normalize, simplify, u_of_nf
from .parser import format_kb, parse_kb
from .semantics import DEFAULT_MAX_ATOMS, Frame, NotL1, classical_models, height, necessity


@dataclass(frozen=True)
class KnowledgeBase:
    source_name: str
    nf: NormalForm

    def __post_init__(self):
        object.__setattr__(self, "nf", simplify(self.nf))

    @classmethod
    def from_text(cls, text: str, source_name: str = "<text>") -> "KnowledgeBase":
        return cls(source_name, NormalForm(tuple(Clause(w, f) for w, f in parse_kb(text))))

    @classmethod
    def load(cls, path) -> "KnowledgeBase":
        path = Path(path)
        return cls.from_text(path.read_text(encoding="utf-8"), path.name)

    def to_text(self, unicode: bool = False) -> str:
        return format_kb(self.nf.clauses, unicode)

    def atoms(self) -> tuple[str, ...]:
        return self.nf.atoms()


def expand(k1: KnowledgeBase, k2: KnowledgeBase) -> KnowledgeBase:
    """Union of the clauses: the pointwise minimum of the two distributions."""
    return KnowledgeBase(f"{k1.source_name}&{k2.source_name}",
                         NormalForm(k1.nf.clauses + k2.nf.clauses))


def fuse(k1: KnowledgeBase, k2: KnowledgeBase,
         max_clauses: int | None = DEFAULT_MAX_CLAUSES) -> KnowledgeBase:
    """Independent-source combination: the pointwise Łukasiewicz product."""
    nf = normalize(Times(k1.nf.formula(), k2.nf.formula()), max_clauses)
    return KnowledgeBase(f"{k1.source_name}*{k2.source_name}", nf)


def query(k: KnowledgeBase, goal: Formula, max_atoms: int | None = DEFAULT_MAX_ATOMS):
    """Largest ``a`` such that ``k`` entails ``a -> goal``."""
    if not is_l1(goal):
        raise NotL1("query goal must be crisp")
    frame = Frame.over(goal, extra=k.atoms(), max_atoms=max_atoms)
    return necessity(u_of_nf(k.nf, frame), classical_models(goal, frame))


def kb_height(k: KnowledgeBase, max_atoms: int | None = DEFAULT_MAX_ATOMS):
    """Degree of consistency of the knowledge base."""
    frame = Frame.over(extra=k.atoms(), max_atoms=max_atoms)
    return height(u_of_nf(k.nf, frame))
