"""Possibilistic reasoning with Łukasiewicz connectives and exact rational weights.

Submodules:

* :mod:`dplogic.core`: weights and formula trees
* :mod:`dplogic.parser`: concrete syntax for formulas, knowledge bases, sequents
* :mod:`dplogic.semantics`: distributions over worlds, evaluation, necessity
* :mod:`dplogic.normalform`: weighted-clause normal forms
* :mod:`dplogic.calculus`: sequent proofs, checker and normal-form prover
* :mod:`dplogic.kb`: knowledge bases, expansion, fusion and queries
"""

from .core import (
    BOTTOM,
    ONE,
    TOP,
    ZERO,
    Atom,
    Const,
    Formula,
    Neg,
    Times,
    Weight,
    WeightError,
    With,
    as_weight,
    atoms,
    is_l1,
    make_arrow,
    make_oplus,
    make_par,
    w_max,
    w_min,
    w_neg,
    w_par,
    w_times,
)
from .parser import ParseError, SourceSpan, format_kb, parse_formula, parse_kb, parse_sequent, print_formula
from .semantics import (
    Dist,
    Frame,
    FrameTooLarge,
    NotL1,
    classical_models,
    entails_sem,
    height,
    necessity,
    u_eval,
    valid_sequent_sem,
)
from .normalform import BlowupLimit, Clause, NormalForm, negate_nf, normalize, simplify, times_clause, u_of_nf
from .calculus import (
    NotDerivable,
    ProofNode,
    RuleViolation,
    Sequent,
    check_node,
    check_proof,
    derive_clause_entailment,
    prove_nf,
    read_proof,
    write_proof,
)
from .kb import KnowledgeBase, expand, fuse, query

__all__ = [
    "BOTTOM",
    "ONE",
    "TOP",
    "ZERO",
    "Atom",
    "Const",
    "Formula",
    "Neg",
    "Times",
    "Weight",
    "WeightError",
    "With",
    "as_weight",
    "atoms",
    "is_l1",
    "make_arrow",
    "make_oplus",
    "make_par",
    "w_max",
    "w_min",
    "w_neg",
    "w_par",
    "w_times",
    "ParseError",
    "SourceSpan",
    "format_kb",
    "parse_formula",
    "parse_kb",
    "parse_sequent",
    "print_formula",
    "Dist",
    "Frame",
    "FrameTooLarge",
    "NotL1",
    "classical_models",
    "entails_sem",
    "height",
    "necessity",
    "u_eval",
    "valid_sequent_sem",
    "BlowupLimit",
    "Clause",
    "NormalForm",
    "negate_nf",
    "normalize",
    "simplify",
    "times_clause",
    "u_of_nf",
    "NotDerivable",
    "ProofNode",
    "RuleViolation",
    "Sequent",
    "check_node",
    "check_proof",
    "derive_clause_entailment",
    "prove_nf",
    "read_proof",
    "write_proof",
    "KnowledgeBase",
    "expand",
    "fuse",
    "query",
]

__version__ = "0.1.0"
