"""Sequent calculus: proof trees, the rule checker and the normal-form prover."""

from .proof import ARITY, RULES, ProofNode, RuleViolation, Sequent, check_node, check_proof, first_violation
from .prover import NotDerivable, derive_clause_entailment, prove_nf
from .proofio import ProofFormatError, proof_header, read_proof, write_proof
from .tactics import TacticError, classical_proof, contract_left, contract_right, prove_by_worlds
from .library import derivation_library

__all__ = [
    "ARITY", "RULES", "ProofNode", "RuleViolation", "Sequent", "check_node", "check_proof",
    "first_violation", "NotDerivable", "derive_clause_entailment", "prove_nf",
    "ProofFormatError", "proof_header", "read_proof", "write_proof", "TacticError",
    "classical_proof", "contract_left", "contract_right", "prove_by_worlds", "derivation_library",
]
