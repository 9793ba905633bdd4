"""
Checked derivations
===================

Build proofs of entailments, check every step, write them to text and read
them back.  A proof that relies on contraction is rejected.
"""

from dplogic import normalize, parse_formula
from dplogic.calculus import (
    NotDerivable, check_proof, derivation_library, first_violation, prove_nf, read_proof, write_proof,
)

lib = derivation_library()
for name in ("MP", "GMP", "S", "contraction-by-absorption"):
    proof = lib[name]
    check_proof(proof)
    print(f"{name:28} {proof.conclusion}   ({proof.size()} steps)")

# entailment between weighted bases, with a proof object
lhs = normalize(parse_formula("(0.9 -> p) & (0.6 -> p -> q) & (0.3 -> q -> r)"))
rhs = normalize(parse_formula("0.3 -> r"))
proof = prove_nf(lhs, rhs)
check_proof(proof)
text = write_proof(proof, header=["three-step chain"])
assert read_proof(text) == proof
print(f"chain proof: {proof.size()} steps, {len(text.splitlines())} lines of text")

# asking for more than the base supports yields a counterexample instead
try:
    prove_nf(lhs, normalize(parse_formula("0.5 -> r")))
except NotDerivable as e:
    print(e)

# duplicating a graded formula is not a step of the calculus
bad = read_proof('(contraction "0.5 -> p |- (0.5 -> p) * (0.5 -> p)" ()\n'
                 '  (id "0.5 -> p |- 0.5 -> p" ()))\n')
print("rejected:", first_violation(bad))
