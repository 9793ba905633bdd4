"""
Merging two sources
===================

Expansion keeps the stronger of two opinions; fusion lets independent
agreeing sources reinforce each other.
"""

from dplogic import KnowledgeBase, expand, fuse, parse_formula, query
from dplogic.kb import kb_height

witness = KnowledgeBase.from_text("0.6 :: p\n0.5 :: p -> q\n", "witness")
camera = KnowledgeBase.from_text("0.8 :: p\n", "camera")
goal_p, goal_q = parse_formula("p"), parse_formula("q")

for name, k in (("witness", witness), ("camera", camera),
                ("expand", expand(witness, camera)), ("fuse", fuse(witness, camera))):
    print(f"{name:8} N(p) = {query(k, goal_p)!s:5} N(q) = {query(k, goal_q)!s:5}")
    print("         " + k.to_text().replace("\n", "\n         ").rstrip())

# the same source counted twice is not the same source
print("fuse(camera, camera): N(p) =", query(fuse(camera, camera), goal_p))

# conflicting sources: height drops, nothing is rejected automatically
liar = KnowledgeBase.from_text("0.7 :: ~p\n", "liar")
print("height(expand(camera, liar)) =", kb_height(expand(camera, liar)))
print("height(fuse(camera, liar))   =", kb_height(fuse(camera, liar)))
