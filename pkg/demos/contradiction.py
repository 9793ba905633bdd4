"""
How inconsistent can a formula be?
==================================

A * ~A has height 0 for every A.  A & ~A can keep some plausibility, but
never more than 1/2: crisp formulas reach 0 and the constant 0.5 hits the bound.
"""

import random

from dplogic import Frame, height, parse_formula, u_eval
from dplogic.core import Neg, Times, With

for text in ("p", "0.7 -> p", "(0.6 -> p) & (0.8 -> ~p)", "0.5", "p * q | ~q"):
    a = parse_formula(text)
    frame = Frame.over(a)
    h_times = height(u_eval(Times(a, Neg(a)), frame))
    h_with = height(u_eval(With(a, Neg(a)), frame))
    print(f"{text:26} height(A * ~A) = {h_times!s:4} height(A & ~A) = {h_with}")

# the bounds hold on random formulas too
rng = random.Random(0)
names = "pqr"
worst = 0
for _ in range(500):
    text = " ".join(rng.choice(["p", "q", "r", "0.3", "0.6"]) + rng.choice([" &", " *", " ->", " |"])
                    for _ in range(3)) + " " + rng.choice(names)
    a = parse_formula(text)
    frame = Frame.over(a)
    assert height(u_eval(Times(a, Neg(a)), frame)) == 0
    worst = max(worst, height(u_eval(With(a, Neg(a)), frame)))
print("largest height(A & ~A) seen:", worst)
