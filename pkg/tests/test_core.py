from fractions import Fraction as F

import pytest
from hypothesis import given

from dplogic.core import (
    BOTTOM, TOP, Atom, Const, Neg, Times, With, WeightError, as_weight, atoms, conj, is_l1,
    make_arrow, make_oplus, make_par, match_arrow, match_oplus, match_par,
    w_max, w_min, w_neg, w_par, w_times,
)

from .strategies import formulas, weights

p, q, r = Atom("p"), Atom("q"), Atom("r")


class TestWeights:
    def test_times_examples(self):
        assert w_times(F(1), F(2, 5)) == F(2, 5)
        assert w_times(F(7, 10), F(6, 10)) == F(3, 10)
        assert w_times(F(3, 10), F(4, 10)) == 0

    def test_neg_examples(self):
        assert w_neg(F(0)) == 1
        assert w_neg(F(1, 2)) == F(1, 2)
        assert w_neg(F(7, 10)) == F(3, 10)

    def test_par_min_examples(self):
        assert w_par(F(1, 2), F(1, 2)) == 1
        assert w_par(F(3, 10), F(4, 10)) == F(7, 10)
        assert w_min(F(1), F(1, 3)) == F(1, 3)
        assert w_max(F(1, 4), F(1, 3)) == F(1, 3)

    @pytest.mark.parametrize("value, expected", [
        ("0.7", F(7, 10)), (0.7, F(7, 10)), (1, F(1)), ("3/8", F(3, 8)), (F(1, 3), F(1, 3)),
    ])
    def test_as_weight(self, value, expected):
        assert as_weight(value) == expected

    @pytest.mark.parametrize("bad", ["1.5", -0.1, "x", True, "1/0"])
    def test_as_weight_rejects(self, bad):
        with pytest.raises(WeightError):
            as_weight(bad)

    def test_const_validates(self):
        with pytest.raises(WeightError):
            Const(F(3, 2))

    @given(weights, weights, weights)
    def test_times_is_commutative_monoid(self, a, b, c):
        assert w_times(a, b) == w_times(b, a)
        assert w_times(w_times(a, b), c) == w_times(a, w_times(b, c))
        assert w_times(a, F(1)) == a
        assert w_times(a, F(0)) == 0

    @given(weights, weights)
    def test_times_below_min(self, a, b):
        assert w_times(a, b) <= w_min(a, b)

    @given(weights)
    def test_negation_involution(self, a):
        assert w_neg(w_neg(a)) == a
        assert w_times(a, w_neg(a)) == 0

    @given(weights, weights)
    def test_de_morgan(self, a, b):
        assert w_par(a, b) == w_neg(w_times(w_neg(a), w_neg(b)))
        assert 0 <= w_par(a, b) <= 1


class TestFormulas:
    def test_expansions(self):
        assert make_arrow(p, q) == Neg(Times(p, Neg(q)))
        assert make_oplus(p, q) == Neg(With(Neg(p), Neg(q)))
        assert make_par(p, q) == Neg(Times(Neg(p), Neg(q)))

    def test_matchers(self):
        assert match_arrow(make_arrow(p, q)) == (p, q)
        assert match_oplus(make_oplus(p, q)) == (p, q)
        assert match_par(make_par(p, q)) == (p, q)
        assert match_arrow(Neg(p)) is None
        assert match_oplus(make_arrow(p, q)) is None

    def test_is_l1(self):
        assert is_l1(p)
        assert is_l1(Const(1)) and is_l1(Const(0))
        assert not is_l1(Neg(With(p, Const(F(7, 10)))))

    def test_atoms(self):
        assert atoms(Const(F(1, 2))) == ()
        assert atoms(Times(q, Neg(p))) == ("p", "q")
        assert atoms(With(p, p)) == ("p",)
        assert atoms(p, r, q) == ("p", "q", "r")

    def test_conj(self):
        assert conj([]) == TOP
        assert conj([p, q, r]) == With(With(p, q), r)
        assert conj([p, q], Times) == Times(p, q)

    def test_constants(self):
        assert TOP == Const(1) and BOTTOM == Const(0)

    @given(formulas())
    def test_equality_and_hash_are_structural(self, f):
        from dplogic.parser import parse_formula, print_formula

        g = parse_formula(print_formula(f))
        assert g == f and hash(g) == hash(f)
        assert f.size() == sum(1 for _ in f)

    @given(formulas())
    def test_expansions_use_only_core_nodes(self, f):
        assert all(isinstance(n, (Atom, Const, Neg, With, Times)) for n in f)

    def test_formulas_are_immutable(self):
        with pytest.raises(Exception):
            p.name = "q"


class TestDeepFormulas:
    """Construction and traversal must not depend on the interpreter stack."""

    DEPTH = 20000

    def chain(self, depth=DEPTH):
        from dplogic.core import Atom, Neg, With

        f = Atom("p")
        for i in range(depth):
            f = Neg(f) if i % 2 else With(f, Atom("q"))
        return f

    def test_hash_and_equality(self):
        a, b = self.chain(), self.chain()
        assert a == b and hash(a) == hash(b)
        assert a != self.chain(self.DEPTH - 1)

    def test_print_evaluate_normalize(self):
        from dplogic.normalform import normalize, u_of_nf
        from dplogic.parser import print_formula
        from dplogic.semantics import Frame, u_eval

        f = self.chain()
        assert print_formula(f).count("q") == self.DEPTH // 2
        frame = Frame.over(f)
        assert u_of_nf(normalize(f), frame) == u_eval(f, frame)
