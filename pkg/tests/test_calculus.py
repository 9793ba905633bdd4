from fractions import Fraction as F

import pytest
from hypothesis import HealthCheck, given, settings

from dplogic.calculus import (
    RULES, NotDerivable, ProofFormatError, ProofNode, RuleViolation, Sequent, check_node, check_proof,
    derivation_library, derive_clause_entailment, first_violation, prove_nf, read_proof, write_proof,
)
from dplogic.calculus import build as b
from dplogic.calculus.library import generalized_mp, modus_ponens, times_reduction
from dplogic.calculus.tactics import TacticError, classical_proof, contract_left, excluded_middle, prove_by_worlds
from dplogic.core import TOP, Atom, Const, Neg, Times, With, make_arrow, make_oplus, make_par
from dplogic.normalform import Clause, NormalForm, u_of_nf
from dplogic.semantics import valid_sequent_sem

from . import oracle
from .strategies import crisp_formulas, formulas, normal_forms, tenths

p, q, r = Atom("p"), Atom("q"), Atom("r")
half, c3, c7 = Const(F(1, 2)), Const(F(3, 10)), Const(F(7, 10))


def node(rule, gamma, delta, premises=(), **params):
    return ProofNode(rule, Sequent(gamma, delta), premises, params)


def ok(n):
    check_node(n)
    return True


def rejected(n, fragment=""):
    with pytest.raises(RuleViolation) as e:
        check_node(n)
    assert fragment in str(e.value)
    return True


def valid_everywhere(proof):
    for n in proof.walk():
        c = n.conclusion
        assert valid_sequent_sem(c.gamma, c.delta), str(c)


class TestAxioms:
    def test_identity(self):
        assert ok(node("id", (p,), (p,)))
        assert rejected(node("id", (p,), (q,)))
        assert rejected(node("id", (p, p), (p,)))

    def test_s_prime(self):
        assert ok(node("Sprime", (c3,), (c7,)))
        assert rejected(node("Sprime", (c7,), (c3,)), "0.7")
        assert rejected(node("Sprime", (p,), (c7,)), "constant")

    def test_numerical(self):
        assert ok(b.times_def(F(7, 10), F(3, 5)))
        assert ok(b.times_def(F(7, 10), F(3, 5), reverse=True))
        assert rejected(node("timesDef", (Times(c7, c7),), (Const(F(1, 2)),)))
        assert ok(b.neg_def(F(7, 10)))
        assert rejected(node("negDef", (Neg(c7),), (c7,)))
        # only the direction ~a |- 1 - a is primitive
        assert rejected(node("negDef", (c3,), (Neg(c7),)))

    def test_unit_axioms(self):
        assert ok(b.one_axiom((p, q), (r,)))
        assert ok(b.zero_axiom((p,), (q, r)))
        assert rejected(node("oneAx", (p,), (p,), principal=0))
        assert rejected(node("zeroAx", (p,), (), principal=0))

    def test_distributivity(self):
        assert ok(b.distributivity(p, q, c7))
        assert rejected(node("distr", (With(Times(p, c7), Times(q, c3)),), (Times(With(p, q), c7),)))
        assert rejected(node("distr", (Times(With(p, q), c7),), (With(Times(p, c7), Times(q, c7)),)))

    def test_axioms_take_no_premises(self):
        assert rejected(node("id", (p,), (p,), (b.identity(p),)), "premise")

    @given(tenths, tenths)
    def test_numerical_axioms_are_sound(self, a, c):
        for n in (b.times_def(a, c), b.times_def(a, c, True), b.neg_def(a), b.s_prime(min(a, c), max(a, c))):
            assert ok(n)
            assert valid_sequent_sem(n.conclusion.gamma, n.conclusion.delta)

    @given(formulas(("p", "q")), formulas(("p", "q")), formulas(("p", "q")))
    def test_distributivity_is_sound(self, x, y, z):
        n = b.distributivity(x, y, z)
        assert valid_sequent_sem(n.conclusion.gamma, n.conclusion.delta)


class TestStructural:
    def test_cut(self):
        left, right = b.identity(p), b.identity(p)
        assert ok(b.cut(left, right, p))
        bad = node("cut", (p, q), (p,), (left, right), cut=p)
        assert rejected(bad, "antecedent")
        assert rejected(node("cut", (p,), (p,), (left, right)), "cut formula")

    def test_exchange_is_identity_on_multisets(self):
        base = b.weaken_left(b.identity(p), q)
        assert ok(b.exchange_left(base, (1, 0)))
        assert rejected(node("exL", (q, q), (p,), (base,)))
        assert ok(node("exR", (p, q), (p,), (base,)))

    def test_weakening(self):
        assert ok(b.weaken_left(b.identity(p), q))
        assert ok(b.weaken_right(b.identity(p), q))
        assert rejected(node("wL", (p, q, r), (p,), (b.identity(p),), principal=1), "exactly one")
        assert rejected(node("wL", (p, q), (p,), (b.identity(p),)), "principal")
        assert rejected(node("wL", (p, q), (p,), (b.identity(p),), principal=7), "range")

    def test_absorption(self):
        assert ok(b.absorb(b.identity(p), p, p))
        graded = make_arrow(half, p)
        n = b.absorb(b.identity(graded), graded, graded)
        assert rejected(n, "L1")
        # the absorbed B must stay in the antecedent
        assert rejected(node("abs", (q,), (Times(p, r),), (node("id", (q,), (p,)),), principal=0))

    def test_contraction_is_not_a_rule(self):
        premise = node("id", (p, p), (p,))
        assert rejected(node("contraction", (p,), (p,), (premise,)), "unknown rule")
        assert "contraction" not in RULES

    def test_contraction_via_absorption(self):
        proof = derivation_library()["contraction-by-absorption"]
        check_proof(proof)
        assert proof.conclusion == Sequent((p,), (Times(p, p),))
        assert any(n.rule == "abs" and n.conclusion == Sequent((p,), (Times(p, p),)) for n in proof.walk())

    def test_contraction_needs_crisp_formula(self):
        graded = make_arrow(half, p)
        two = b.times_left(b.times_right(b.identity(graded), b.identity(graded), graded, graded), graded, graded)
        with pytest.raises(RuleViolation):
            check_proof(contract_left(b.weaken_left(b.weaken_left(b.identity(q), graded), graded), graded))
        assert not valid_sequent_sem((graded,), (Times(graded, graded),))
        check_proof(two)


class TestLogical:
    def test_and(self):
        assert ok(b.and_left(b.identity(p), With(p, q), 0))
        assert ok(b.and_left(b.identity(q), With(p, q), 1))
        assert rejected(node("andL", (With(p, q),), (p,), (b.identity(p),), principal=0, side=1))
        assert ok(b.and_right(b.identity(p), b.weaken_left(b.one_axiom(), p), p, TOP))
        assert rejected(node("andR", (p,), (With(p, q),), (b.identity(p), b.identity(q)), principal=0),
                        "antecedent")

    def test_times(self):
        assert ok(b.times_right(b.identity(p), b.identity(q), p, q))
        assert ok(b.times_left(b.times_right(b.identity(p), b.identity(q), p, q), p, q))
        assert rejected(node("timesL", (Times(p, q),), (p,), (b.identity(p),), principal=0))

    def test_oplus(self):
        assert ok(b.oplus_right(b.identity(p), p, q, 0))
        assert ok(b.oplus_left(b.weaken_right(b.identity(p), q), b.weaken_right(b.identity(q), p), p, q))
        assert rejected(node("oplusL", (make_oplus(p, q),), (p,), (b.identity(p), b.identity(q)), principal=0))

    def test_par(self):
        assert ok(b.par_right(b.weaken_right(b.identity(p), q), p, q))
        assert ok(b.par_left(b.identity(p), b.identity(q), p, q))

    def test_arrow(self):
        n = b.arrow_left(b.identity(p), b.identity(q), p, q)
        assert ok(n) and n.conclusion == Sequent((p, make_arrow(p, q)), (q,))
        assert ok(b.arrow_right(b.weaken_left(b.identity(q), p), p, q))
        # ~p -> q and p % q are the same formula and may be introduced under either label
        assert make_par(p, q) == make_arrow(Neg(p), q)
        assert ok(b.arrow_right(b.weaken_left(b.identity(q), Neg(p)), Neg(p), q))
        assert rejected(node("arrowR", (), (make_arrow(p, q),), (b.identity(q),), principal=0))

    def test_negation(self):
        n = b.neg_right(b.identity(p), p)
        assert ok(n) and n.conclusion == Sequent((), (p, Neg(p)))
        assert ok(b.neg_left(b.identity(p), p))
        assert rejected(node("negL", (p,), (), (b.identity(p),), principal=0), "negation")

    def test_one(self):
        assert ok(b.one_left(b.identity(p)))
        assert rejected(node("one", (p, half), (p,), (b.identity(p),), principal=1), "not 1")


class TestDerivations:
    def test_library_checks_and_is_sound(self):
        lib = derivation_library()
        for name in ("id", "MP", "GMP", "S", "times-red", "times-red-converse", "neg-red",
                     "neg-red-converse", "contraction-by-absorption"):
            assert name in lib
        for name, proof in lib.items():
            assert first_violation(proof) is None, name
            valid_everywhere(proof)

    def test_library_conclusions(self):
        lib = derivation_library()
        assert str(lib["MP"].conclusion) == "p & (p -> q) |- q"
        assert str(lib["GMP"].conclusion) == "(0.7 -> p) & (0.4 -> p -> q) |- 0.7 & 0.4 -> q"
        assert str(lib["S"].conclusion) == "0.7 -> p |- 0.5 -> p"
        assert str(lib["neg-red"].conclusion) == "~(0.7 -> p) |- 0.7 & ~p"

    @given(tenths, tenths)
    @settings(max_examples=20, deadline=None)
    def test_gmp_instances(self, a, c):
        proof = generalized_mp(a, c, p, q)
        check_proof(proof)
        valid_everywhere(proof)

    @given(tenths, tenths, crisp_formulas(("p", "q"), 3), crisp_formulas(("p", "q"), 3))
    @settings(max_examples=15, deadline=None)
    def test_times_reduction_instances(self, a, c, l, m):
        for rev in (False, True):
            proof = times_reduction(a, c, l, m, reverse=rev)
            check_proof(proof)

    @given(crisp_formulas(("p", "q"), 4), crisp_formulas(("p", "q"), 4))
    @settings(max_examples=30, deadline=None)
    def test_modus_ponens_instances(self, a, c):
        check_proof(modus_ponens(a, c))

    def test_excluded_middle(self):
        proof = excluded_middle(p)
        check_proof(proof)
        assert proof.conclusion == Sequent((), (make_oplus(p, Neg(p)),))

    @given(formulas(("p", "q"), max_leaves=6), formulas(("p", "q"), max_leaves=6))
    @settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
    def test_world_splitting_proves_exactly_valid_sequents(self, x, t):
        if oracle.entails(x, t):
            proof = prove_by_worlds(x, t)
            check_proof(proof)
            assert proof.conclusion == Sequent((x,), (t,))
        else:
            with pytest.raises(TacticError):
                prove_by_worlds(x, t)

    def test_classical_requires_crisp(self):
        with pytest.raises(TacticError):
            classical_proof(half, p)


def _rename(root, target, rule):
    if root is target:
        return ProofNode(rule, root.conclusion, root.premises, root.params)
    kids = tuple(_rename(k, target, rule) for k in root.premises)
    if all(a is c for a, c in zip(kids, root.premises)):
        return root
    return ProofNode(root.rule, root.conclusion, kids, root.params)


def _edit(root, target, gamma, delta):
    if root is target:
        return ProofNode(root.rule, Sequent(gamma, delta), root.premises, root.params)
    kids = tuple(_edit(k, target, gamma, delta) for k in root.premises)
    if all(a is c for a, c in zip(kids, root.premises)):
        return root
    return ProofNode(root.rule, root.conclusion, kids, root.params)


def _equivalent_relabel(n, rule):
    # the only renames that leave a correct step: c |- c on a constant is both an
    # identity and an S' instance, and the 1-rule is a weakening by 1
    c = n.conclusion
    if {n.rule, rule} == {"id", "Sprime"}:
        return isinstance(c.gamma[0], Const) and c.gamma == c.delta
    return n.rule == "one" and rule == "wL"


class TestMutations:
    LIBRARY = derivation_library()

    @pytest.mark.parametrize("name", sorted(LIBRARY))
    def test_rule_renames_are_rejected(self, name):
        proof = self.LIBRARY[name]
        nodes = list(proof.walk())[:40]
        allowed = 0
        for n in nodes:
            for rule in RULES + ("contraction",):
                if rule == n.rule:
                    continue
                mutant = _rename(proof, n, rule)
                if _equivalent_relabel(n, rule):
                    assert first_violation(mutant) is None
                    allowed += 1
                    continue
                assert first_violation(mutant) is not None, (name, n.rule, rule, str(n.conclusion))

    @pytest.mark.parametrize("name", sorted(LIBRARY))
    def test_multiset_edits_are_rejected(self, name):
        proof = self.LIBRARY[name]
        extra = Atom("zz")
        for n in list(proof.walk())[:40]:
            g, d = n.conclusion.gamma, n.conclusion.delta
            edits = [(g + (extra,), d), (g, d + (extra,))]
            if g:
                edits += [(g[1:], d), (g + g[:1], d)]
            if d:
                edits += [(g, d[1:]), (g, d + d[:1])]
            for eg, ed in edits:
                assert first_violation(_edit(proof, n, eg, ed)) is not None, (name, n.rule)

    def test_violation_names_rule_and_node(self):
        proof = self.LIBRARY["MP"]
        mutant = _rename(proof, proof.premises[1], "wR")
        v = first_violation(mutant)
        assert v.rule == "wR" and v.node.conclusion == proof.premises[1].conclusion


class TestProver:
    def test_s_base_case(self):
        proof = derive_clause_entailment(NormalForm.of((F(7, 10), p)), Clause(F(1, 2), p))
        check_proof(proof)
        assert proof.rule == "arrowR"
        assert any(n.rule == "Sprime" and n.conclusion == Sequent((half,), (c7,)) for n in proof.walk())

    def test_zero_base_case(self):
        proof = derive_clause_entailment(NormalForm.of((F(7, 10), p)), Clause(0, q))
        check_proof(proof)
        assert proof.rule == "wL" and proof.premises[0].premises[0].rule == "zeroAx"

    def test_inductive_step(self):
        kb = NormalForm.of((F(7, 10), p), (F(2, 5), make_arrow(p, q)))
        proof = derive_clause_entailment(kb, Clause(F(2, 5), q))
        check_proof(proof)
        assert proof.conclusion == Sequent((kb.formula(),), (make_arrow(Const(F(2, 5)), q),))
        assert proof.rule == "cut"
        valid_everywhere(proof)

    def test_first_clauses_suffice(self):
        kb = NormalForm.of((F(7, 10), p), (F(2, 5), q))
        proof = derive_clause_entailment(kb, Clause(F(1, 2), p))
        check_proof(proof)
        assert proof.rule == "andL" and proof.params["side"] == 0

    def test_tautological_goal(self):
        proof = derive_clause_entailment(NormalForm.of((F(1, 5), p)), Clause(F(9, 10), make_oplus(q, Neg(q))))
        check_proof(proof)

    def test_empty_goal_and_reflexivity(self):
        n = NormalForm.of((F(7, 10), p), (F(1, 5), make_arrow(p, q)))
        proof = prove_nf(n, NormalForm())
        assert proof.rule == "oneAx"
        check_proof(proof)
        proof = prove_nf(n, n)
        check_proof(proof)
        assert proof.conclusion == Sequent((n.formula(),), (n.formula(),))

    def test_empty_premises(self):
        proof = prove_nf(NormalForm(), NormalForm.of((0, p), (F(1, 2), make_oplus(p, Neg(p)))))
        check_proof(proof)
        with pytest.raises(NotDerivable):
            prove_nf(NormalForm(), NormalForm.of((F(1, 2), p)))

    def test_not_derivable_carries_counterexample(self):
        a, goal = NormalForm.of((F(1, 2), p)), NormalForm.of((F(7, 10), p))
        with pytest.raises(NotDerivable) as e:
            prove_nf(a, goal)
        w = e.value.world
        assert u_of_nf(a, e.value.frame)[w] > u_of_nf(goal, e.value.frame)[w]
        assert e.value.clause == Clause(F(7, 10), p)

    @given(normal_forms(("p", "q", "r"), max_size=3), normal_forms(("p", "q", "r"), max_size=3))
    @settings(max_examples=60, deadline=None)
    def test_complete_and_sound(self, a, goal):
        expected = oracle.nf_entails(a, goal)
        try:
            proof = prove_nf(a, goal)
        except NotDerivable:
            assert not expected
            return
        assert expected
        check_proof(proof)
        assert proof.conclusion == Sequent((a.formula(),), (goal.formula(),))

    @given(normal_forms(("p", "q"), max_size=3))
    @settings(max_examples=30, deadline=None)
    def test_weakened_goals_are_provable(self, a):
        goal = NormalForm(tuple(Clause(c.weight / 2, make_oplus(c.body, q)) for c in a))
        proof = prove_nf(a, goal)
        check_proof(proof)
        valid_everywhere(proof)


class TestProofFiles:
    @pytest.mark.parametrize("name", sorted(derivation_library()))
    def test_round_trip(self, name):
        proof = derivation_library()[name]
        text = write_proof(proof)
        back = read_proof(text)
        assert back == proof
        assert write_proof(back) == text

    def test_header(self):
        from dplogic.calculus import proof_header

        text = write_proof(b.identity(p), header=["made by hand", "second"])
        assert text.startswith("; made by hand\n; second\n(id ")
        assert proof_header(text) == ["made by hand", "second"]
        assert read_proof(text) == b.identity(p)

    def test_layout(self):
        text = write_proof(b.cut(b.identity(p), b.identity(p), p))
        assert text == '(cut "p |- p" ((cut "p"))\n  (id "p |- p" ())\n  (id "p |- p" ()))\n'

    @given(normal_forms(("p", "q"), max_size=2), normal_forms(("p", "q"), max_size=2))
    @settings(max_examples=20, deadline=None)
    def test_prover_output_round_trips(self, a, goal):
        try:
            proof = prove_nf(a, goal)
        except NotDerivable:
            return
        text = write_proof(proof)
        assert write_proof(read_proof(text)) == text

    @pytest.mark.parametrize("text", [
        "", "(id", "(id \"p |- p\" ()))", "(id \"p |- \" (", "(id \"p |- p &\" ())", "(id p ())",
        "(id \"p |- p\" ((principal x)))", "(id \"p |- p\" ()) (id \"p |- p\" ())", "(\"x\" \"p |- p\" ())",
    ])
    def test_malformed(self, text):
        with pytest.raises(ProofFormatError):
            read_proof(text)

    def test_read_does_not_check(self):
        text = '(contraction "p |- p" ()\n  (id "p, p |- p" ()))\n'
        proof = read_proof(text)
        assert first_violation(proof).rule == "contraction"
