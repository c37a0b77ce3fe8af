"""
Tests for the LTL core: formula nodes, NNF, closure and lasso evaluation
"""

from fractions import Fraction

import numpy as np
import pytest

from reqlint.ltl import (
    FALSE,
    TRUE,
    And,
    BoolProp,
    Eventually,
    Globally,
    Implies,
    LassoTrace,
    Next,
    Not,
    NumConstraint,
    Or,
    Release,
    UncoveredProposition,
    Until,
    WeakUntil,
    closure,
    conjunction,
    disjunction,
    eval_on_lasso,
    propositions,
    size,
    to_nnf,
)
from reqlint.ltl.formula import canonical_constant, chain_operands, format_fraction
from reqlint.ltl.transforms import is_nnf
from reqlint.utils.generators import boolean_atoms, random_formula, random_lasso

p, q, r = BoolProp("p"), BoolProp("q"), BoolProp("r")
NAMES = ("p", "q", "r")


class TestFormula:
    """Test formula nodes and structural helpers"""

    def test_structural_equality(self):
        """Test that equal trees are equal and hash alike"""
        a = Globally(Implies(p, Eventually(q)))
        b = Globally(Implies(BoolProp("p"), Eventually(BoolProp("q"))))
        assert a == b
        assert hash(a) == hash(b)
        assert len({a, b}) == 1
        assert Until(p, q) != Release(p, q)

    def test_invalid_names(self):
        """Test identifier validation"""
        with pytest.raises(ValueError):
            BoolProp("1abc")
        with pytest.raises(ValueError):
            NumConstraint("x", "<=", "3")
        with pytest.raises(ValueError):
            NumConstraint("x", "<", "abc")

    def test_canonical_constants(self):
        """Test exact decimal constants"""
        assert canonical_constant("20") == "20"
        assert canonical_constant("20.0") == "20"
        assert canonical_constant("0.10") == "0.1"
        assert canonical_constant("-3.250") == "-3.25"
        assert NumConstraint("x", "<", "0.1") == NumConstraint("x", "<", "0.10")
        assert NumConstraint("x", "<", "0.1").value == Fraction(1, 10)

    def test_format_fraction(self):
        """Test rational rendering"""
        assert format_fraction(Fraction(19)) == "19"
        assert format_fraction(Fraction(5, 2)) == "2.5"
        assert format_fraction(Fraction(-1, 4)) == "-0.25"
        assert format_fraction(Fraction(1, 3)) == "1/3"

    def test_size_and_propositions(self):
        """Test node count and first-occurrence order"""
        formula = Globally(Implies(q, Eventually(p)))
        assert size(formula) == 5
        assert size(p) == 1
        assert propositions(And(q, Or(p, q))) == ("q", "p")

    def test_conjunction_folds_left(self):
        """Test n-ary folds"""
        assert conjunction([]) == TRUE
        assert disjunction([]) == FALSE
        assert conjunction([p]) == p
        assert conjunction([p, q, r]) == And(And(p, q), r)
        assert chain_operands(And(And(p, q), r)) == [p, q, r]
        assert chain_operands(And(p, And(q, r))) == [p, And(q, r)]
        assert chain_operands(Or(And(p, q), r)) == [And(p, q), r]


class TestNnf:
    """Test negation normal form"""

    def test_duality_examples(self):
        """Test the textbook rewrites"""
        assert to_nnf(Not(Globally(p))) == Eventually(Not(p))
        assert to_nnf(Globally(Implies(p, Eventually(q)))) == Globally(Or(Not(p), Eventually(q)))
        assert to_nnf(Not(Until(p, q))) == Release(Not(p), Not(q))
        assert to_nnf(Not(Release(p, q))) == Until(Not(p), Not(q))
        assert to_nnf(Not(Next(p))) == Next(Not(p))
        assert to_nnf(Not(TRUE)) == FALSE

    def test_weak_until_eliminated(self):
        """Test that W becomes a Release"""
        assert to_nnf(WeakUntil(p, q)) == Release(q, Or(p, q))
        assert is_nnf(to_nnf(Not(WeakUntil(p, q))))

    def test_random_formulas_equivalent(self):
        """Test that NNF preserves the lasso semantics"""
        rng = np.random.default_rng(0)
        atoms = boolean_atoms(NAMES)
        for _ in range(300):
            formula = random_formula(rng, atoms, int(rng.integers(1, 11)))
            nnf = to_nnf(formula)
            assert is_nnf(nnf)
            trace = random_lasso(rng, NAMES, max_length=6)
            assert eval_on_lasso(nnf, trace) == eval_on_lasso(formula, trace)


class TestClosure:
    """Test subformula closure"""

    def test_small_closures(self):
        """Test closures of atoms and binary nodes"""
        assert closure(p) == {p}
        assert closure(Until(p, q)) == {Until(p, q), p, q}

    def test_response_closure(self):
        """Test that a negated atom is a single literal"""
        formula = Globally(Or(Not(p), Eventually(q)))
        assert closure(formula) == {formula, Or(Not(p), Eventually(q)), Not(p), Eventually(q), q}

    def test_closure_bounded_by_size(self):
        """Test |closure| <= size on random NNF formulas"""
        rng = np.random.default_rng(1)
        atoms = boolean_atoms(NAMES)
        for _ in range(200):
            formula = to_nnf(random_formula(rng, atoms, int(rng.integers(1, 15))))
            assert len(closure(formula)) <= size(formula)


class TestLasso:
    """Test lasso traces and the reference evaluator"""

    def test_examples(self):
        """Test small hand-checked evaluations"""
        assert eval_on_lasso(Globally(p), LassoTrace((), ({"p": True},)))
        assert not eval_on_lasso(Eventually(q), LassoTrace(({"q": False},), ({"q": False},)))

    def test_vacuous_response(self):
        """Test that a response holds when the trigger never occurs"""
        msg, rcv = BoolProp("msg"), BoolProp("rcv")
        trace = LassoTrace(({"msg": False, "rcv": False},), ({"msg": False, "rcv": False},))
        assert eval_on_lasso(Globally(Implies(msg, Eventually(rcv))), trace)

    def test_until_release_on_loop(self):
        """Test fixpoints over the loop"""
        trace = LassoTrace(({"p": True, "q": False},), ({"p": True, "q": False}, {"p": False, "q": True}))
        assert eval_on_lasso(Until(p, q), trace)
        assert eval_on_lasso(Globally(Eventually(q)), trace)
        assert not eval_on_lasso(Eventually(Globally(p)), trace)
        assert not eval_on_lasso(Release(q, p), trace)
        assert eval_on_lasso(Next(Next(q)), trace)

    def test_numeric_atoms(self):
        """Test evaluation of constraints on concretized states"""
        trace = LassoTrace(({"x": Fraction(19)},), ({"x": Fraction(20)},))
        assert eval_on_lasso(NumConstraint("x", "<", "20"), trace)
        assert eval_on_lasso(Eventually(NumConstraint("x", "=", "20")), trace)
        assert not eval_on_lasso(Globally(NumConstraint("x", "<", "20")), trace)

    def test_uncovered_proposition(self):
        """Test that missing propositions are reported"""
        with pytest.raises(UncoveredProposition) as excinfo:
            eval_on_lasso(And(p, Next(q)), LassoTrace(({"p": True, "q": True},), ({"p": True},)))
        assert excinfo.value.name == "q"
        assert excinfo.value.position == 1

    def test_empty_loop_rejected(self):
        """Test the non-empty loop invariant"""
        with pytest.raises(ValueError):
            LassoTrace(({"p": True},), ())

    def test_boolean_connectives(self):
        """Test that And/Or evaluate componentwise"""
        rng = np.random.default_rng(2)
        atoms = boolean_atoms(NAMES)
        for _ in range(200):
            a = random_formula(rng, atoms, int(rng.integers(1, 7)))
            b = random_formula(rng, atoms, int(rng.integers(1, 7)))
            trace = random_lasso(rng, NAMES, max_length=6)
            assert eval_on_lasso(And(a, b), trace) == (eval_on_lasso(a, trace) and eval_on_lasso(b, trace))
            assert eval_on_lasso(Or(a, b), trace) == (eval_on_lasso(a, trace) or eval_on_lasso(b, trace))

    def test_unrolling_invariance(self):
        """Test that unrolling the loop into the prefix keeps the word"""
        rng = np.random.default_rng(3)
        atoms = boolean_atoms(NAMES)
        for _ in range(200):
            formula = random_formula(rng, atoms, int(rng.integers(1, 11)))
            trace = random_lasso(rng, NAMES, max_length=6)
            assert eval_on_lasso(formula, trace.unrolled()) == eval_on_lasso(formula, trace)

    def test_to_dict(self):
        """Test the JSON form of a trace"""
        trace = LassoTrace(({"b": True, "x": Fraction(5, 2)},), ({"b": False, "x": Fraction(19)},))
        assert trace.to_dict() == {
            "prefix": [{"b": True, "x": "2.5"}],
            "loop": [{"b": False, "x": "19"}],
        }
        assert len(trace) == 2
        assert trace.successor(1) == 1
