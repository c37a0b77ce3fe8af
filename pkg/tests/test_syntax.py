"""
Tests for the neutral LTL text syntax
"""

import sys

import numpy as np
import pytest

from reqlint.ltl import (
    TRUE,
    And,
    BoolProp,
    Eventually,
    FormulaSyntaxError,
    Globally,
    Implies,
    Next,
    Not,
    NumConstraint,
    Or,
    Release,
    Until,
    WeakUntil,
    format_formula,
    parse_formula,
)
from reqlint.ltl.formula import SMV, conjunction
from reqlint.utils.generators import boolean_atoms, constraint_atoms, random_formula

p, q, r = BoolProp("p"), BoolProp("q"), BoolProp("r")


class TestParseFormula:
    """Test parsing of neutral formulas"""

    def test_atoms(self):
        """Test propositions, constraints and constants"""
        assert parse_formula("p") == p
        assert parse_formula("x < 3") == NumConstraint("x", "<", "3")
        assert parse_formula("(x = -0.5)") == NumConstraint("x", "=", "-0.5")
        assert parse_formula("true") == TRUE
        assert parse_formula("TRUE") == TRUE

    def test_precedence(self):
        """Test unary > U/R > & > | > ->"""
        assert parse_formula("!p & q") == And(Not(p), q)
        assert parse_formula("p U q & r") == And(Until(p, q), r)
        assert parse_formula("p & q | r") == Or(And(p, q), r)
        assert parse_formula("p | q -> r") == Implies(Or(p, q), r)
        assert parse_formula("G p -> F q") == Implies(Globally(p), Eventually(q))
        assert parse_formula("X !p") == Next(Not(p))

    def test_associativity(self):
        """Test right-associative U and ->, left-associative &"""
        assert parse_formula("p U q U r") == Until(p, Until(q, r))
        assert parse_formula("p -> q -> r") == Implies(p, Implies(q, r))
        assert parse_formula("p & q & r") == And(And(p, q), r)

    def test_smv_synonyms(self):
        """Test V as Release and W as weak until"""
        assert parse_formula("p V q") == Release(p, q)
        assert parse_formula("p R q") == Release(p, q)
        assert parse_formula("p W q") == WeakUntil(p, q)

    def test_syntax_error(self):
        """Test error position and expected tokens"""
        with pytest.raises(FormulaSyntaxError) as excinfo:
            parse_formula("p & ")
        assert excinfo.value.line == 1
        assert excinfo.value.column >= 3

    def test_deep_nesting(self):
        """Test many parentheses and a long conjunction chain"""
        assert parse_formula("(" * 30 + "p" + ")" * 30) == p
        chain = " & ".join(f"s{i}" for i in range(200))
        assert parse_formula(f"({chain})") == conjunction(BoolProp(f"s{i}") for i in range(200))

    def test_nesting_too_deep(self):
        """Test that runaway nesting is a syntax error"""
        depth = sys.getrecursionlimit()
        with pytest.raises(FormulaSyntaxError) as excinfo:
            parse_formula("(" * depth + "p" + ")" * depth)
        assert "nesting too deep" in str(excinfo.value)
        assert parse_formula("(p & q)") == And(p, q)

    def test_keywords_are_not_identifiers(self):
        """Test that temporal keywords cannot be propositions"""
        with pytest.raises(FormulaSyntaxError):
            parse_formula("G")


class TestFormatFormula:
    """Test printing in both dialects"""

    def test_neutral(self):
        """Test neutral output"""
        assert format_formula(Globally(Implies(p, Eventually(q)))) == "G (p -> F q)"
        assert format_formula(Not(Globally(p))) == "!(G p)"
        assert format_formula(Not(And(p, q))) == "!(p & q)"
        assert format_formula(NumConstraint("x", "<", "20")) == "(x < 20)"
        assert format_formula(And(And(p, q), r)) == "(p & q & r)"
        assert format_formula(And(p, And(q, r))) == "(p & (q & r))"
        assert format_formula(Or(Or(p, q), And(q, r))) == "(p | q | (q & r))"

    def test_smv(self):
        """Test SMV output"""
        assert format_formula(Release(p, q), SMV) == "(p V q)"
        assert format_formula(TRUE, SMV) == "TRUE"
        assert format_formula(WeakUntil(p, q), SMV) == "(q V (p | q))"

    def test_round_trip(self):
        """Test parse(format(f)) == f on random formulas"""
        rng = np.random.default_rng(4)
        atoms = boolean_atoms(("p", "q", "r")) + constraint_atoms({"x": [-1, 2.5]})
        for _ in range(500):
            formula = random_formula(rng, atoms, int(rng.integers(1, 16)))
            assert parse_formula(format_formula(formula)) == formula
