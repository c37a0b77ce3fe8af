"""
Tests for the model checker emitters
"""

import numpy as np
import pytest

from reqlint.abstraction import build_abstraction
from reqlint.emitters import (
    EmitError,
    EmitTarget,
    emit,
    emit_neutral,
    emit_smv,
    parse_neutral,
)
from reqlint.ltl import (
    FormulaSyntaxError,
    And,
    BoolProp,
    Eventually,
    Globally,
    Implies,
    Not,
    NumConstraint,
    parse_formula,
)
from reqlint.engine import check_sat
from reqlint.ltl.formula import conjunction
from reqlint.psp import conjoin, parse_requirements
from reqlint.utils.generators import (
    boolean_atoms,
    constraint_atoms,
    random_dc_formula,
    random_requirements,
)

p = BoolProp("p")
R1 = Globally(Implies(NumConstraint("proximity_sensor", "<", "20"), Eventually(BoolProp("arm_idle"))))


def smv_sections(text: str):
    """(declared variable names, LTLSPEC body)"""
    names, spec = [], None
    for line in text.splitlines():
        if line.startswith("  ") and line.endswith(" : boolean;"):
            names.append(line.strip().split(" : ")[0])
        elif line.startswith("LTLSPEC "):
            spec = line[len("LTLSPEC "):]
    return names, spec


class TestSmv:
    """Test SMV output"""

    def test_single_proposition(self):
        """Test the model for G p"""
        text = emit_smv(build_abstraction(Globally(p)))
        assert text.splitlines() == ["MODULE main", "VAR", "  p : boolean;", "LTLSPEC !(G p)"]
        assert text.endswith("\n") and "\r" not in text

    def test_numeric_requirement(self):
        """Test that region propositions are declared"""
        problem = build_abstraction(R1)
        names, spec = smv_sections(emit_smv(problem))
        assert set(names) == {"arm_idle", *problem.map.regions("proximity_sensor")}
        assert len(names) == 4
        assert parse_formula(spec) == Not(problem.query)

    def test_deterministic(self):
        """Test byte-identical output for the same input"""
        formula = And(R1, Eventually(NumConstraint("proximity_sensor", "=", "3")))
        assert emit_smv(build_abstraction(formula)) == emit_smv(build_abstraction(formula))

    @pytest.mark.parametrize("name", ["next", "init", "case", "word"])
    def test_reserved_names(self, name):
        """Test that SMV keywords cannot be emitted as variables"""
        with pytest.raises(EmitError):
            emit_smv(build_abstraction(Globally(BoolProp(name))))


class TestNeutral:
    """Test neutral LTL output"""

    def test_boolean_only(self):
        """Test the trivial exactly-one line"""
        text = emit_neutral(build_abstraction(Globally(p)))
        assert text == "G true\nG p\n"

    def test_round_trip(self):
        """Test reading both formulas back"""
        problem = build_abstraction(R1)
        q_m, phi_prime = parse_neutral(emit_neutral(problem))
        assert q_m == problem.q_m
        assert phi_prime == problem.phi_prime

    def test_comments_skipped(self):
        """Test blank lines and comments"""
        q_m, phi_prime = parse_neutral("# header\n\nG true\n# formula\nF p\n")
        assert phi_prime == Eventually(p)

    def test_wrong_line_count(self):
        """Test files without exactly two formulas"""
        with pytest.raises(ValueError):
            parse_neutral("G p\n")
        with pytest.raises(ValueError):
            parse_neutral("G p\nF p\nX p\n")

    def test_bad_formula(self):
        """Test syntax errors in a neutral file"""
        with pytest.raises(FormulaSyntaxError):
            parse_neutral("G true\np &\n")


class TestEmit:
    """Test target dispatch"""

    def test_targets(self):
        """Test both targets by value"""
        problem = build_abstraction(Globally(p))
        assert emit(problem, EmitTarget.SMV).startswith("MODULE main")
        assert emit(problem, "ltl") == emit_neutral(problem)

    def test_unknown_target(self):
        """Test an unsupported format name"""
        with pytest.raises(ValueError):
            emit(build_abstraction(Globally(p)), "dot")


class TestRandomProblems:
    """Test emitters on random abstracted problems"""

    def test_neutral_round_trip(self):
        """Test reading back 500 random problems"""
        rng = np.random.default_rng(31)
        for _ in range(500):
            formula = random_dc_formula(rng, size=int(rng.integers(1, 9)), propositions=("p", "q"))
            problem = build_abstraction(formula)
            assert parse_neutral(emit_neutral(problem)) == (problem.q_m, problem.phi_prime)

    def test_smv_deterministic(self):
        """Test byte-identical SMV output for random problems"""
        rng = np.random.default_rng(32)
        for _ in range(100):
            formula = random_dc_formula(rng, size=int(rng.integers(1, 9)), propositions=("p", "q"))
            assert emit_smv(build_abstraction(formula)) == emit_smv(build_abstraction(formula))

    def test_verdict_preserved(self):
        """Test that the read-back problem gets the same verdict"""
        problem = build_abstraction(R1)
        q_m, phi_prime = parse_neutral(emit_neutral(problem))
        assert check_sat(And(q_m, phi_prime)).satisfiable
        rng = np.random.default_rng(34)
        for _ in range(60):
            formula = random_dc_formula(rng, size=int(rng.integers(1, 7)), propositions=("p", "q"))
            problem = build_abstraction(formula)
            q_m, phi_prime = parse_neutral(emit_neutral(problem))
            assert check_sat(And(q_m, phi_prime)).satisfiable == check_sat(problem.query).satisfiable


class TestLargeProblems:
    """Test the neutral format on problems with many regions and requirements"""

    def test_many_regions(self):
        """Test a variable with nine regions"""
        formula = conjunction(Eventually(NumConstraint("x", "<", str(c))) for c in range(1, 5))
        problem = build_abstraction(formula)
        assert len(problem.map.regions("x")) == 9
        assert parse_neutral(emit_neutral(problem)) == (problem.q_m, problem.phi_prime)

    def test_many_requirements(self):
        """Test thirty conjoined requirements"""
        text = "\n".join(f"R{i}: Globally, s{i} eventually holds." for i in range(1, 31))
        problem = build_abstraction(conjoin(parse_requirements(text)))
        assert parse_neutral(emit_neutral(problem)) == (problem.q_m, problem.phi_prime)

    def test_random_requirement_sets(self):
        """Test sets of eight random requirements with numerical atoms"""
        rng = np.random.default_rng(35)
        atoms = boolean_atoms(("p", "q", "r")) + constraint_atoms({"x": [1, 5, 9], "y": [0, 2.5]})
        for _ in range(50):
            problem = build_abstraction(conjoin(random_requirements(rng, 8, atoms)))
            assert parse_neutral(emit_neutral(problem)) == (problem.q_m, problem.phi_prime)
            assert parse_formula(smv_sections(emit_smv(problem))[1]) == Not(problem.query)
