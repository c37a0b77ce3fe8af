"""
Tests for the boolean abstraction of numerical constraints
"""

import itertools
from fractions import Fraction

import numpy as np
import pytest

from reqlint.abstraction import (
    AbstractionMap,
    MixedUse,
    NameCollision,
    NoActiveRegion,
    build_abstraction,
    concretize_witness,
    extract_signature,
    region_name,
)
from reqlint.engine import check_sat
from reqlint.ltl import (
    TRUE,
    And,
    BoolProp,
    Eventually,
    Globally,
    Implies,
    LassoTrace,
    NumConstraint,
    eval_on_lasso,
)
from reqlint.ltl.formula import canonical_constant, is_boolean, propositions
from reqlint.utils.generators import random_dc_formula

sensor_lt_20 = NumConstraint("proximity_sensor", "<", "20")
arm_idle = BoolProp("arm_idle")
R1 = Globally(Implies(sensor_lt_20, Eventually(arm_idle)))


def region_alphabet(amap: AbstractionMap, names):
    """Every state over boolean ``names`` and one region per variable, with representative values"""
    letters = []
    region_choices = [range(len(amap.regions(var))) for var in amap.variables]
    for bits in itertools.product((False, True), repeat=len(names)):
        for regions in itertools.product(*region_choices):
            state = dict(zip(names, bits))
            for var, index in zip(amap.variables, regions):
                state[var] = amap.representative(var, index)
            letters.append(state)
    return letters


def brute_force_sat(formula, max_length: int) -> bool:
    """Search lassos over the region alphabet for a model of an LTL(D_C) formula"""
    amap = AbstractionMap(dict(extract_signature(formula).constants))
    letters = region_alphabet(amap, propositions(formula))
    for total in range(1, max_length + 1):
        for word in itertools.product(letters, repeat=total):
            for loop_start in range(total):
                if eval_on_lasso(formula, LassoTrace(word[:loop_start], word[loop_start:])):
                    return True
    return False


class TestSignature:
    """Test variable and constant extraction"""

    def test_example(self):
        """Test the robotic arm requirement"""
        signature = extract_signature(R1)
        assert signature.variables == ("proximity_sensor",)
        assert signature.constants == {"proximity_sensor": (Fraction(20),)}
        assert signature.propositions == ("arm_idle",)

    def test_boolean_only(self):
        """Test that boolean formulas have no variables"""
        signature = extract_signature(Globally(BoolProp("p")))
        assert signature.variables == ()
        assert signature.constants == {}

    def test_constants_sorted_and_deduplicated(self):
        """Test exact rational merging"""
        formula = And(
            And(NumConstraint("x", "<", "7"), NumConstraint("x", "=", "3")),
            And(NumConstraint("x", "<", "7.0"), NumConstraint("x", "=", "0.30")),
        )
        assert extract_signature(formula).constants["x"] == (Fraction(3, 10), Fraction(3), Fraction(7))

    def test_mixed_use(self):
        """Test that a name cannot be both proposition and variable"""
        with pytest.raises(MixedUse) as excinfo:
            extract_signature(And(BoolProp("x"), NumConstraint("x", "<", "1")))
        assert excinfo.value.name == "x"


class TestAbstractionMap:
    """Test region definitions"""

    def test_region_names(self):
        """Test 2k + 1 regions with reserved names"""
        amap = AbstractionMap({"x": (Fraction(3), Fraction(7))})
        assert amap.regions("x") == tuple(region_name("x", j) for j in range(5))
        assert amap.regions("x")[0] == "__x__r0"

    def test_regions_partition(self):
        """Test that exactly one region holds for random rationals"""
        rng = np.random.default_rng(9)
        amap = AbstractionMap({"x": (Fraction(-2), Fraction(1, 2), Fraction(3), Fraction(7))})
        for _ in range(1000):
            value = Fraction(int(rng.integers(-100, 101)), int(rng.integers(1, 9)))
            holding = [j for j in range(9) if amap.region_contains("x", j, value)]
            assert len(holding) == 1

    def test_representatives(self):
        """Test c1 - 1, c_i, midpoints and ck + 1"""
        amap = AbstractionMap({"x": (Fraction(3), Fraction(7))})
        assert [amap.representative("x", j) for j in range(5)] == [2, 3, 5, 7, 8]
        for j in range(5):
            assert amap.region_contains("x", j, amap.representative("x", j))

    def test_substitution_soundness(self):
        """Test every atom against every region's representative"""
        rng = np.random.default_rng(10)
        for _ in range(50):
            k = int(rng.integers(1, 5))
            constants = tuple(sorted({Fraction(int(c), 2) for c in rng.integers(-10, 11, size=k)}))
            amap = AbstractionMap({"x": constants})
            for c in constants:
                for rel in ("<", "="):
                    atom = NumConstraint("x", rel, canonical_constant(c))
                    covered = set(amap.atom_regions(atom))
                    for j, name in enumerate(amap.regions("x")):
                        value = amap.representative("x", j)
                        holds = value < c if rel == "<" else value == c
                        assert (name in covered) == holds

    def test_reverse_index(self):
        """Test the (var, rel, const) lookup"""
        amap = AbstractionMap({"x": (Fraction(3), Fraction(7))})
        index = amap.reverse_index
        assert index[("x", "<", "3")] == ("__x__r0",)
        assert index[("x", "=", "7")] == ("__x__r3",)
        assert index[("x", "<", "7")] == ("__x__r0", "__x__r1", "__x__r2")


class TestBuildAbstraction:
    """Test the abstraction of whole formulas"""

    def test_example(self):
        """Test the k = 1 instance"""
        result = build_abstraction(R1)
        regions = result.map.regions("proximity_sensor")
        assert len(regions) == 3
        assert result.phi_prime == Globally(Implies(BoolProp(regions[0]), Eventually(arm_idle)))
        assert is_boolean(result.phi_prime)
        assert isinstance(result.q_m, Globally)
        assert result.query == And(result.q_m, result.phi_prime)
        assert result.source == R1

    def test_boolean_only(self):
        """Test the empty abstraction"""
        formula = Eventually(BoolProp("q"))
        result = build_abstraction(formula)
        assert result.phi_prime == formula
        assert result.q_m == Globally(TRUE)
        assert result.query == formula

    def test_exclusive_regions_unsat(self):
        """Test that x < 5 and x = 5 cannot hold together"""
        result = build_abstraction(And(NumConstraint("x", "<", "5"), NumConstraint("x", "=", "5")))
        assert not check_sat(result.query).satisfiable

    def test_name_collision(self):
        """Test that user names in the region namespace are rejected"""
        formula = And(BoolProp("__x__r0"), NumConstraint("x", "<", "1"))
        with pytest.raises(NameCollision):
            build_abstraction(formula)

    def test_example_satisfiable(self):
        """Test the robotic arm requirement end to end"""
        result = build_abstraction(R1)
        verdict = check_sat(result.query)
        assert verdict.satisfiable
        assert eval_on_lasso(result.q_m, verdict.witness)

    def test_matches_region_oracle(self):
        """Test engine verdicts on random LTL(D_C) formulas against lasso enumeration"""
        rng = np.random.default_rng(11)
        for _ in range(60):
            formula = random_dc_formula(rng, max_variables=1, max_constants=1,
                                        size=int(rng.integers(1, 7)), propositions=())
            result = build_abstraction(formula)
            verdict = check_sat(result.query)
            if verdict.satisfiable:
                assert eval_on_lasso(result.q_m, verdict.witness)
                assert eval_on_lasso(formula, concretize_witness(verdict.witness, result.map))
            else:
                assert not brute_force_sat(formula, max_length=3)

    @pytest.mark.slow
    def test_matches_region_oracle_full(self):
        """Test 200 formulas with two variables, two constants and size <= 8"""
        rng = np.random.default_rng(12)
        for _ in range(200):
            formula = random_dc_formula(rng, max_variables=2, max_constants=2,
                                        size=int(rng.integers(1, 9)), propositions=())
            result = build_abstraction(formula)
            verdict = check_sat(result.query)
            if verdict.satisfiable:
                assert eval_on_lasso(formula, concretize_witness(verdict.witness, result.map))
            else:
                assert not brute_force_sat(formula, max_length=3)


class TestConcretize:
    """Test witness concretization"""

    def test_values(self):
        """Test point, lower and interval regions"""
        amap = AbstractionMap({"x": (Fraction(3), Fraction(7))})
        regions = amap.regions("x")

        def state(active):
            return {name: name == active for name in regions}

        trace = LassoTrace((state(regions[1]), state(regions[0])), (state(regions[2]),))
        concrete = concretize_witness(trace, amap)
        assert [s["x"] for s in concrete.states] == [3, 2, 5]
        assert concrete.states[0][regions[1]] is True

    def test_no_active_region(self):
        """Test that a state violating exactly-one is reported"""
        amap = AbstractionMap({"x": (Fraction(20),)})
        regions = amap.regions("x")
        trace = LassoTrace((), ({regions[0]: True, regions[1]: True, regions[2]: False},))
        with pytest.raises(NoActiveRegion) as excinfo:
            concretize_witness(trace, amap)
        assert excinfo.value.var == "x"
        assert excinfo.value.position == 0

    def test_witness_concretizes(self):
        """Test the example witness values satisfy the original formula"""
        result = build_abstraction(And(R1, Eventually(sensor_lt_20)))
        verdict = check_sat(result.query)
        concrete = concretize_witness(verdict.witness, result.map)
        assert any(s["proximity_sensor"] == 19 for s in concrete.states)
        assert eval_on_lasso(And(R1, Eventually(sensor_lt_20)), concrete)
