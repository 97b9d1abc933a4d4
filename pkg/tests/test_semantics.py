import random
from fractions import Fraction as F

import pytest

from qmvstar import models, semantics
from qmvstar.formulas import arrow, formula_str, parse_formula, var
from qmvstar.models import GridSampler, RandomSampler
from qmvstar.proofs import ProofError, check_proof, parse_proof
from qmvstar.semantics import (FuzzConfig, evaluate, falsify, is_designated,
                               random_formula, random_valuation, soundness_fuzz)


def test_evaluation_examples():
    v = {"p": (F(1, 2), F(1, 3)), "q": (F(1, 5), F(-1))}
    assert evaluate(parse_formula("1"), v) == (1, 0)
    assert evaluate(parse_formula("p -> q"), v) == (F(-3, 10), 0)
    assert evaluate(parse_formula("p^-"), {"p": (F(1, 2), F(-2, 3))}) == (0, F(-2, 3))
    assert evaluate(parse_formula("~p"), v) == (F(-1, 2), F(-1, 3))
    assert evaluate(parse_formula("p^+"), v) == (F(1, 2), F(1, 3))


def test_uncovered_variable():
    with pytest.raises(KeyError, match="does not cover"):
        evaluate(parse_formula("p -> q"), {"p": (F(0), F(0))})


def test_designation():
    assert is_designated((F(0), F(0)))
    assert is_designated((F(1), F(0)))
    assert not is_designated((F(-1, 10), F(0)))
    assert not is_designated((F(1, 2), F(11, 10)))


def test_delegation_identity():
    # the formula evaluator and the pair model's term evaluator agree
    rng = random.Random(5)
    for _ in range(400):
        f = random_formula(rng, 5)
        names = semantics.variables(f)
        v = random_valuation(rng, names, denominator=24)
        direct = evaluate(f, v)
        via_model = models.evaluate_term(
            models.RSTAR_QW, semantics.formula_to_term(f), v)
        assert direct == via_model


def test_implication_second_coordinate_is_zero():
    rng = random.Random(6)
    for _ in range(300):
        f = arrow(random_formula(rng, 4), random_formula(rng, 4))
        v = random_valuation(rng, semantics.variables(f))
        assert evaluate(f, v)[1] == 0


def test_falsify_examples():
    top = falsify(parse_formula("p -> 1"), GridSampler(2))
    assert not top.falsified and top.samples == 25
    atom = falsify(parse_formula("p"), GridSampler(2))
    assert atom.falsified
    # lexicographically first grid point
    assert atom.counterexample == {"p": (F(-1), F(-1))}
    assert atom.machine_line() == "COUNTEREXAMPLE p AT p=-1,-1 VALUE -1,-1"
    assert "not a proof" in top.note


def test_axiom_instances_evaluate_to_origin():
    rng = random.Random(9)
    from qmvstar.schemas import SCHEMAS, apply_substitution
    for schema in SCHEMAS:
        subst = {name: random_formula(rng, 3) for name in schema.metavariables}
        inst = apply_substitution(schema.pattern, subst)
        v = random_valuation(rng, semantics.variables(inst))
        value = evaluate(inst, v)
        assert is_designated(value)
        if not schema.id.startswith("Q10"):
            assert value == (0, 0)


def test_audit_flags_a_broken_schema():
    from qmvstar.schemas import AxiomSchema
    bogus = AxiomSchema("X1", "X1", arrow(var("p"), var("q")), ("p", "q"))
    audits = semantics.audit_schemas(trials=200, seed=3, schemas=(bogus,))
    assert audits[0].designated_failures > 0


def test_rule_preservation_small():
    report = semantics.rule_preservation_check(samples=5000, seed=21)
    assert report.clean


def test_soundness_fuzz_small_and_deterministic():
    first = soundness_fuzz(FuzzConfig(proofs=200, seed=42))
    second = soundness_fuzz(FuzzConfig(proofs=200, seed=42))
    assert first.clean and first.proofs == 200
    assert first.rule_applications == second.rule_applications
    assert first.dead_ends == second.dead_ends
    empty = soundness_fuzz(FuzzConfig(proofs=0, seed=1))
    assert empty.proofs == 0 and empty.clean


def test_corrupted_detachment_rule_would_be_caught():
    # A kernel that let the guard-stripping rule return a bare variable
    # would accept this script; its "theorem" q is then falsified at once.
    bad = parse_proof("""
1. q -> 1 ; ax Q10 p:=q
2. (q -> 1) -> ((q -> q) -> 1) ; ax Q3.L p:=q -> 1, q:=q
3. (1 -> 1) -> ((q -> q) -> 1) ; r1 1 2 r:=1
4. (q -> q) -> 1 ; r2 3
5. q ; r2 4
""")
    with pytest.raises(ProofError, match="conclusion must be"):
        check_proof(bad)
    # the harness side: the bogus conclusion has a counterexample
    result = falsify(parse_formula("q"), GridSampler(1))
    assert result.falsified


def test_fuzz_scripts_are_verifiable_by_construction():
    rng = random.Random(77)
    cfg = FuzzConfig(proofs=50, seed=77)
    for _ in range(50):
        script, steps, dead = semantics._random_script(rng, cfg)
        check_proof(script)


def test_theorem_stability_of_a_non_theorem():
    assert semantics.theorem_stability(parse_formula("p -> 1"))
    assert not semantics.theorem_stability(parse_formula("p"))
