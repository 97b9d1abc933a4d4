import pytest

from qmvstar.formulas import arrow, neg, parse_formula, var
from qmvstar.schemas import (SCHEMAS, SCHEMAS_BY_ID, apply_substitution,
                             find_axiom_instance, match_schema)


def test_catalog_size_and_directions():
    assert len(SCHEMAS) == 22
    bases = {}
    for schema in SCHEMAS:
        bases.setdefault(schema.base, []).append(schema.id)
    assert {b: len(ids) for b, ids in bases.items()} == {
        "Q1": 2, "Q2": 2, "Q3": 2, "Q4": 2, "Q5": 2, "Q6": 2, "Q7": 2,
        "Q8": 2, "Q9": 1, "Q10": 1, "Q11a": 2, "Q11b": 2}


def test_match_diag_guard_strip():
    target = parse_formula("((1 -> 1) -> (p -> q)) -> (p -> q)")
    subst = match_schema(SCHEMAS_BY_ID["Q3.R"], target)
    assert subst == {"p": parse_formula("p -> q"), "q": parse_formula("1")}


def test_match_single_metavariable():
    subst = match_schema(SCHEMAS_BY_ID["Q10"], parse_formula("r^- -> 1"))
    assert subst == {"p": parse_formula("r^-")}


def test_non_instance_fails():
    target = parse_formula("(p -> q) -> (~p -> ~q)")
    assert match_schema(SCHEMAS_BY_ID["Q1.L"], target) is None


def test_repeated_metavariables_bind_consistently():
    bad = parse_formula("((1 -> p) -> r) -> r")  # inner diagonal is not q -> q
    assert match_schema(SCHEMAS_BY_ID["Q3.R"], bad) is None
    good = parse_formula("((p -> p) -> r) -> r")
    assert match_schema(SCHEMAS_BY_ID["Q3.R"], good) == {
        "p": parse_formula("r"), "q": parse_formula("p")}


def test_apply_substitution_round_trips_matches():
    for schema in SCHEMAS:
        subst = {name: parse_formula(f"{name} -> 1")
                 for name in schema.metavariables}
        instance = apply_substitution(schema.pattern, subst)
        assert match_schema(schema, instance) == subst


def test_apply_substitution_requires_all_metavariables():
    with pytest.raises(KeyError):
        apply_substitution(SCHEMAS_BY_ID["Q1.L"].pattern, {"p": var("p")})


def test_find_axiom_instance():
    instance = parse_formula("(p -> q) -> ~q -> ~p")
    schema, subst = find_axiom_instance(instance)
    assert schema.id == "Q1.L"
    assert apply_substitution(schema.pattern, subst) is instance
    assert find_axiom_instance(parse_formula("p -> q")) is None


def test_join_macro_inside_schema_follows_fixed_parenthesisation():
    q7 = SCHEMAS_BY_ID["Q7.L"]
    p, q, r = var("p"), var("q"), var("r")
    from qmvstar.formulas import vee
    assert q7.pattern is arrow(arrow(p, vee(q, r)),
                               vee(arrow(p, r), arrow(p, q)))
