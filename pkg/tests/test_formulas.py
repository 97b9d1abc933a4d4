import random

import pytest

from qmvstar.formulas import (Formula, FormulaSyntaxError, ONE, arrow,
                              formula_str, neg, negpart, parse_formula, pos,
                              replace_at, subformula_at, var, variables, vee,
                              wedge)

p, q = var("p"), var("q")


def test_parse_examples():
    assert parse_formula("~q -> ~p") is arrow(neg(q), neg(p))
    assert parse_formula("p^+ -> 1") is arrow(pos(p), ONE)
    assert parse_formula("p \\/ q") is vee(p, q)
    # the join macro expands to the fixed parenthesisation
    expected = arrow(
        arrow(pos(arrow(pos(p), pos(q))), negpart(neg(p))),
        arrow(negpart(arrow(negpart(q), negpart(p))), negpart(p)))
    assert parse_formula("p \\/ q") is expected
    assert parse_formula("p /\\ q") is wedge(p, q)


def test_precedence():
    assert parse_formula("~p^+") is neg(pos(p))            # postfix beats ~
    assert parse_formula("~p -> q") is arrow(neg(p), q)    # ~ beats ->
    assert parse_formula("p -> q -> p") is arrow(p, arrow(q, p))  # right assoc
    assert parse_formula("p^+^-") is negpart(pos(p))
    # the macros bind loosest
    assert parse_formula("p -> q \\/ p") is vee(arrow(p, q), p)


def test_parse_errors_carry_position():
    with pytest.raises(FormulaSyntaxError) as err:
        parse_formula("p -> ")
    assert err.value.position == 5
    with pytest.raises(FormulaSyntaxError):
        parse_formula("(p -> q")
    with pytest.raises(FormulaSyntaxError) as err:
        parse_formula("p + q")
    assert "unexpected character" in str(err.value)


def test_printer_never_emits_macros():
    text = formula_str(vee(p, wedge(p, q)))
    assert "\\/" not in text and "/\\" not in text


def test_paths():
    f = parse_formula("~(p -> t) -> s^+")
    assert subformula_at(f, (0, 0, 0)) is p
    g = replace_at(f, (0, 0, 0), q)
    assert g is parse_formula("~(q -> t) -> s^+")
    with pytest.raises(ValueError):
        subformula_at(f, (2,))


def _random_formula(rng, depth):
    if depth == 0 or rng.random() < 0.25:
        return ONE if rng.random() < 0.15 else var(rng.choice("pqrst"))
    k = rng.randrange(4)
    if k == 0:
        return arrow(_random_formula(rng, depth - 1),
                     _random_formula(rng, depth - 1))
    return (neg, pos, negpart)[k - 1](_random_formula(rng, depth - 1))


def test_round_trip_100k_random_formulas():
    rng = random.Random(123)
    for _ in range(100_000):
        f = _random_formula(rng, 8)
        assert parse_formula(formula_str(f)) is f


def test_macro_expansion_is_fixpoint():
    # expanding an already expanded join changes nothing: the printer emits
    # primitives only, so print/parse is the identity on expansions
    f = vee(p, vee(q, p))
    assert parse_formula(formula_str(f)) is f


def test_variables():
    assert variables(parse_formula("p -> (q -> p)^+")) == ("p", "q")
    assert variables(ONE) == ()
