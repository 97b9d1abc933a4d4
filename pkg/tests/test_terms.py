import random

import pytest

from qmvstar import terms
from qmvstar.terms import (ONE, ZERO, arrow, expand, neg, negpart, plus, pos,
                           term_str, var, vee, wedge, x, y)


def test_interning_gives_identity():
    assert plus(var("x"), ONE) is plus(var("x"), ONE)
    assert vee(x, y) is vee(var("x"), var("y"))
    assert var("x") is not var("y")


def test_vee_expansion_additive():
    expected = plus(
        plus(pos(x), pos(plus(neg(pos(x)), pos(y)))),
        plus(negpart(x), pos(plus(neg(negpart(x)), negpart(y)))))
    assert expand(vee(x, y), "qmv") is expected


def test_vee_expansion_implicative():
    expected = arrow(
        arrow(pos(arrow(pos(x), pos(y))), negpart(neg(x))),
        arrow(negpart(arrow(negpart(y), negpart(x))), negpart(x)))
    assert expand(vee(x, y), "qw") is expected


def test_wedge_is_negated_join_of_negations():
    assert expand(wedge(x, y), "qmv") is expand(neg(vee(neg(x), neg(y))), "qmv")


def test_zero_is_constant_additively_and_diagonal_implicatively():
    assert expand(ZERO, "qmv") is ZERO
    assert expand(ZERO, "qw") is arrow(ONE, ONE)


def test_plain_kinds_expand_pos_negpart():
    assert expand(pos(x), "mv") is plus(ONE, plus(neg(ONE), x))
    assert expand(negpart(x), "mv") is plus(neg(ONE), plus(ONE, x))
    assert expand(pos(x), "w") is arrow(arrow(x, ONE), ONE)
    assert expand(negpart(x), "w") is arrow(arrow(x, neg(ONE)), neg(ONE))
    # quasi kinds keep them primitive
    assert expand(pos(x), "qmv") is pos(x)
    assert expand(negpart(x), "qw") is negpart(x)


def _random_term(rng, depth):
    if depth == 0 or rng.random() < 0.3:
        return rng.choice((x, y, terms.z, ONE, ZERO))
    op = rng.randrange(6)
    if op == 0:
        return plus(_random_term(rng, depth - 1), _random_term(rng, depth - 1))
    if op == 1:
        return vee(_random_term(rng, depth - 1), _random_term(rng, depth - 1))
    if op == 2:
        return wedge(_random_term(rng, depth - 1), _random_term(rng, depth - 1))
    inner = _random_term(rng, depth - 1)
    return (neg, pos, negpart)[op - 3](inner)


def _reference_expand(node, kind):
    """Independent recursive expansion used as the oracle."""
    args = tuple(_reference_expand(a, kind) for a in node.args)
    op = node.op
    if op == "vee":
        a, b = args
        if kind in ("mv", "qmv"):
            return _reference_expand(plus(
                plus(pos(a), pos(plus(neg(pos(a)), pos(b)))),
                plus(negpart(a), pos(plus(neg(negpart(a)), negpart(b))))), kind)
        return _reference_expand(arrow(
            arrow(pos(arrow(pos(a), pos(b))), negpart(neg(a))),
            arrow(negpart(arrow(negpart(b), negpart(a))), negpart(a))), kind)
    if op == "wedge":
        return _reference_expand(neg(vee(neg(args[0]), neg(args[1]))), kind)
    if op == "zero" and kind in ("w", "qw"):
        return arrow(ONE, ONE)
    if op == "pos" and kind == "mv":
        return _reference_expand(plus(ONE, plus(neg(ONE), args[0])), kind)
    if op == "negpart" and kind == "mv":
        return _reference_expand(plus(neg(ONE), plus(ONE, args[0])), kind)
    if op == "pos" and kind == "w":
        return arrow(arrow(args[0], ONE), ONE)
    if op == "negpart" and kind == "w":
        return arrow(arrow(args[0], neg(ONE)), neg(ONE))
    if op == "var":
        return node
    return terms._mk(op, args, node.name)


@pytest.mark.parametrize("kind", ["mv", "qmv"])
def test_expansion_matches_reference_and_is_idempotent(kind):
    rng = random.Random(7)
    for _ in range(100):
        term = _random_term(rng, 4)
        expanded = expand(term, kind)
        assert expanded is _reference_expand(term, kind)
        assert expand(expanded, kind) is expanded


def test_expansion_idempotent_implicative():
    rng = random.Random(8)
    for _ in range(100):
        # implicative kinds never see plus; rebuild with arrow in its place
        term = _swap_plus_for_arrow(_random_term(rng, 4))
        expanded = expand(term, "qw")
        assert expanded is _reference_expand(term, "qw")
        assert expand(expanded, "qw") is expanded


def _swap_plus_for_arrow(node):
    args = tuple(_swap_plus_for_arrow(a) for a in node.args)
    if node.op == "plus":
        return arrow(*args)
    return terms._mk(node.op, args, node.name)


def test_signature_violations_raise():
    with pytest.raises(ValueError):
        expand(plus(x, y), "qw")
    with pytest.raises(ValueError):
        expand(arrow(x, y), "qmv")
    with pytest.raises(ValueError):
        expand(x, "nope")


def test_term_rendering():
    assert term_str(plus(x, y)) == "x + y"
    assert term_str(vee(x, neg(y))) == "x \\/ -y"
    assert term_str(pos(arrow(x, ONE))) == "(x -> 1)^+"
