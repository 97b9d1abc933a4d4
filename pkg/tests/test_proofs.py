import pytest

from qmvstar.formulas import arrow, parse_formula, var
from qmvstar.proofs import (AxiomJust, HypJust, ProofError, ProofFormatError,
                            ProofLine, ProofScript, R1Just, R2Just, R3Just,
                            check_proof, check_proof_from, format_proof,
                            parse_proof)

p, q, r, t = var("p"), var("q"), var("r"), var("t")
ONE = parse_formula("1")


def _script(lines, hyps=(), goal=None):
    return ProofScript(tuple(ProofLine(f, j) for f, j in lines), tuple(hyps), goal)


def test_detachment_from_hypotheses():
    hyps = [p, arrow(p, q)]
    script = _script([
        (p, HypJust(1)),
        (arrow(p, q), HypJust(2)),
        (arrow(arrow(ONE, ONE), q), R1Just(1, 2, ONE)),
    ], hyps)
    verified = check_proof(script)
    assert verified.theorem is parse_formula("(1 -> 1) -> q")
    # same through the explicit-hypotheses entry point
    assert check_proof_from(hyps, _script([
        (p, HypJust(1)),
        (arrow(p, q), HypJust(2)),
        (arrow(arrow(ONE, ONE), q), R1Just(1, 2, ONE)),
    ])).theorem is parse_formula("(1 -> 1) -> q")


def test_r3_from_hypotheses():
    hyps = [arrow(p, q), arrow(r, t)]
    script = _script([
        (arrow(p, q), HypJust(1)),
        (arrow(r, t), HypJust(2)),
        (parse_formula("(q -> r) -> (p -> t)"), R3Just(1, 2)),
    ], hyps)
    assert check_proof(script).theorem is parse_formula("(q -> r) -> p -> t")


def test_r2_requires_implication_consequent():
    script = _script([
        (parse_formula("q -> 1"), AxiomJust.of("Q10", {"p": q})),
        (parse_formula("(q -> 1) -> ((p -> p) -> (q -> 1))"),
         AxiomJust.of("Q3.L", {"p": parse_formula("q -> 1"), "q": p})),
        (parse_formula("(1 -> 1) -> ((p -> p) -> (q -> 1))"), R1Just(1, 2, ONE)),
        (parse_formula("(p -> p) -> (q -> 1)"), R2Just(3)),
        # now try to strip the new guard even though q -> 1 is fine:
        (parse_formula("q -> 1"), R2Just(4)),
    ])
    assert check_proof(script).theorem is parse_formula("q -> 1")

    bad = _script([
        (parse_formula("q -> 1"), AxiomJust.of("Q10", {"p": q})),
        (parse_formula("(q -> 1) -> 1"),
         AxiomJust.of("Q10", {"p": parse_formula("q -> 1")})),
        (parse_formula("(1 -> 1) -> 1"), R1Just(1, 2, ONE)),
        (ONE, R2Just(3)),
    ])
    with pytest.raises(ProofError, match="consequent must be an implication"):
        check_proof(bad)


def test_axiom_substitution_must_reproduce_line():
    good = _script([(parse_formula("p -> 1"), AxiomJust.of("Q10", {"p": p}))])
    assert check_proof(good).theorem is parse_formula("p -> 1")
    wrong_formula = _script([(parse_formula("q -> 1"),
                              AxiomJust.of("Q10", {"p": p}))])
    with pytest.raises(ProofError, match="does not produce"):
        check_proof(wrong_formula)
    wrong_vars = _script([(parse_formula("p -> 1"),
                           AxiomJust.of("Q10", {"p": p, "q": q}))])
    with pytest.raises(ProofError, match="bind exactly"):
        check_proof(wrong_vars)
    unknown = _script([(p, AxiomJust.of("Q99", {}))])
    with pytest.raises(ProofError, match="unknown schema"):
        check_proof(unknown)


def test_forward_references_rejected():
    script = _script([
        (parse_formula("(1 -> 1) -> 1"), R1Just(2, 3, ONE)),
        (p, HypJust(1)),
        (parse_formula("p -> 1"), AxiomJust.of("Q10", {"p": p})),
    ], [p])
    with pytest.raises(ProofError, match="strictly backwards"):
        check_proof(script)


def test_r1_shape_checks():
    hyps = [p, arrow(q, r)]
    script = _script([
        (p, HypJust(1)),
        (arrow(q, r), HypJust(2)),
        (parse_formula("(1 -> 1) -> r"), R1Just(1, 2, ONE)),
    ], hyps)
    with pytest.raises(ProofError, match="minor premise"):
        check_proof(script)


def test_hypothesis_mismatch():
    script = _script([(q, HypJust(1))], [p])
    with pytest.raises(ProofError, match="differs from hypothesis"):
        check_proof(script)
    script = _script([(q, HypJust(2))], [p])
    with pytest.raises(ProofError, match="no hypothesis"):
        check_proof(script)


def test_goal_mismatch():
    script = _script([(parse_formula("p -> 1"), AxiomJust.of("Q10", {"p": p}))],
                     goal=parse_formula("q -> 1"))
    with pytest.raises(ProofError, match="declared theorem"):
        check_proof(script)


# -- file format -----------------------------------------------------------


PROOF_TEXT = """\
# two-line detachment
theorem: (1 -> 1) -> q
hyp 1: p
hyp 2: p -> q
1. p ; hyp 1
2. p -> q ; hyp 2
3. (1 -> 1) -> q ; r1 1 2 r:=1
"""


def test_parse_and_check_proof_file():
    script = parse_proof(PROOF_TEXT)
    assert check_proof(script).theorem is parse_formula("(1 -> 1) -> q")
    assert parse_proof(format_proof(script)) == script


def test_parse_proof_errors():
    with pytest.raises(ProofFormatError, match="numbered in order"):
        parse_proof("2. p ; hyp 1")
    with pytest.raises(ProofFormatError, match="unknown justification"):
        parse_proof("1. p ; because")
    with pytest.raises(ProofFormatError, match="unrecognised"):
        parse_proof("p and q")
    with pytest.raises(ProofFormatError, match="r1 needs"):
        parse_proof("1. p ; r1 1")


def test_axiom_justification_round_trip():
    text = "1. (p -> q) -> ~q -> ~p ; ax Q1.L p:=p, q:=q\n"
    script = parse_proof(text)
    assert check_proof(script).theorem is parse_formula("(p -> q) -> ~q -> ~p")
    assert format_proof(script) == text
