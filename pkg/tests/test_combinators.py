import pytest

from qmvstar import combinators as C
from qmvstar.formulas import arrow, neg, negpart, parse_formula, pos, var
from qmvstar.proofs import (AxiomJust, ProofError, R1Just, R2Just, R3Just,
                            check_proof)

p, q, r, t = var("p"), var("q"), var("r"), var("t")


def test_refl_structure_mirrors_the_guard_axiom_route():
    b = C.refl(p)
    assert b.lhs is p and b.rhs is p
    kinds = [type(line.justification) for line in b.fwd.lines]
    assert kinds == [AxiomJust, AxiomJust, R3Just, AxiomJust, R1Just, R2Just]
    assert check_proof(b.fwd).theorem is arrow(p, p)


def test_axiom_bi_and_sym():
    b = C.axiom_bi("Q5", {"p": p, "q": q})
    assert b.lhs is neg(arrow(p, q)) and b.rhs is arrow(q, p)
    s = C.sym(b)
    assert s.lhs is b.rhs and s.fwd is b.bwd
    b.verify()
    s.verify()


def test_trans_requires_matching_middle():
    b1 = C.refl(p)
    b2 = C.refl(q)
    with pytest.raises(ProofError, match="middle"):
        C.trans(b1, b2)


def test_chain_dir():
    s1 = C.axiom_script("Q5.L", {"p": p, "q": p})   # ~(p -> p) -> (p -> p)
    s2 = C.axiom_script("Q5.R", {"p": p, "q": p})   # (p -> p) -> ~(p -> p)
    chained = C.chain_dir(s1, s2)
    assert check_proof(chained).theorem is arrow(neg(arrow(p, p)),
                                                 neg(arrow(p, p)))


def test_cong_arrow_theorem_shape():
    b = C.cong_arrow(C.double_neg(p), C.refl(q)).verify()
    assert b.lhs is arrow(p, q)
    assert b.rhs is arrow(neg(neg(p)), q)


def test_cong_pos_negpart_shapes():
    plus_half, minus_half = C.cong_pos_negpart(C.double_neg(p))
    plus_half.verify()
    minus_half.verify()
    assert (plus_half.lhs, plus_half.rhs) == (pos(p), pos(neg(neg(p))))
    assert (minus_half.lhs, minus_half.rhs) == (negpart(p), negpart(neg(neg(p))))


def test_replace_identity_path_and_errors():
    b = C.double_neg(p)
    assert C.replace(b, p, ()) is b
    with pytest.raises(ProofError, match="not the left side"):
        C.replace(b, q, ())
    with pytest.raises(ProofError, match="path"):
        C.replace(b, neg(p), (1,))
    with pytest.raises(ProofError, match="atomic"):
        C.replace(b, p, (0,))


def test_replace_deep_context():
    b = C.axiom_bi("Q3", {"p": p, "q": q})
    context = parse_formula("~(p -> t)^+ -> s")
    out = C.replace(b, context, (0, 0, 0, 0)).verify()
    assert out.lhs is context
    assert out.rhs is parse_formula("~((((q -> q) -> p) -> t))^+ -> s")


def test_oplus_zero_identity_shape():
    b = C.oplus_zero_identity(q, p).verify()
    assert b.lhs is parse_formula("~q -> (p -> p)")
    assert b.rhs is q


def test_guarded_pos_theorem():
    script = C.guarded_pos(p)
    assert check_proof(script).theorem is parse_formula("(1 -> 1) -> p^+")
    # ends with the R1 guard; no R2 is possible since p^+ is not an implication
    assert isinstance(script.lines[-1].justification, R1Just)


def test_pos_neg_swap_shapes():
    first, second = C.pos_neg_swap(p)
    first.verify()
    second.verify()
    assert (first.lhs, first.rhs) == (pos(neg(p)), neg(negpart(p)))
    assert (second.lhs, second.rhs) == (negpart(neg(p)), neg(pos(p)))


def test_hypothesis_bi_and_splice_guard():
    hyps = (arrow(p, q), arrow(q, p))
    b = C.hypothesis_bi(p, q, 1, 2, hyps)
    out = C.cong_neg(b)
    from qmvstar.proofs import check_proof_from
    assert check_proof_from(hyps, out.fwd).theorem is arrow(neg(p), neg(q))
    other = C.hypothesis_bi(p, q, 1, 2, (arrow(p, q), arrow(q, r)))
    with pytest.raises(ProofError, match="different hypothesis"):
        C.cong_arrow(b, other)


def test_every_line_of_large_outputs_is_primitive():
    first, second = C.pos_neg_swap(p)
    for script in (first.fwd, first.bwd, second.fwd, second.bwd):
        for line in script.lines:
            assert isinstance(line.justification,
                              (AxiomJust, R1Just, R2Just, R3Just))
        check_proof(script)
