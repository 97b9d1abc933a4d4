"""Derivation generators over the proof kernel.

A biconditional theorem "A iff B" is a pair of scripts, one per direction
(the language has no biconditional connective).  Every generator consumes
such pairs (or bare formulas, for the closed derivations) and emits scripts
containing only primitive justifications: each use of an earlier derived
fact is inlined by splicing a fresh copy of its script, so the output is
independently re-checkable by `proofs.check_proof` with no lemma references.

Free schema metavariables and R1's side formula are always instantiated
with the constant 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formulas import Formula, ONE, arrow, formula_str, neg, negpart, pos
from .proofs import (AxiomJust, HypJust, Justification, ProofError, ProofLine,
                     ProofScript, R1Just, R2Just, R3Just, check_proof)
from .schemas import SCHEMAS_BY_ID, apply_substitution


@dataclass(frozen=True)
class BiProof:
    """Verified pair of scripts proving lhs -> rhs and rhs -> lhs."""

    lhs: Formula
    rhs: Formula
    fwd: ProofScript
    bwd: ProofScript

    def verify(self) -> "BiProof":
        for script, source, target in ((self.fwd, self.lhs, self.rhs),
                                       (self.bwd, self.rhs, self.lhs)):
            verified = check_proof(script)
            if verified.theorem is not arrow(source, target):
                raise ProofError(
                    0, f"direction proves {formula_str(verified.theorem)}, "
                       f"expected {formula_str(arrow(source, target))}")
        return self


def sym(b: BiProof) -> BiProof:
    return BiProof(b.rhs, b.lhs, b.bwd, b.fwd)


class _Builder:
    """Accumulates lines; splicing renumbers rule references."""

    def __init__(self, hypotheses: tuple[Formula, ...] = ()):
        self.hypotheses = hypotheses
        self.lines: list[ProofLine] = []

    def add(self, formula: Formula, justification: Justification) -> int:
        self.lines.append(ProofLine(formula, justification))
        return len(self.lines)

    def splice(self, script: ProofScript) -> int:
        """Append a whole script; returns the new index of its last line."""
        if script.hypotheses and script.hypotheses != self.hypotheses:
            raise ProofError(0, "spliced script has a different hypothesis list")
        offset = len(self.lines)
        for line in script.lines:
            just = line.justification
            if isinstance(just, R1Just):
                just = R1Just(just.minor + offset, just.major + offset, just.side)
            elif isinstance(just, R2Just):
                just = R2Just(just.source + offset)
            elif isinstance(just, R3Just):
                just = R3Just(just.first + offset, just.second + offset)
            self.lines.append(ProofLine(line.formula, just))
        return len(self.lines)

    def last(self) -> Formula:
        return self.lines[-1].formula

    def script(self, goal: Formula | None = None) -> ProofScript:
        return ProofScript(tuple(self.lines), self.hypotheses, goal)


def _axiom_line(builder: _Builder, schema_id: str, subst: dict[str, Formula]) -> int:
    schema = SCHEMAS_BY_ID[schema_id]
    formula = apply_substitution(schema.pattern, subst)
    return builder.add(formula, AxiomJust.of(schema_id, subst))


def axiom_script(schema_id: str, subst: dict[str, Formula],
                 hypotheses: tuple[Formula, ...] = ()) -> ProofScript:
    builder = _Builder(hypotheses)
    _axiom_line(builder, schema_id, subst)
    return builder.script()


def axiom_bi(base: str, subst: dict[str, Formula],
             hypotheses: tuple[Formula, ...] = ()) -> BiProof:
    """Both directions of a biconditional axiom, as 1-line scripts."""
    left = SCHEMAS_BY_ID[f"{base}.L"]
    lhs, rhs = apply_substitution(left.pattern, subst).args
    return BiProof(lhs, rhs,
                   axiom_script(f"{base}.L", subst, hypotheses),
                   axiom_script(f"{base}.R", subst, hypotheses))


def hypothesis_bi(lhs: Formula, rhs: Formula, fwd_index: int, bwd_index: int,
                  hypotheses: tuple[Formula, ...]) -> BiProof:
    """Biconditional input backed by two hypothesis lines (for transcripts)."""
    fwd = _Builder(hypotheses)
    fwd.add(arrow(lhs, rhs), HypJust(fwd_index))
    bwd = _Builder(hypotheses)
    bwd.add(arrow(rhs, lhs), HypJust(bwd_index))
    return BiProof(lhs, rhs, fwd.script(), bwd.script())


def _merge_hypotheses(*scripts: ProofScript) -> tuple[Formula, ...]:
    out: tuple[Formula, ...] = ()
    for script in scripts:
        if script.hypotheses:
            if out and script.hypotheses != out:
                raise ProofError(0, "cannot combine scripts with different hypotheses")
            out = script.hypotheses
    return out


def _detach(builder: _Builder, minor: int, major: int) -> int:
    """From phi (line minor) and phi -> psi (line major) derive psi.

    R1 yields (1 -> 1) -> psi; when psi is an implication R2 strips the
    guard, otherwise the guarded form is the result.
    """
    psi = builder.lines[major - 1].formula.args[1]
    guarded = builder.add(arrow(arrow(ONE, ONE), psi),
                          R1Just(minor, major, ONE))
    if psi.tag != "arrow":
        return guarded
    return builder.add(psi, R2Just(guarded))


def _trans_steps(builder: _Builder, first: int, second: int) -> int:
    """From A -> B (line first) and B -> C (line second) derive A -> C."""
    a, b = builder.lines[first - 1].formula.args
    b2, c = builder.lines[second - 1].formula.args
    if b is not b2:
        raise ProofError(0, "transitivity premises do not chain")
    ac = arrow(a, c)
    mid = builder.add(arrow(arrow(b, b), ac), R3Just(first, second))
    step = _axiom_line(builder, "Q3.R", {"p": ac, "q": b})
    return _detach(builder, mid, step)


def chain_dir(first: ProofScript, second: ProofScript) -> ProofScript:
    """Directed transitivity: splice both and connect their theorems."""
    builder = _Builder(_merge_hypotheses(first, second))
    i = builder.splice(first)
    j = builder.splice(second)
    _trans_steps(builder, i, j)
    return builder.script()


def trans(b1: BiProof, b2: BiProof) -> BiProof:
    """From A iff B and B iff C derive A iff C."""
    if b1.rhs is not b2.lhs:
        raise ProofError(0, "trans requires matching middle formulas")
    return BiProof(b1.lhs, b2.rhs,
                   chain_dir(b1.fwd, b2.fwd),
                   chain_dir(b2.bwd, b1.bwd))


def _contrapose_dir(script: ProofScript) -> ProofScript:
    """From A -> B derive ~B -> ~A (one Q1 instance plus detachment)."""
    theorem = script.lines[-1].formula
    a, b = theorem.args
    builder = _Builder(script.hypotheses)
    i = builder.splice(script)
    j = _axiom_line(builder, "Q1.L", {"p": a, "q": b})
    _detach(builder, i, j)
    return builder.script()


def cong_neg(b: BiProof) -> BiProof:
    """From A iff B derive ~A iff ~B."""
    return BiProof(neg(b.lhs), neg(b.rhs),
                   _contrapose_dir(b.bwd), _contrapose_dir(b.fwd))


def cong_arrow(b1: BiProof, b2: BiProof) -> BiProof:
    """From A iff B and C iff D derive (A -> C) iff (B -> D)."""

    def direction(left: ProofScript, right: ProofScript) -> ProofScript:
        builder = _Builder(_merge_hypotheses(left, right))
        i = builder.splice(left)
        j = builder.splice(right)
        phi, psi = builder.lines[i - 1].formula.args
        chi, omega = builder.lines[j - 1].formula.args
        builder.add(arrow(arrow(psi, chi), arrow(phi, omega)), R3Just(i, j))
        return builder.script()

    return BiProof(arrow(b1.lhs, b2.lhs), arrow(b1.rhs, b2.rhs),
                   direction(b1.bwd, b2.fwd),
                   direction(b1.fwd, b2.bwd))


def refl(a: Formula) -> BiProof:
    """A iff A via the diagonal-guard axiom in both directions."""
    builder = _Builder()
    i = _axiom_line(builder, "Q3.L", {"p": a, "q": ONE})
    j = _axiom_line(builder, "Q3.R", {"p": a, "q": ONE})
    _trans_steps(builder, i, j)
    script = builder.script()
    return BiProof(a, a, script, script)


def neg_arrow(a: Formula, b: Formula) -> BiProof:
    """~(A -> B) iff (~A -> ~B)."""
    fwd = chain_dir(axiom_script("Q5.L", {"p": a, "q": b}),
                    axiom_script("Q1.L", {"p": b, "q": a}))
    bwd = chain_dir(axiom_script("Q1.R", {"p": b, "q": a}),
                    axiom_script("Q5.R", {"p": a, "q": b}))
    return BiProof(neg(arrow(a, b)), arrow(neg(a), neg(b)), fwd, bwd)


def diag_eq(a: Formula, b: Formula) -> BiProof:
    """(A -> A) iff (B -> B)."""

    def direction(source: Formula, target: Formula) -> ProofScript:
        builder = _Builder()
        i = builder.splice(refl(target).fwd)  # target -> target
        j = _axiom_line(builder, "Q3.L",
                        {"p": arrow(target, target), "q": source})
        _detach(builder, i, j)
        return builder.script()

    return BiProof(arrow(a, a), arrow(b, b), direction(a, b), direction(b, a))


def _neg_diag_core(a: Formula) -> BiProof:
    """~(A -> A) iff (A -> A): the diagonal instance of the negation axiom."""
    return axiom_bi("Q5", {"p": a, "q": a})


def neg_diag(a: Formula) -> BiProof:
    """~~(A -> A) iff (A -> A)."""
    core = _neg_diag_core(a)
    return trans(cong_neg(core), core)


def replace(b: BiProof, context: Formula, path: tuple[int, ...]) -> BiProof:
    """Rewrite inside a context: from A iff B and an occurrence of A at
    `path` in `context`, derive context iff context[B at path]."""
    if not path:
        if context is not b.lhs:
            raise ProofError(
                0, f"path addresses {formula_str(context)}, which is not the "
                   f"left side {formula_str(b.lhs)}")
        return b
    step, rest = path[0], path[1:]
    if step >= len(context.args):
        raise ProofError(0, f"path step {step} invalid at {formula_str(context)}")
    tag = context.tag
    if tag == "neg":
        return cong_neg(replace(b, context.args[0], rest))
    if tag == "pos":
        return cong_pos_negpart(replace(b, context.args[0], rest))[0]
    if tag == "negpart":
        return cong_pos_negpart(replace(b, context.args[0], rest))[1]
    if tag == "arrow":
        left, right = context.args
        if step == 0:
            return cong_arrow(replace(b, left, rest), refl(right))
        return cong_arrow(refl(left), replace(b, right, rest))
    raise ProofError(0, f"path enters atomic formula {formula_str(context)}")


def _rewrite(b: BiProof, inner: BiProof, path: tuple[int, ...]) -> BiProof:
    """Rewrite inside the right side of `b` using `inner` at `path`."""
    return trans(b, replace(inner, b.rhs, path))


def double_neg(a: Formula) -> BiProof:
    """A iff ~~A."""
    diag = arrow(ONE, ONE)
    s = axiom_bi("Q3", {"p": a, "q": ONE})                       # A iff diag -> A
    s = trans(s, axiom_bi("Q1", {"p": diag, "q": a}))            # iff ~A -> ~diag
    s = trans(s, axiom_bi("Q1", {"p": neg(a), "q": neg(diag)}))  # iff ~~diag -> ~~A
    s = _rewrite(s, neg_diag(ONE), (0,))                         # iff diag -> ~~A
    return trans(s, sym(axiom_bi("Q3", {"p": neg(neg(a)), "q": ONE})))


def contrapose_neg(a: Formula, b: Formula) -> BiProof:
    """(~A -> B) iff (~B -> A)."""
    s = axiom_bi("Q1", {"p": neg(a), "q": b})  # (~A -> B) iff (~B -> ~~A)
    return _rewrite(s, sym(double_neg(a)), (1,))


def cong_pos_negpart(b: BiProof) -> tuple[BiProof, BiProof]:
    """From A iff B derive A^+ iff B^+ and A^- iff B^-."""
    refl_one = refl(ONE)
    refl_neg_one = refl(neg(ONE))
    diag = arrow(ONE, ONE)

    def half(unit: Formula, refl_unit: BiProof, wrap, schema: str) -> BiProof:
        lifted = cong_arrow(b, refl_unit)                       # (A->u) iff (B->u)
        lifted = cong_arrow(lifted, refl_unit)                  # ((A->u)->u) iff ((B->u)->u)
        s = axiom_bi(schema, {"p": b.lhs})                      # (diag->A*) iff ((A->u)->u)
        s = trans(s, lifted)
        s = trans(s, sym(axiom_bi(schema, {"p": b.rhs})))       # iff (diag->B*)
        s = trans(axiom_bi("Q3", {"p": wrap(b.lhs), "q": ONE}), s)
        return trans(s, sym(axiom_bi("Q3", {"p": wrap(b.rhs), "q": ONE})))

    return (half(ONE, refl_one, pos, "Q11a"),
            half(neg(ONE), refl_neg_one, negpart, "Q11b"))


def _pos_swap_core(a: Formula) -> BiProof:
    """(~A)^+ iff ~A^-: the long chain through both unit axioms.

    Route: unfold (diag -> (~A)^+) to ((~A -> 1) -> 1), turn it into a
    negated implication, push the negation inwards past double negations of
    1, fold back with the second unit axiom, and strip the diagonal guards.
    """
    diag = arrow(ONE, ONE)
    dn_one = double_neg(ONE)
    s = axiom_bi("Q11a", {"p": neg(a)})
    # ((~A -> 1) -> 1) iff ~(1 -> (~A -> 1))
    s = trans(s, sym(axiom_bi("Q5", {"p": ONE, "q": arrow(neg(a), ONE)})))
    s = _rewrite(s, dn_one, (0, 1, 1))                  # trailing 1 to ~~1
    s = _rewrite(s, sym(neg_arrow(a, neg(ONE))), (0, 1))  # ~A -> ~~1 to ~(A -> ~1)
    s = _rewrite(s, dn_one, (0, 0))                     # leading 1 to ~~1
    s = _rewrite(s, sym(axiom_bi("Q1", {"p": arrow(a, neg(ONE)), "q": neg(ONE)})),
                 (0,))                                  # to ((A -> ~1) -> ~1)
    s = _rewrite(s, sym(axiom_bi("Q11b", {"p": a})), (0,))  # to (diag -> A^-)
    s = trans(s, neg_arrow(diag, negpart(a)))           # to (~diag -> ~A^-)
    s = _rewrite(s, _neg_diag_core(ONE), (0,))          # ~diag to diag
    s = trans(axiom_bi("Q3", {"p": pos(neg(a)), "q": ONE}), s)
    return trans(s, sym(axiom_bi("Q3", {"p": neg(negpart(a)), "q": ONE})))


def oplus_zero_identity(a: Formula, diag_of: Formula) -> BiProof:
    """(~A -> (D -> D)) iff A: additively, A + 0 = A at the theorem level."""
    diag = arrow(diag_of, diag_of)
    s = contrapose_neg(a, diag)                 # (~A -> D.) iff (~D. -> A)
    s = _rewrite(s, _neg_diag_core(diag_of), (0,))  # ~D. becomes D.
    return trans(s, sym(axiom_bi("Q3", {"p": a, "q": diag_of})))


def guarded_pos(a: Formula) -> ProofScript:
    """Closed proof of (1 -> 1) -> A^+ (the guarded positive-part theorem)."""
    builder = _Builder()
    i = _axiom_line(builder, "Q11a.R", {"p": a})        # ((A->1)->1) -> (diag->A^+)
    j = _axiom_line(builder, "Q3.R", {"p": pos(a), "q": ONE})
    k = _trans_steps(builder, i, j)                     # ((A->1)->1) -> A^+
    top = _axiom_line(builder, "Q10", {"p": arrow(a, ONE)})  # (A->1)->1
    builder.add(arrow(arrow(ONE, ONE), pos(a)), R1Just(top, k, ONE))
    return builder.script()


def pos_neg_swap(a: Formula) -> tuple[BiProof, BiProof]:
    """(~A)^+ iff ~A^- and (~A)^- iff ~A^+."""
    first = _pos_swap_core(a)

    # Instantiate the first half at ~A, then clean up with double negation.
    inst = _pos_swap_core(neg(a))               # (~~A)^+ iff ~(~A)^-
    inst = trans(sym(replace(sym(double_neg(a)), pos(neg(neg(a))), (0,))), inst)
    lifted = cong_neg(inst)                     # ~A^+ iff ~~(~A)^-
    lifted = trans(lifted, sym(double_neg(negpart(neg(a)))))
    second = sym(lifted)                        # (~A)^- iff ~A^+
    return first, second
