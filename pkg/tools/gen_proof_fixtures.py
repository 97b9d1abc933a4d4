#!/usr/bin/env python3
"""Regenerate the bundled proof scripts in src/qmvstar/fixtures/proofs/.

The files are committed; this script exists so the transcriptions are
produced once by the derivation generators and then re-checked from disk by
the kernel.  Run from the repository root:  python3 tools/gen_proof_fixtures.py
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from qmvstar import combinators as C
from qmvstar.formulas import arrow, formula_str, neg, negpart, parse_formula, pos, var
from qmvstar.proofs import ProofScript, check_proof, format_proof

OUT = pathlib.Path(__file__).resolve().parents[1] / "src/qmvstar/fixtures/proofs"

p, q, r, s, t = (var(n) for n in "pqrst")


def biconditional_files(name: str, b: C.BiProof) -> dict[str, ProofScript]:
    b.verify()
    return {
        f"{name}_fwd.prf": ProofScript(b.fwd.lines, b.fwd.hypotheses,
                                       arrow(b.lhs, b.rhs)),
        f"{name}_bwd.prf": ProofScript(b.bwd.lines, b.bwd.hypotheses,
                                       arrow(b.rhs, b.lhs)),
    }


def main() -> None:
    files: dict[str, ProofScript] = {}

    # Closed derivations.
    refl = C.refl(p)
    files["refl.prf"] = ProofScript(refl.fwd.lines, (), arrow(p, p))
    files.update(biconditional_files("neg_arrow", C.neg_arrow(p, q)))
    files.update(biconditional_files("diag_eq", C.diag_eq(p, q)))
    files.update(biconditional_files("neg_diag", C.neg_diag(p)))
    files.update(biconditional_files("double_neg", C.double_neg(p)))
    files.update(biconditional_files("contrapose", C.contrapose_neg(p, q)))
    swap_pos, swap_negpart = C.pos_neg_swap(p)
    files.update(biconditional_files("pos_swap", swap_pos))
    files.update(biconditional_files("negpart_swap", swap_negpart))
    files.update(biconditional_files("oplus_zero", C.oplus_zero_identity(q, p)))
    guarded = C.guarded_pos(p)
    files["guarded_pos.prf"] = ProofScript(guarded.lines, (),
                                           parse_formula("(1 -> 1) -> p^+"))

    # Congruence-style derivations from hypothesised biconditionals.
    hyps_pq = (arrow(p, q), arrow(q, p))
    bi_pq = C.hypothesis_bi(p, q, 1, 2, hyps_pq)
    files.update(biconditional_files("cong_neg", C.cong_neg(bi_pq)))
    cp, cn = C.cong_pos_negpart(bi_pq)
    files.update(biconditional_files("cong_pos", cp))
    files.update(biconditional_files("cong_negpart", cn))

    hyps_pqrt = (arrow(p, q), arrow(q, p), arrow(r, t), arrow(t, r))
    bi1 = C.hypothesis_bi(p, q, 1, 2, hyps_pqrt)
    bi2 = C.hypothesis_bi(r, t, 3, 4, hyps_pqrt)
    files.update(biconditional_files("cong_arrow", C.cong_arrow(bi1, bi2)))

    hyps_chain = (arrow(p, q), arrow(q, p), arrow(q, r), arrow(r, q))
    ch1 = C.hypothesis_bi(p, q, 1, 2, hyps_chain)
    ch2 = C.hypothesis_bi(q, r, 3, 4, hyps_chain)
    files.update(biconditional_files("trans", C.trans(ch1, ch2)))

    # Context-replacement cases, one per syntactic position: the rewritten
    # occurrence directly under each connective, and nested one level down.
    hyps_pr = (arrow(p, r), arrow(r, p))
    bi_pr = C.hypothesis_bi(p, r, 1, 2, hyps_pr)
    cases = {
        "replace_neg": (neg(p), (0,)),
        "replace_pos": (pos(p), (0,)),
        "replace_negpart": (negpart(p), (0,)),
        "replace_arrow_left": (arrow(p, t), (0,)),
        "replace_arrow_right": (arrow(t, p), (1,)),
        "replace_nested_neg": (neg(arrow(p, t)), (0, 0)),
        "replace_nested_pos": (pos(arrow(p, t)), (0, 0)),
        "replace_nested_negpart": (negpart(arrow(p, t)), (0, 0)),
        "replace_nested_arrow_left": (arrow(arrow(p, t), s), (0, 0)),
        "replace_nested_arrow_right": (arrow(s, arrow(t, p)), (1, 1)),
    }
    for name, (context, path) in cases.items():
        files.update(biconditional_files(name, C.replace(bi_pr, context, path)))

    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.prf"):
        old.unlink()
    for name in sorted(files):
        script = files[name]
        check_proof(script)  # goal line included in the check
        (OUT / name).write_text(format_proof(script), encoding="utf-8")
        print(f"{name}: {formula_str(script.goal)}  "
              f"[{len(script.lines)} lines, {len(script.hypotheses)} hyps]")
    print(f"\n{len(files)} scripts written to {OUT}")


if __name__ == "__main__":
    main()
