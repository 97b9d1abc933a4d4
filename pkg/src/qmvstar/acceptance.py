"""The acceptance suite: every shipped claim, runnable end to end.

Each criterion function returns records; `run_all` concatenates them.  The
CLI (`qmvstar fixtures run`) and tests/test_acceptance.py both drive this
module, so the checked claims and their tolerances live in exactly one
place.  Sample counts follow the shipped contract; `fast=True` shrinks only
the fuzz volumes (for smoke runs, never for acceptance).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from . import algebras, catalogs, combinators, fixtures, models, semantics, transforms
from .algebras import check_conditional_law, check_law, check_theory, load_algebra
from .formulas import arrow, formula_str, neg, negpart, pos, replace_at, var
from .proofs import check_proof, parse_proof


@dataclass(frozen=True)
class Record:
    name: str
    passed: bool
    detail: str = ""


def _record(name: str, passed: bool, detail: str = "") -> Record:
    return Record(name, bool(passed), detail)


def _load_fixture():
    return load_algebra(fixtures.fixture_path("qmv7.alg"))


def _load_mutated():
    return load_algebra(fixtures.fixture_path("qmv7_mutated.alg"))


# -- 1: exhaustive fixture check plus mutation sensitivity -------------------


def criterion_1() -> list[Record]:
    out = []
    started = time.perf_counter()
    alg = _load_fixture()
    reports = check_theory(alg, catalogs.QMV_LAWS)
    elapsed = time.perf_counter() - started
    three_var = [r for r in reports if r.name in ("QMV*2", "QMV*13", "QMV*14")]
    out.append(_record(
        "1.1 fixture passes the 14 additive axioms exhaustively",
        algebras.all_passed(reports)
        and all(r.checked == 343 for r in three_var),
        f"{len(reports)} laws, {elapsed:.3f}s"))
    out.append(_record("1.2 exhaustive check under 1s", elapsed < 1.0,
                       f"{elapsed:.3f}s"))
    mutated = check_theory(_load_mutated(), catalogs.QMV_LAWS)
    failing = [r for r in mutated if not r.passed]
    out.append(_record(
        "1.3 one-cell mutation is caught with a counterexample",
        bool(failing) and all(r.counterexample for r in failing),
        f"failing: {', '.join(r.name for r in failing)}"))
    return out


# -- 2: term equivalence ------------------------------------------------------


def criterion_2() -> list[Record]:
    alg = _load_fixture()
    qw = transforms.to_qw(alg)
    out = [_record("2.1 implicative reading passes the 12 qw axioms exhaustively",
                   algebras.all_passed(check_theory(qw, catalogs.QW_LAWS)))]
    back = transforms.to_qmv(qw)
    out.append(_record(
        "2.2 additive -> implicative -> additive is table-identical",
        back.binary_table == alg.binary_table
        and back.neg_table == alg.neg_table
        and back.pos_table == alg.pos_table
        and back.negpart_table == alg.negpart_table
        and back.zero == alg.zero and back.one == alg.one))
    again = transforms.to_qw(back)
    out.append(_record(
        "2.3 implicative -> additive -> implicative is table-identical",
        again.binary_table == qw.binary_table
        and again.neg_table == qw.neg_table
        and again.pos_table == qw.pos_table
        and again.negpart_table == qw.negpart_table
        and again.one == qw.one))
    return out


# -- 3: congruence structure --------------------------------------------------


def criterion_3() -> list[Record]:
    started = time.perf_counter()
    out = []
    alg = _load_fixture()
    qw = transforms.to_qw(alg)
    mu = transforms.congruence_mu(qw)
    tau = transforms.congruence_tau(qw)
    out.append(_record("3.1 mu partition is {a}|{b,c}|{0}|{d,e}|{1}",
                       str(mu) == "a | b,c | 0 | d,e | 1", str(mu)))
    out.append(_record("3.2 tau partition is {a,b,0,e,1}|{c}|{d}",
                       str(tau) == "a,b,0,e,1 | c | d", str(tau)))

    qmu = transforms.quotient(qw, mu)
    regular = all(algebras.regularize(qmu, i) == i for i in range(qmu.size))
    plain = transforms.restrict_to_plain(qmu)
    w_ok = algebras.all_passed(check_theory(plain, catalogs.W_LAWS))
    mv_ok = algebras.all_passed(
        check_theory(transforms.to_qmv(plain), catalogs.MV_LAWS))
    out.append(_record(
        "3.3 mu-quotient: 5 elements, 0 o x = x, passes the plain theories",
        qmu.size == 5 and regular and w_ok and mv_ok))

    qtau = transforms.quotient(qw, tau)
    out.append(_record("3.4 tau-quotient is flat and linear",
                       algebras.is_flat(qtau) and algebras.is_linear(qtau)))

    _, _, prod, report = transforms.canonical_embedding(qw)
    out.append(_record(
        "3.5 embedding into the 15-element product: injective, surjective projections",
        prod.size == 15 and report.all_pass))

    rmu, rtau = transforms.relation_of(mu), transforms.relation_of(tau)
    out.append(_record("3.6 mu intersect tau is the diagonal",
                       transforms.is_diagonal(transforms.intersect(rmu, rtau))))
    mtm = transforms.compose(transforms.compose(rmu, rtau), rmu)
    out.append(_record("3.7 mu o tau o mu is the all relation",
                       transforms.is_all(mtm)))
    elapsed = time.perf_counter() - started
    out.append(_record("3.8 structure checks under 1s", elapsed < 1.0,
                       f"{elapsed:.3f}s"))
    return out


# -- 4: standard models -------------------------------------------------------


def criterion_4() -> list[Record]:
    started = time.perf_counter()
    out = []
    sweeps = [
        ("scalar model vs its 12 axioms, grid D=4", models.R,
         catalogs.MV_LAWS, models.GridSampler(4)),
        ("additive pair model vs its 14 axioms, grid D=2", models.RSTAR_QMV,
         catalogs.QMV_LAWS, models.GridSampler(2)),
        ("implicative pair model vs its 12 axioms, grid D=2", models.RSTAR_QW,
         catalogs.QW_LAWS, models.GridSampler(2)),
    ]
    for index, (label, model, laws, sampler) in enumerate(sweeps, start=1):
        reports = models.sample_check(model, laws, sampler)
        out.append(_record(f"4.{index} {label}: no counterexample",
                           all(r.passed for r in reports)))
    witness = models.pos_divergence_witness()
    point, qmv_value, qw_value = witness
    out.append(_record(
        "4.4 positive-part divergence witness has a negative second coordinate",
        witness is not None and point[1] < 0 and qmv_value != qw_value,
        f"at {models.format_point(point)}: "
        f"{models.format_point(qmv_value)} vs {models.format_point(qw_value)}"))
    elapsed = time.perf_counter() - started
    out.append(_record("4.5 model sweeps under 60s", elapsed < 60.0,
                       f"{elapsed:.1f}s"))
    return out


# -- 5: derived-property suites -----------------------------------------------


def criterion_5() -> list[Record]:
    out = []
    alg = _load_fixture()
    qw = transforms.to_qw(alg)
    for label, algebra in (("additive", alg), ("implicative", qw)):
        laws, claws = catalogs.property_suite(algebra.kind)
        reports = [check_law(algebra, law) for law in laws]
        reports += [check_conditional_law(algebra, claw) for claw in claws]
        failing = [r.name for r in reports if not r.passed]
        out.append(_record(
            f"5.{1 if label == 'additive' else 2} {label} suite exhaustive on the fixture",
            not failing, f"{len(reports)} items" + (f"; failing: {failing}" if failing else "")))
    for index, (model, label) in enumerate(
            ((models.RSTAR_QMV, "additive"), (models.RSTAR_QW, "implicative")),
            start=3):
        laws, claws = catalogs.property_suite(model.kind)
        reports = models.sample_check(model, list(laws) + list(claws),
                                      models.GridSampler(2))
        failing = [r.name for r in reports if not r.passed]
        out.append(_record(
            f"5.{index} {label} suite sampled at grid D=2 on the pair model",
            not failing, f"{len(reports)} items" + (f"; failing: {failing}" if failing else "")))
    return out


# -- 6: proof fixtures and combinator totality ---------------------------------


def criterion_6(trials: int = 100) -> list[Record]:
    out = []
    names = fixtures.proof_names()
    failures = []
    for name in names:
        try:
            script = parse_proof(fixtures.read_fixture("proofs", name))
            if script.goal is None:
                failures.append(f"{name}: missing theorem header")
                continue
            check_proof(script)
        except Exception as exc:  # noqa: BLE001 - report which fixture broke
            failures.append(f"{name}: {exc}")
    out.append(_record(
        "6.1 every bundled proof script verifies with its declared theorem",
        not failures, f"{len(names)} scripts" + ("; " + "; ".join(failures[:3])
                                                 if failures else "")))
    expected = {
        "refl.prf", "neg_arrow_fwd.prf", "diag_eq_fwd.prf", "neg_diag_fwd.prf",
        "double_neg_fwd.prf", "contrapose_fwd.prf", "pos_swap_fwd.prf",
        "negpart_swap_fwd.prf", "cong_neg_fwd.prf", "cong_arrow_fwd.prf",
        "trans_fwd.prf", "cong_pos_fwd.prf", "cong_negpart_fwd.prf",
        "replace_neg_fwd.prf", "replace_pos_fwd.prf", "replace_negpart_fwd.prf",
        "replace_arrow_left_fwd.prf", "replace_arrow_right_fwd.prf",
        "replace_nested_neg_fwd.prf", "replace_nested_pos_fwd.prf",
        "replace_nested_negpart_fwd.prf", "replace_nested_arrow_left_fwd.prf",
        "replace_nested_arrow_right_fwd.prf", "oplus_zero_fwd.prf",
        "guarded_pos.prf",
    }
    out.append(_record("6.2 the expected derivation transcripts are all present",
                       expected.issubset(set(names)),
                       f"missing: {sorted(expected - set(names))}" if not
                       expected.issubset(set(names)) else f"{len(names)} files"))
    ok, detail = _combinator_fuzz(trials)
    out.append(_record(
        f"6.3 combinators verify with the declared shape ({trials} random trials)",
        ok, detail))
    return out


def _random_biproof(rng: random.Random) -> combinators.BiProof:
    choice = rng.randrange(4)
    f = semantics.random_formula(rng, 2)
    if choice == 0:
        return combinators.refl(f)
    if choice == 1:
        return combinators.neg_diag(f)
    if choice == 2:
        return combinators.double_neg(f)
    base = rng.choice(("Q1", "Q3", "Q5"))
    g = semantics.random_formula(rng, 2)
    return combinators.axiom_bi(base, {"p": f, "q": g})


def _combinator_fuzz(trials: int) -> tuple[bool, str]:
    rng = random.Random(20_240_601)
    counts: dict[str, int] = {}
    for _ in range(trials):
        b = _random_biproof(rng)
        move = rng.choice(("cong_neg", "cong_arrow", "trans", "cong_pos_negpart",
                           "replace", "neg_arrow", "diag_eq", "contrapose_neg",
                           "pos_neg_swap", "oplus_zero"))
        counts[move] = counts.get(move, 0) + 1
        try:
            if move == "cong_neg":
                result = combinators.cong_neg(b)
                shape = (neg(b.lhs), neg(b.rhs))
            elif move == "cong_arrow":
                other = _random_biproof(rng)
                result = combinators.cong_arrow(b, other)
                shape = (arrow(b.lhs, other.lhs), arrow(b.rhs, other.rhs))
            elif move == "trans":
                result = combinators.trans(b, combinators.refl(b.rhs))
                shape = (b.lhs, b.rhs)
            elif move == "cong_pos_negpart":
                part = rng.randrange(2)
                result = combinators.cong_pos_negpart(b)[part]
                wrap = (pos, negpart)[part]
                shape = (wrap(b.lhs), wrap(b.rhs))
            elif move == "replace":
                t = var("t")
                context = rng.choice((neg(b.lhs), arrow(b.lhs, t),
                                      arrow(t, b.lhs), pos(b.lhs)))
                which = (0,) if context.args[0] is b.lhs else (1,)
                result = combinators.replace(b, context, which)
                shape = (context, replace_at(context, which, b.rhs))
            elif move == "neg_arrow":
                f = semantics.random_formula(rng, 2)
                g = semantics.random_formula(rng, 2)
                result = combinators.neg_arrow(f, g)
                shape = (neg(arrow(f, g)), arrow(neg(f), neg(g)))
            elif move == "diag_eq":
                f = semantics.random_formula(rng, 2)
                g = semantics.random_formula(rng, 2)
                result = combinators.diag_eq(f, g)
                shape = (arrow(f, f), arrow(g, g))
            elif move == "contrapose_neg":
                f = semantics.random_formula(rng, 2)
                g = semantics.random_formula(rng, 2)
                result = combinators.contrapose_neg(f, g)
                shape = (arrow(neg(f), g), arrow(neg(g), f))
            elif move == "pos_neg_swap":
                f = semantics.random_formula(rng, 2)
                part = rng.randrange(2)
                result = combinators.pos_neg_swap(f)[part]
                shape = ((pos(neg(f)), neg(negpart(f))) if part == 0
                         else (negpart(neg(f)), neg(pos(f))))
            else:
                f = semantics.random_formula(rng, 2)
                g = semantics.random_formula(rng, 2)
                result = combinators.oplus_zero_identity(f, g)
                shape = (arrow(neg(f), arrow(g, g)), f)
            result.verify()
            if (result.lhs, result.rhs) != shape:
                return False, (f"{move}: wrong shape "
                               f"{formula_str(result.lhs)} iff {formula_str(result.rhs)}")
        except Exception as exc:  # noqa: BLE001 - the fuzz is the report
            return False, f"{move}: {exc}"
    spread = ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))
    return True, spread


# -- 7: soundness suite ---------------------------------------------------------


def criterion_7(fast: bool = False) -> list[Record]:
    started = time.perf_counter()
    out = []

    unstable = []
    for name in fixtures.proof_names():
        script = parse_proof(fixtures.read_fixture("proofs", name))
        if script.hypotheses:
            continue  # stability is about theorems, not derived rules
        if not semantics.theorem_stability(script.goal, seed=11,
                                           random_count=1000):
            unstable.append(name)
    out.append(_record(
        "7.1 every closed fixture theorem survives grid D=2 plus 1000 random valuations",
        not unstable, f"unstable: {unstable}" if unstable else ""))

    audits = semantics.audit_schemas(trials=1000, seed=7)
    designated_ok = all(a.designated_failures == 0 for a in audits)
    zero_ok = all(a.always_zero for a in audits if not a.schema_id.startswith("Q10"))
    top_not_zero = any(not a.always_zero for a in audits
                       if a.schema_id.startswith("Q10"))
    out.append(_record(
        "7.2 axiom audit: all designated; all but the top axiom exactly <0,0>",
        designated_ok and zero_ok and top_not_zero,
        f"{len(audits)} schemas x 1000 trials"))

    proofs = 1000 if fast else 10_000
    fuzz = semantics.soundness_fuzz(semantics.FuzzConfig(proofs=proofs, seed=13))
    out.append(_record(
        f"7.3 soundness fuzz ({proofs} random proofs): zero violations",
        fuzz.clean and fuzz.proofs == proofs,
        f"rule steps {fuzz.rule_applications}, dead ends {fuzz.dead_ends}"))

    samples = 20_000 if fast else 100_000
    preservation = semantics.rule_preservation_check(samples=samples, seed=17)
    out.append(_record(
        f"7.4 rule preservation ({samples} samples per rule): zero violations",
        preservation.clean, str(preservation.violations)))
    elapsed = time.perf_counter() - started
    out.append(_record("7.5 soundness suite under 120s", elapsed < 120.0,
                       f"{elapsed:.1f}s"))
    return out


# -- 8: congruence enumeration oracle -------------------------------------------


def criterion_8() -> list[Record]:
    started = time.perf_counter()
    out = []
    alg = _load_fixture()
    congs = transforms.enumerate_congruences(alg)
    partitions = {c.classes for c in congs}
    mu = transforms.congruence_mu(alg)
    tau = transforms.congruence_tau(alg)
    delta = transforms.diagonal_congruence(alg)
    top = transforms.all_congruence(alg)
    out.append(_record(
        "8.1 enumeration contains the diagonal, the all relation, mu, and tau",
        {mu.classes, tau.classes, delta.classes, top.classes} <= partitions,
        f"{len(congs)} congruences in Bell(7)=877 partitions"))
    bad = []
    for cong in congs:
        quotient = transforms.quotient(alg, cong)
        if not algebras.all_passed(check_theory(quotient, catalogs.QMV_LAWS)):
            bad.append(str(cong))
    out.append(_record("8.2 every enumerated quotient passes the additive axioms",
                       not bad, f"bad: {bad}" if bad else ""))
    elapsed = time.perf_counter() - started
    out.append(_record("8.3 enumeration oracle under 10s", elapsed < 10.0,
                       f"{elapsed:.2f}s"))
    return out


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8)


def run_all(fast: bool = False) -> list[Record]:
    out: list[Record] = []
    for func in CRITERIA:
        if func is criterion_7:
            out.extend(func(fast=fast))
        else:
            out.extend(func())
    return out
