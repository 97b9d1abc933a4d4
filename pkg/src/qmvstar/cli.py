"""Command-line entry point.

Subcommand tree:

    algebra {check|props|transform|quotient|product|embed|congruences|filter}
    model   {check|eval}
    formula {eval|falsify}
    proof   {check|expand}
    fuzz    soundness
    fixtures run

Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage or
parse errors.  `--json` switches the report to one JSON record per check
(sorted keys, no timestamps), so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance, algebras, catalogs, combinators, models, semantics
from . import transforms
from .algebras import AlgebraError, AlgebraFormatError, CheckReport
from .formulas import formula_str, parse_formula
from .proofs import ProofError, ProofFormatError, check_proof, format_proof, load_proof

USAGE_ERROR = 2
CHECK_FAILED = 1


class _Reporter:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.failed = False

    def check(self, report: CheckReport) -> None:
        if not report.passed:
            self.failed = True
        if self.as_json:
            record = {
                "type": "check", "name": report.name, "passed": report.passed,
                "checked": report.checked, "statement": report.statement,
                "counterexample": report.counterexample,
                "lhs": report.lhs_value, "rhs": report.rhs_value,
                "premises_satisfied": report.premises_satisfied,
                "note": report.note,
            }
            print(json.dumps(record, sort_keys=True))
        else:
            print(report)

    def line(self, text: str, record: dict | None = None) -> None:
        if self.as_json:
            print(json.dumps(record if record is not None else {"text": text},
                             sort_keys=True))
        else:
            print(text)

    def exit_code(self) -> int:
        return CHECK_FAILED if self.failed else 0


def _load_algebra_or_exit(path: str):
    try:
        return algebras.load_algebra(path)
    except FileNotFoundError:
        print(f"error: no such file {path!r}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)
    except (AlgebraFormatError, AlgebraError) as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


# ---------------------------------------------------------------------------
# algebra subcommands


def _cmd_algebra_check(args, rep: _Reporter) -> int:
    alg = _load_algebra_or_exit(args.file)
    kind = alg.kind if args.theory == "auto" else args.theory
    if kind != alg.kind:
        print(f"error: file has kind {alg.kind}, cannot check {kind} theory",
              file=sys.stderr)
        return USAGE_ERROR
    laws = catalogs.theory_for(kind)
    if args.laws:
        wanted = set(args.laws.split(","))
        laws = tuple(l for l in laws if l.name in wanted or l.base in wanted)
        if not laws:
            print(f"error: no laws match {args.laws!r}", file=sys.stderr)
            return USAGE_ERROR
    for law in laws:
        rep.check(algebras.check_law(alg, law))
    return rep.exit_code()


def _cmd_algebra_props(args, rep: _Reporter) -> int:
    alg = _load_algebra_or_exit(args.file)
    laws, claws = catalogs.property_suite(alg.kind)
    for law in laws:
        rep.check(algebras.check_law(alg, law))
    for claw in claws:
        rep.check(algebras.check_conditional_law(alg, claw))
    return rep.exit_code()


def _cmd_algebra_transform(args, rep: _Reporter) -> int:
    alg = _load_algebra_or_exit(args.file)
    try:
        out = transforms.to_qw(alg) if args.to == "qw" else transforms.to_qmv(alg)
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    print(algebras.dumps_algebra(out), end="")
    return 0


def _parse_partition_spec(alg, spec: str):
    blocks = []
    for block in spec.split("|"):
        names = [n.strip() for n in block.split(",") if n.strip()]
        blocks.append([alg.element(n).index for n in names])
    return blocks


def _cmd_algebra_quotient(args, rep: _Reporter) -> int:
    alg = _load_algebra_or_exit(args.file)
    try:
        if args.cong == "mu":
            cong = transforms.congruence_mu(alg)
        elif args.cong == "tau":
            cong = transforms.congruence_tau(alg)
        else:
            cong = transforms.congruence_from_blocks(
                alg, _parse_partition_spec(alg, args.cong))
        out = transforms.quotient(alg, cong)
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CHECK_FAILED
    print(algebras.dumps_algebra(out), end="")
    return 0


def _cmd_algebra_product(args, rep: _Reporter) -> int:
    a = _load_algebra_or_exit(args.file1)
    b = _load_algebra_or_exit(args.file2)
    try:
        print(algebras.dumps_algebra(transforms.direct_product(a, b)), end="")
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    return 0


def _cmd_algebra_embed(args, rep: _Reporter) -> int:
    alg = _load_algebra_or_exit(args.file)
    mu, tau, prod, report = transforms.canonical_embedding(alg)
    for element, mu_class, tau_class in report.mapping:
        rep.line(f"h({element}) = ({mu_class}, {tau_class})",
                 {"type": "embedding", "element": element,
                  "mu": mu_class, "tau": tau_class})
    verdicts = {
        "injective": report.injective,
        "homomorphism": report.homomorphism,
        "mu-projection-surjective": report.mu_projection_surjective,
        "tau-projection-surjective": report.tau_projection_surjective,
    }
    for name, value in verdicts.items():
        rep.line(f"{name}: {'pass' if value else 'FAIL'}",
                 {"type": "verdict", "name": name, "passed": value})
        if not value:
            rep.failed = True
    return rep.exit_code()


def _cmd_algebra_congruences(args, rep: _Reporter) -> int:
    alg = _load_algebra_or_exit(args.file)
    try:
        congs = transforms.enumerate_congruences(alg)
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    for cong in congs:
        rep.line(str(cong), {"type": "congruence",
                             "classes": [list(c) for c in cong.classes],
                             "spec": str(cong).replace(" ", "")})
    return 0


def _cmd_algebra_filter(args, rep: _Reporter) -> int:
    alg = _load_algebra_or_exit(args.file)
    names = [n.strip() for n in args.set.split(",") if n.strip()]
    try:
        report = transforms.check_filter(alg, names)
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    for cond in ("f1", "f2", "f3"):
        passed = getattr(report, cond)
        rep.line(f"{cond.upper()}: {'pass' if passed else 'FAIL'}",
                 {"type": "filter", "condition": cond.upper(), "passed": passed})
        if not passed:
            rep.failed = True
    if report.detail:
        rep.line(report.detail, {"type": "detail", "text": report.detail})
    return rep.exit_code()


# ---------------------------------------------------------------------------
# model subcommands


def _sampler_from_args(args):
    if args.random is not None:
        return models.RandomSampler(count=args.random, seed=args.seed,
                                    denominator=args.denominator)
    return models.GridSampler(args.grid if args.grid is not None else 2)


def _cmd_model_check(args, rep: _Reporter) -> int:
    model = models.MODELS[args.model]
    sampler = _sampler_from_args(args)
    laws = list(catalogs.theory_for(model.kind))
    if args.props:
        plain, conditional = catalogs.property_suite(model.kind)
        laws += list(plain) + list(conditional)
    for report in models.sample_check(model, laws, sampler):
        rep.check(report)
    return rep.exit_code()


def _cmd_model_eval(args, rep: _Reporter) -> int:
    model = models.MODELS[args.model]
    try:
        parts = [p for p in args.args.split(";") if p.strip()]
        values = [model.parse_value(p.strip()) for p in parts]
        result = model.apply(args.op, *values)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    rep.line(model.format_value(result),
             {"type": "value", "value": model.format_value(result)})
    return 0


# ---------------------------------------------------------------------------
# formula subcommands


def _parse_valuation(pairs):
    valuation = {}
    for item in pairs or ():
        name, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"bad --val {item!r}, expected name=a,b")
        valuation[name.strip()] = models.parse_point(value)
    return valuation


def _cmd_formula_eval(args, rep: _Reporter) -> int:
    try:
        formula = parse_formula(args.formula)
        valuation = _parse_valuation(args.val)
        value = semantics.evaluate(formula, valuation)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    rep.line(models.format_point(value),
             {"type": "value", "value": models.format_point(value)})
    return 0


def _cmd_formula_falsify(args, rep: _Reporter) -> int:
    try:
        formula = parse_formula(args.formula)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    result = semantics.falsify(formula, _sampler_from_args(args))
    record = {"type": "falsify", "formula": formula_str(formula),
              "samples": result.samples, "falsified": result.falsified,
              "counterexample": ({k: models.format_point(v) for k, v in
                                  result.counterexample.items()}
                                 if result.counterexample else None),
              "value": models.format_point(result.value) if result.value else None,
              "note": result.note}
    rep.line(result.machine_line(), record)
    if result.falsified:
        rep.failed = True
    return rep.exit_code()


# ---------------------------------------------------------------------------
# proof subcommands


def _cmd_proof_check(args, rep: _Reporter) -> int:
    try:
        script = load_proof(args.file)
    except FileNotFoundError:
        print(f"error: no such file {args.file!r}", file=sys.stderr)
        return USAGE_ERROR
    except (ProofFormatError, ValueError) as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        verified = check_proof(script)
    except ProofError as exc:
        rep.line(f"INVALID: {exc}",
                 {"type": "proof", "verified": False, "line": exc.line,
                  "reason": exc.reason})
        return CHECK_FAILED
    record = {"type": "proof", "verified": True,
              "theorem": formula_str(verified.theorem),
              "hypotheses": [formula_str(h) for h in verified.hypotheses],
              "lines": verified.line_count}
    hyps = ""
    if verified.hypotheses:
        hyps = " from " + ", ".join(formula_str(h) for h in verified.hypotheses)
    rep.line(f"verified: {formula_str(verified.theorem)}{hyps} "
             f"({verified.line_count} lines)", record)
    return 0


def _load_biproofs(paths):
    """Consume verified proof files pairwise as (forward, backward) halves."""
    if len(paths) % 2:
        raise ValueError("--inputs must come in fwd/bwd pairs")
    out = []
    for fwd_path, bwd_path in zip(paths[::2], paths[1::2]):
        fwd = load_proof(fwd_path)
        bwd = load_proof(bwd_path)
        lhs, rhs = check_proof(fwd).theorem.args
        combinators.BiProof(lhs, rhs, fwd, bwd).verify()
        out.append(combinators.BiProof(lhs, rhs, fwd, bwd))
    return out


def _cmd_proof_expand(args, rep: _Reporter) -> int:
    name = args.combinator
    try:
        proofs_in = _load_biproofs(args.inputs or [])
        formulas_in = [parse_formula(f) for f in args.formula or []]
        result = _run_combinator(name, proofs_in, formulas_in, args)
    except (ValueError, ProofError, ProofFormatError, KeyError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if isinstance(result, combinators.BiProof):
        result.verify()
        script = result.fwd if args.direction == "fwd" else result.bwd
        goal = script.lines[-1].formula
        script = type(script)(script.lines, script.hypotheses, goal)
    else:
        check_proof(result)
        script = result
    print(format_proof(script), end="")
    return 0


def _run_combinator(name, proofs_in, formulas_in, args):
    need = lambda n, what: (_ for _ in ()).throw(
        ValueError(f"combinator {name} needs {n} {what}"))
    if name == "cong_neg":
        return combinators.cong_neg(*(proofs_in or need(1, "input pair")))
    if name == "cong_arrow":
        return combinators.cong_arrow(*proofs_in)
    if name == "trans":
        return combinators.trans(*proofs_in)
    if name == "neg_arrow":
        return combinators.neg_arrow(*formulas_in)
    if name == "refl":
        return combinators.refl(*formulas_in)
    if name == "diag_eq":
        return combinators.diag_eq(*formulas_in)
    if name == "neg_diag":
        return combinators.neg_diag(*formulas_in)
    if name == "double_neg":
        return combinators.double_neg(*formulas_in)
    if name == "contrapose_neg":
        return combinators.contrapose_neg(*formulas_in)
    if name == "oplus_zero":
        return combinators.oplus_zero_identity(*formulas_in)
    if name == "guarded_pos":
        return combinators.guarded_pos(*formulas_in)
    if name == "pos_neg_swap":
        return combinators.pos_neg_swap(*formulas_in)[args.part - 1]
    if name == "cong_pos_negpart":
        return combinators.cong_pos_negpart(*proofs_in)[args.part - 1]
    if name == "replace":
        if args.context is None or args.path is None:
            raise ValueError("replace needs --context and --path")
        context = parse_formula(args.context)
        path = tuple(int(p) for p in args.path.split(",") if p != "")
        return combinators.replace(proofs_in[0], context, path)
    raise ValueError(f"unknown combinator {name!r}")


# ---------------------------------------------------------------------------
# fuzz / fixtures


def _cmd_fuzz_soundness(args, rep: _Reporter) -> int:
    cfg = semantics.FuzzConfig(proofs=args.proofs, seed=args.seed, depth=args.depth)
    report = semantics.soundness_fuzz(cfg)
    record = {"type": "fuzz", "proofs": report.proofs,
              "rule_applications": report.rule_applications,
              "dead_ends": report.dead_ends,
              "check_failures": report.check_failures,
              "violations": len(report.violations), "seed": cfg.seed}
    rep.line(f"proofs={report.proofs} rule-steps={report.rule_applications} "
             f"dead-ends={report.dead_ends} check-failures={report.check_failures} "
             f"violations={len(report.violations)}", record)
    for violation in report.violations:
        rep.line("FATAL soundness violation:\n" + violation.script_text
                 + violation.result.machine_line(),
                 {"type": "violation", "index": violation.index,
                  "script": violation.script_text,
                  "counterexample": violation.result.machine_line()})
    if not report.clean:
        rep.failed = True
    return rep.exit_code()


def _cmd_fixtures_run(args, rep: _Reporter) -> int:
    records = acceptance.run_all(fast=args.fast)
    for record in records:
        rep.line(f"{'PASS' if record.passed else 'FAIL'} {record.name}"
                 + (f" -- {record.detail}" if record.detail else ""),
                 {"type": "acceptance", "name": record.name,
                  "passed": record.passed, "detail": record.detail})
        if not record.passed:
            rep.failed = True
    return rep.exit_code()


# ---------------------------------------------------------------------------
# parser wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmvstar",
        description="Checks for quasi-MV*/quasi-Wajsberg* algebras and the "
                    "logic qL*: finite models, standard models, proofs.")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output, one JSON record per line")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomised subcommands")
    parser.add_argument("--jobs", type=int, default=1,
                        help="reserved; checks currently run in one process")
    groups = parser.add_subparsers(dest="group", required=True)

    algebra = groups.add_parser("algebra", help="finite table algebras")
    algebra_sub = algebra.add_subparsers(dest="command", required=True)
    cmd = algebra_sub.add_parser("check", help="check an axiom system exhaustively")
    cmd.add_argument("file")
    cmd.add_argument("--theory", default="auto",
                     choices=["auto", "qmv", "qw", "mv", "w"])
    cmd.add_argument("--laws", help="comma-separated law names to run")
    cmd.set_defaults(func=_cmd_algebra_check)
    cmd = algebra_sub.add_parser("props", help="run the derived-property suites")
    cmd.add_argument("file")
    cmd.set_defaults(func=_cmd_algebra_props)
    cmd = algebra_sub.add_parser("transform", help="switch signature reading")
    cmd.add_argument("file")
    cmd.add_argument("--to", required=True, choices=["qw", "qmv"])
    cmd.set_defaults(func=_cmd_algebra_transform)
    cmd = algebra_sub.add_parser("quotient", help="quotient by a congruence")
    cmd.add_argument("file")
    cmd.add_argument("--cong", required=True,
                     help="mu | tau | partition spec like a,b|c|0,d,e,1")
    cmd.set_defaults(func=_cmd_algebra_quotient)
    cmd = algebra_sub.add_parser("product", help="direct product of two algebras")
    cmd.add_argument("file1")
    cmd.add_argument("file2")
    cmd.set_defaults(func=_cmd_algebra_product)
    cmd = algebra_sub.add_parser("embed",
                                 help="canonical embedding into W/mu x W/tau")
    cmd.add_argument("file")
    cmd.set_defaults(func=_cmd_algebra_embed)
    cmd = algebra_sub.add_parser("congruences", help="enumerate all congruences")
    cmd.add_argument("file")
    cmd.set_defaults(func=_cmd_algebra_congruences)
    cmd = algebra_sub.add_parser("filter", help="check the filter conditions")
    cmd.add_argument("file")
    cmd.add_argument("--set", required=True, help="comma-separated element names")
    cmd.set_defaults(func=_cmd_algebra_filter)

    model = groups.add_parser("model", help="exact-rational standard models")
    model_sub = model.add_subparsers(dest="command", required=True)
    cmd = model_sub.add_parser("check", help="sample an axiom system on a model")
    cmd.add_argument("--model", required=True, choices=sorted(models.MODELS))
    cmd.add_argument("--grid", type=int, help="grid denominator D")
    cmd.add_argument("--random", type=int, help="number of random samples")
    cmd.add_argument("--denominator", type=int, default=360,
                     help="denominator bound for random samples")
    cmd.add_argument("--props", action="store_true",
                     help="also run the derived-property suites")
    cmd.set_defaults(func=_cmd_model_check)
    cmd = model_sub.add_parser("eval", help="apply one model operation")
    cmd.add_argument("--model", required=True, choices=sorted(models.MODELS))
    cmd.add_argument("--op", required=True,
                     choices=["plus", "arrow", "neg", "pos", "negpart"])
    cmd.add_argument("--args", required=True,
                     help="semicolon-separated arguments, e.g. '1/2,1/3;-1/4,1'")
    cmd.set_defaults(func=_cmd_model_eval)

    formula = groups.add_parser("formula", help="formula semantics")
    formula_sub = formula.add_subparsers(dest="command", required=True)
    cmd = formula_sub.add_parser("eval", help="evaluate under a valuation")
    cmd.add_argument("formula")
    cmd.add_argument("--val", action="append",
                     help="variable binding name=a,b (repeatable)")
    cmd.set_defaults(func=_cmd_formula_eval)
    cmd = formula_sub.add_parser("falsify", help="search for a non-designated value")
    cmd.add_argument("formula")
    cmd.add_argument("--grid", type=int, help="grid denominator D")
    cmd.add_argument("--random", type=int, help="number of random valuations")
    cmd.add_argument("--denominator", type=int, default=360)
    cmd.set_defaults(func=_cmd_formula_falsify)

    proof = groups.add_parser("proof", help="proof scripts")
    proof_sub = proof.add_subparsers(dest="command", required=True)
    cmd = proof_sub.add_parser("check", help="verify a proof file")
    cmd.add_argument("file")
    cmd.set_defaults(func=_cmd_proof_check)
    cmd = proof_sub.add_parser("expand", help="emit a generated primitive proof")
    cmd.add_argument("--combinator", required=True)
    cmd.add_argument("--inputs", nargs="*",
                     help="verified proof files, fwd/bwd pairs per input")
    cmd.add_argument("--formula", action="append",
                     help="formula argument (repeatable)")
    cmd.add_argument("--context", help="context formula for replace")
    cmd.add_argument("--path", help="comma-separated child indices for replace")
    cmd.add_argument("--direction", default="fwd", choices=["fwd", "bwd"])
    cmd.add_argument("--part", type=int, default=1, choices=[1, 2],
                     help="which result of a pair-producing combinator")
    cmd.set_defaults(func=_cmd_proof_expand)

    fuzz = groups.add_parser("fuzz", help="randomised soundness testing")
    fuzz_sub = fuzz.add_subparsers(dest="command", required=True)
    cmd = fuzz_sub.add_parser("soundness",
                              help="random proofs, then falsify their theorems")
    cmd.add_argument("--proofs", type=int, default=10_000)
    cmd.add_argument("--depth", type=int, default=4)
    cmd.set_defaults(func=_cmd_fuzz_soundness)

    fixtures = groups.add_parser("fixtures", help="bundled reference fixtures")
    fixtures_sub = fixtures.add_subparsers(dest="command", required=True)
    cmd = fixtures_sub.add_parser("run", help="run the full acceptance suite")
    cmd.add_argument("--fast", action="store_true",
                     help="reduced sample counts (smoke test)")
    cmd.set_defaults(func=_cmd_fixtures_run)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "grid", None) is not None and getattr(args, "random", None) is not None:
        parser.error("--grid and --random are mutually exclusive")
    reporter = _Reporter(args.json)
    try:
        code = args.func(args, reporter)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    except BrokenPipeError:
        return 0
    return code


if __name__ == "__main__":
    sys.exit(main())
