"""Valuation semantics over [-1,1]^2 and the soundness test harness.

A valuation sends every variable to an exact point of [-1,1]^2 and extends
to formulas through the implicative pair model's operations (`models.RSTAR_QW`
is the single source of truth: v(1) = <1,0>, negation flips both
coordinates, the arrow is <clamp(c - a), 0>, ^+/^- clamp the first
coordinate and keep the second).  A formula is designated when its value
lies in the closed box [0,1]^2; sampling can only falsify tautology claims,
never prove them, and every report says so.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import models, terms
from .formulas import (Formula, ONE as F_ONE, arrow, formula_str, neg,
                       negpart, parse_formula, pos, var, variables)
from .proofs import ProofScript, check_proof, format_proof
from .schemas import SCHEMAS, AxiomSchema, apply_substitution
from .terms import compile_terms, run_program

_MODEL = models.RSTAR_QW

Q2 = tuple[Fraction, Fraction]
Valuation = dict[str, Q2]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def evaluate(formula: Formula, valuation: Valuation) -> Q2:
    """Exact structural evaluation, delegating to the pair model's ops."""
    ops = _MODEL.ops()

    def go(node: Formula) -> Q2:
        tag = node.tag
        if tag == "var":
            try:
                return valuation[node.name]
            except KeyError:
                raise KeyError(f"valuation does not cover variable {node.name}") from None
        if tag == "one":
            return ops.one
        if tag == "arrow":
            return ops.binary(go(node.args[0]), go(node.args[1]))
        if tag == "neg":
            return ops.neg(go(node.args[0]))
        if tag == "pos":
            return ops.pos(go(node.args[0]))
        return ops.negpart(go(node.args[0]))

    return go(formula)


def is_designated(point: Q2) -> bool:
    return _ZERO <= point[0] <= _ONE and _ZERO <= point[1] <= _ONE


# ---------------------------------------------------------------------------
# Sweep engine: formulas compile to the same programs as qw terms


def formula_to_term(formula: Formula):
    tag = formula.tag
    if tag == "var":
        return terms.var(formula.name)
    if tag == "one":
        return terms.ONE
    args = [formula_to_term(a) for a in formula.args]
    if tag == "arrow":
        return terms.arrow(*args)
    if tag == "neg":
        return terms.neg(*args)
    if tag == "pos":
        return terms.pos(*args)
    return terms.negpart(*args)


def _formula_program(formula: Formula, names: tuple[str, ...]):
    return compile_terms([formula_to_term(formula)], "qw", names)


def _designated_int(point, q: int) -> bool:
    return 0 <= point[0] <= q and 0 <= point[1] <= q


NOT_A_PROOF = "sampling falsifies only; no counterexample is not a proof of tautology"


@dataclass(frozen=True)
class FalsifyResult:
    formula: Formula
    samples: int
    sampler: str
    counterexample: Valuation | None = None
    value: Q2 | None = None
    note: str = NOT_A_PROOF

    @property
    def falsified(self) -> bool:
        return self.counterexample is not None

    def machine_line(self) -> str:
        if not self.falsified:
            return (f"NO-COUNTEREXAMPLE {formula_str(self.formula)} "
                    f"SAMPLES {self.samples}")
        at = "; ".join(f"{name}={models.format_point(point)}"
                       for name, point in sorted(self.counterexample.items()))
        return (f"COUNTEREXAMPLE {formula_str(self.formula)} AT {at} "
                f"VALUE {models.format_point(self.value)}")


def falsify(formula: Formula, sampler) -> FalsifyResult:
    """Search sampled valuations for a non-designated value.

    Grid mode sweeps variables lexicographically (variable names sorted, grid
    points in lexicographic coordinate order), so the first counterexample is
    canonical; random mode reports the first in draw order.
    """
    names = variables(formula)
    program = _formula_program(formula, names)
    q, assignments = models._assignments(_MODEL, sampler, len(names))
    ops = _MODEL.int_ops(q)
    checked = 0
    for assignment in assignments:
        checked += 1
        (value,) = run_program(program, ops, assignment)
        if not _designated_int(value, q):
            witness = {name: _MODEL.from_int(point, q)
                       for name, point in zip(names, assignment)}
            return FalsifyResult(formula, checked, sampler.describe(),
                                 witness, _MODEL.from_int(value, q))
    return FalsifyResult(formula, checked, sampler.describe())


def default_theorem_sampler(formula: Formula, seed: int = 0):
    """Grid D=1 for theorems with few variables, seeded random otherwise."""
    if len(variables(formula)) <= 2:
        return models.GridSampler(1)
    return models.RandomSampler(count=48, seed=seed, denominator=360)


# ---------------------------------------------------------------------------
# Random formulas and valuations


def random_formula(rng: random.Random, depth: int, names=("p", "q", "r")) -> Formula:
    if depth <= 0 or rng.random() < 0.25:
        if rng.random() < 0.15:
            return F_ONE
        return var(rng.choice(names))
    kind = rng.randrange(4)
    if kind == 0:
        return arrow(random_formula(rng, depth - 1, names),
                     random_formula(rng, depth - 1, names))
    inner = random_formula(rng, depth - 1, names)
    return (neg, pos, negpart)[kind - 1](inner)


def random_point(rng: random.Random, denominator: int = 360) -> Q2:
    return (Fraction(rng.randint(-denominator, denominator), denominator),
            Fraction(rng.randint(-denominator, denominator), denominator))


def random_valuation(rng: random.Random, names, denominator: int = 360) -> Valuation:
    return {name: random_point(rng, denominator) for name in names}


# ---------------------------------------------------------------------------
# Axiom audit


@dataclass(frozen=True)
class SchemaAudit:
    schema_id: str
    trials: int
    designated_failures: int
    always_zero: bool


def audit_schemas(trials: int = 1000, seed: int = 0,
                  schemas: tuple[AxiomSchema, ...] = SCHEMAS) -> list[SchemaAudit]:
    """Evaluate random instances of every schema at random valuations.

    Soundness requires every instance designated; every schema except the
    top axiom p -> 1 must evaluate to exactly <0,0>.
    """
    rng = random.Random(seed)
    out = []
    zero = (_ZERO, _ZERO)
    for schema in schemas:
        failures = 0
        always_zero = True
        for _ in range(trials):
            subst = {name: random_formula(rng, 3) for name in schema.metavariables}
            instance = apply_substitution(schema.pattern, subst)
            valuation = random_valuation(rng, variables(instance))
            value = evaluate(instance, valuation)
            if not is_designated(value):
                failures += 1
            if value != zero:
                always_zero = False
        out.append(SchemaAudit(schema.id, trials, failures, always_zero))
    return out


# ---------------------------------------------------------------------------
# Rule preservation (the semantic halves of the three rules)


@dataclass(frozen=True)
class RulePreservationReport:
    samples: int
    seed: int
    violations: dict[str, int]

    @property
    def clean(self) -> bool:
        return not any(self.violations.values())


def rule_preservation_check(samples: int = 100_000, seed: int = 0,
                            denominator: int = 360) -> RulePreservationReport:
    """Sample the value-level statements of the three rules.

    The rules only see formulas through their values, so points are drawn
    directly: e.g. for the detachment rule, whenever v(p) and v(p -> q) are
    designated, v((r -> r) -> q) must be.
    """
    rng = random.Random(seed)
    ops = _MODEL.int_ops(denominator)
    q = denominator
    violations = {"R1": 0, "R2": 0, "R3": 0}

    def draw():
        return (rng.randint(-q, q), rng.randint(-q, q))

    for _ in range(samples):
        vp, vq, vr, vt = draw(), draw(), draw(), draw()
        diag = ops.binary(vr, vr)
        impl = ops.binary(vp, vq)
        # R1: p, p -> q |- (r -> r) -> q
        if _designated_int(vp, q) and _designated_int(impl, q):
            if not _designated_int(ops.binary(diag, vq), q):
                violations["R1"] += 1
        # R2: (r -> r) -> (p -> q) |- p -> q
        if _designated_int(ops.binary(diag, impl), q):
            if not _designated_int(impl, q):
                violations["R2"] += 1
        # R3: p -> q, r -> t |- (q -> r) -> (p -> t)
        second = ops.binary(vr, vt)
        if _designated_int(impl, q) and _designated_int(second, q):
            conclusion = ops.binary(ops.binary(vq, vr), ops.binary(vp, vt))
            if not _designated_int(conclusion, q):
                violations["R3"] += 1
    return RulePreservationReport(samples, seed, violations)


# ---------------------------------------------------------------------------
# Soundness fuzzing: random primitive proofs, then falsification


@dataclass
class FuzzConfig:
    proofs: int = 10_000
    seed: int = 0
    depth: int = 4
    max_steps: int = 6
    valuations_per_theorem: int = 48


@dataclass
class FuzzViolation:
    index: int
    script_text: str
    result: FalsifyResult


@dataclass
class FuzzReport:
    config: FuzzConfig
    proofs: int = 0
    rule_applications: int = 0
    dead_ends: int = 0
    check_failures: int = 0
    violations: list[FuzzViolation] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.violations and not self.check_failures


def _random_script(rng: random.Random, cfg: FuzzConfig):
    """One random primitive script; returns (script, rule_steps, dead_ends)."""
    from .proofs import AxiomJust, ProofLine, R1Just, R2Just, R3Just

    lines: list[ProofLine] = []
    by_formula: dict[Formula, int] = {}

    def add(formula: Formula, just) -> int:
        lines.append(ProofLine(formula, just))
        by_formula.setdefault(formula, len(lines))
        return len(lines)

    def add_axiom() -> int:
        schema = rng.choice(SCHEMAS)
        subst = {name: random_formula(rng, rng.randint(0, cfg.depth))
                 for name in schema.metavariables}
        formula = apply_substitution(schema.pattern, subst)
        return add(formula, AxiomJust.of(schema.id, subst))

    for _ in range(rng.randint(1, 3)):
        add_axiom()

    steps = 0
    dead_ends = 0
    for _ in range(rng.randint(1, cfg.max_steps)):
        move = rng.choice(("axiom", "r1", "r1_construct", "r2", "r3"))
        if move == "axiom":
            add_axiom()
            continue
        if move == "r1":
            candidates = [(by_formula[line.formula.args[0]], number)
                          for number, line in enumerate(lines, start=1)
                          if line.formula.tag == "arrow"
                          and line.formula.args[0] in by_formula]
            if not candidates:
                dead_ends += 1
                continue
            minor, major = rng.choice(candidates)
            psi = lines[major - 1].formula.args[1]
            add(arrow(arrow(F_ONE, F_ONE), psi), R1Just(minor, major, F_ONE))
        elif move == "r1_construct":
            # Manufacture a major premise over an existing line, then detach.
            minor = rng.randrange(len(lines)) + 1
            phi = lines[minor - 1].formula
            if rng.random() < 0.5:
                subst = {"p": phi, "q": F_ONE}
                major_formula = apply_substitution(
                    next(s for s in SCHEMAS if s.id == "Q3.L").pattern, subst)
                major = add(major_formula, AxiomJust.of("Q3.L", subst))
            else:
                subst = {"p": phi}
                major = add(arrow(phi, F_ONE), AxiomJust.of("Q10", subst))
            psi = lines[major - 1].formula.args[1]
            add(arrow(arrow(F_ONE, F_ONE), psi), R1Just(minor, major, F_ONE))
        elif move == "r2":
            candidates = [
                number for number, line in enumerate(lines, start=1)
                if line.formula.tag == "arrow"
                and line.formula.args[0].tag == "arrow"
                and line.formula.args[0].args[0] is line.formula.args[0].args[1]
                and line.formula.args[1].tag == "arrow"]
            if not candidates:
                dead_ends += 1
                continue
            source = rng.choice(candidates)
            add(lines[source - 1].formula.args[1], R2Just(source))
        else:
            implications = [number for number, line in enumerate(lines, start=1)
                            if line.formula.tag == "arrow"]
            if len(implications) < 1:
                dead_ends += 1
                continue
            first = rng.choice(implications)
            second = rng.choice(implications)
            phi, psi = lines[first - 1].formula.args
            chi, omega = lines[second - 1].formula.args
            add(arrow(arrow(psi, chi), arrow(phi, omega)), R3Just(first, second))
        steps += 1
    return ProofScript(tuple(lines)), steps, dead_ends


def soundness_fuzz(cfg: FuzzConfig | None = None) -> FuzzReport:
    """Generate random proofs, verify them, and try to falsify each theorem.

    Any counterexample to a verified theorem is a FATAL soundness violation;
    the report carries full reproduction data (seed, script, valuation).
    """
    cfg = cfg or FuzzConfig()
    rng = random.Random(cfg.seed)
    report = FuzzReport(cfg)
    for index in range(cfg.proofs):
        script, steps, dead_ends = _random_script(rng, cfg)
        report.dead_ends += dead_ends
        report.rule_applications += steps
        try:
            verified = check_proof(script)
        except Exception:
            report.check_failures += 1
            continue
        report.proofs += 1
        theorem = verified.theorem
        if len(variables(theorem)) <= 2:
            sampler = models.GridSampler(1)
        else:
            sampler = models.RandomSampler(count=cfg.valuations_per_theorem,
                                           seed=cfg.seed * 1_000_003 + index,
                                           denominator=360)
        result = falsify(theorem, sampler)
        if result.falsified:
            report.violations.append(
                FuzzViolation(index, format_proof(script), result))
    return report


def theorem_stability(formula: Formula, seed: int = 0,
                      random_count: int = 1000) -> bool:
    """Grid D=2 plus seeded random valuations; True when nothing falsifies."""
    if falsify(formula, models.GridSampler(2)).falsified:
        return False
    return not falsify(formula, models.RandomSampler(
        count=random_count, seed=seed, denominator=360)).falsified
