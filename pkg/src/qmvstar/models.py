"""Exact-rational standard models on [-1,1] and [-1,1]^2.

Three structures share the truncation pattern clamp(x) = min(1, max(-1, x)):

* `R`          -- [-1,1] with a + b := clamp(a+b)           (kind mv)
* `RSTAR_QMV`  -- [-1,1]^2 with <a,b> + <c,d> := <clamp(a+c), 0>,
                  <a,b>^+ := <max(0,a), max(0,b)>           (kind qmv)
* `RSTAR_QW`   -- [-1,1]^2 with <a,b> -> <c,d> := <clamp(c-a), 0>,
                  <a,b>^+ := <max(0,a), b>                  (kind qw)

All arithmetic is exact (`fractions.Fraction`); nothing is ever rounded.
Sampling sweeps use an equivalent scaled-integer engine: on a grid with
denominator Q every model operation maps numerators over Q to numerators
over Q, so whole sweeps run on machine integers and reports convert back to
reduced fractions.  Sampling only ever falsifies; a clean sweep is reported
as "no counterexample", never as a proof.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import terms
from .algebras import CheckReport
from .terms import (ADDITIVE, ConditionalLaw, Law, compile_terms, run_program)

ONE = Fraction(1)
MINUS_ONE = Fraction(-1)
ZERO = Fraction(0)


def clamp(value: Fraction) -> Fraction:
    """Truncate into [-1, 1]."""
    if value > ONE:
        return ONE
    if value < MINUS_ONE:
        return MINUS_ONE
    return value


def as_rational(value) -> Fraction:
    """Parse/coerce an exact rational; Unicode minus is accepted."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.replace("−", "-").strip())
    raise TypeError(f"not an exact rational: {value!r}")


def format_rational(value: Fraction) -> str:
    return str(value)


def q2(first, second) -> tuple[Fraction, Fraction]:
    """Validated point of [-1,1]^2."""
    a, b = as_rational(first), as_rational(second)
    for coord in (a, b):
        if not MINUS_ONE <= coord <= ONE:
            raise ValueError(f"coordinate {coord} outside [-1, 1]")
    return (a, b)


def parse_point(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'a,b', got {text!r}")
    return q2(parts[0], parts[1])


def format_point(point) -> str:
    return f"{point[0]},{point[1]}"


class _Ops:
    """Operation bundle consumed by `terms.run_program`."""

    __slots__ = ("binary", "neg", "pos", "negpart", "one", "zero")

    def __init__(self, binary, neg, pos, negpart, one, zero):
        self.binary = binary
        self.neg = neg
        self.pos = pos
        self.negpart = negpart
        self.one = one
        self.zero = zero


@dataclass(frozen=True)
class Model:
    """One standard model: exact ops plus the scaled-integer sweep engine."""

    name: str
    kind: str
    scalar: bool  # True for R, False for the paired models

    def ops(self) -> _Ops:
        """Exact Fraction-valued operations."""
        if self.name == "r":
            return _Ops(lambda a, b: clamp(a + b), lambda a: -a,
                        None, None, ONE, ZERO)
        if self.name == "rstar-qmv":
            return _Ops(
                lambda p, q: (clamp(p[0] + q[0]), ZERO),
                lambda p: (-p[0], -p[1]),
                lambda p: (max(ZERO, p[0]), max(ZERO, p[1])),
                lambda p: (min(ZERO, p[0]), min(ZERO, p[1])),
                (ONE, ZERO), (ZERO, ZERO))
        return _Ops(
            lambda p, q: (clamp(q[0] - p[0]), ZERO),
            lambda p: (-p[0], -p[1]),
            lambda p: (max(ZERO, p[0]), p[1]),
            lambda p: (min(ZERO, p[0]), p[1]),
            (ONE, ZERO), None)

    def int_ops(self, q: int) -> _Ops:
        """The same operations on integer numerators over denominator q."""
        if self.name == "r":
            return _Ops(lambda a, b: min(q, max(-q, a + b)), lambda a: -a,
                        None, None, q, 0)
        if self.name == "rstar-qmv":
            return _Ops(
                lambda p, r: (min(q, max(-q, p[0] + r[0])), 0),
                lambda p: (-p[0], -p[1]),
                lambda p: (max(0, p[0]), max(0, p[1])),
                lambda p: (min(0, p[0]), min(0, p[1])),
                (q, 0), (0, 0))
        return _Ops(
            lambda p, r: (min(q, max(-q, r[0] - p[0])), 0),
            lambda p: (-p[0], -p[1]),
            lambda p: (max(0, p[0]), p[1]),
            lambda p: (min(0, p[0]), p[1]),
            (q, 0), None)

    # -- value plumbing -------------------------------------------------------

    def validate(self, value):
        if self.scalar:
            value = as_rational(value)
            if not MINUS_ONE <= value <= ONE:
                raise ValueError(f"{value} outside [-1, 1]")
            return value
        return q2(*value)

    def parse_value(self, text: str):
        return as_rational(text) if self.scalar else parse_point(text)

    def format_value(self, value) -> str:
        return format_rational(value) if self.scalar else format_point(value)

    def from_int(self, value, q: int):
        if self.scalar:
            return Fraction(value, q)
        return (Fraction(value[0], q), Fraction(value[1], q))

    def to_int(self, value, q: int):
        """Exact conversion onto denominator q (raises if incompatible)."""
        def conv(f: Fraction) -> int:
            scaled = f * q
            if scaled.denominator != 1:
                raise ValueError(f"{f} is not a multiple of 1/{q}")
            return scaled.numerator
        if self.scalar:
            return conv(as_rational(value))
        return (conv(value[0]), conv(value[1]))

    def apply(self, op: str, *args):
        """Apply a named operation to exact values (CLI `model eval`)."""
        ops = self.ops()
        args = tuple(self.validate(a) for a in args)
        table = {"plus": ops.binary if self.kind in ADDITIVE else None,
                 "arrow": ops.binary if self.kind not in ADDITIVE else None,
                 "neg": ops.neg, "pos": ops.pos, "negpart": ops.negpart}
        func = table.get(op)
        if func is None:
            raise ValueError(f"model {self.name} has no operation {op!r}")
        return func(*args)


R = Model("r", "mv", scalar=True)
RSTAR_QMV = Model("rstar-qmv", "qmv", scalar=False)
RSTAR_QW = Model("rstar-qw", "qw", scalar=False)

MODELS = {m.name: m for m in (R, RSTAR_QMV, RSTAR_QW)}


def evaluate_term(model: Model, term, assignment: dict) -> object:
    """Evaluate one term with exact rationals under name->value bindings."""
    values = {k: model.validate(v) for k, v in assignment.items()}
    names = tuple(sorted(values))
    program = compile_terms([term], model.kind, names)
    (result,) = run_program(program, model.ops(), tuple(values[n] for n in names))
    return result


# ---------------------------------------------------------------------------
# Samplers


@dataclass(frozen=True)
class GridSampler:
    """Every variable sweeps {k/D : -D <= k <= D} (squared for paired models),
    in lexicographic order; the first counterexample is therefore canonical."""

    denominator: int = 2

    def __post_init__(self):
        if self.denominator < 1:
            raise ValueError("grid denominator must be >= 1")

    def describe(self) -> str:
        return f"grid D={self.denominator}"


@dataclass(frozen=True)
class RandomSampler:
    """N assignments with numerators drawn uniformly over a fixed denominator;
    the seed is recorded in every report and draw order is the contract."""

    count: int = 1000
    seed: int = 0
    denominator: int = 360

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("sample count must be >= 0")
        if self.denominator < 1:
            raise ValueError("denominator bound must be >= 1")

    def describe(self) -> str:
        return f"random N={self.count} seed={self.seed} den={self.denominator}"


def _grid_points(model: Model, q: int):
    line = range(-q, q + 1)
    if model.scalar:
        return list(line)
    return [(a, b) for a in line for b in line]


def _grid_assignments(model: Model, q: int, arity: int):
    return itertools.product(_grid_points(model, q), repeat=arity)


def _random_assignments(model: Model, sampler: RandomSampler, arity: int):
    rng = random.Random(sampler.seed)
    bound = sampler.denominator
    for _ in range(sampler.count):
        if model.scalar:
            yield tuple(rng.randint(-bound, bound) for _ in range(arity))
        else:
            yield tuple((rng.randint(-bound, bound), rng.randint(-bound, bound))
                        for _ in range(arity))


def _assignments(model: Model, sampler, arity: int):
    if isinstance(sampler, GridSampler):
        return sampler.denominator, _grid_assignments(model, sampler.denominator, arity)
    return sampler.denominator, _random_assignments(model, sampler, arity)


def _no_counterexample_note(sampler, samples: int) -> str:
    return (f"no counterexample in {samples} samples ({sampler.describe()}); "
            "sampling falsifies only, this is not a proof")


def check_law_sampled(model: Model, law: Law, sampler) -> CheckReport:
    if law.kind != model.kind:
        raise ValueError(f"law {law.name} targets {law.kind}, model is {model.kind}")
    program = compile_terms([law.lhs, law.rhs], model.kind, law.variables)
    q, assignments = _assignments(model, sampler, len(law.variables))
    ops = model.int_ops(q)
    checked = 0
    for assignment in assignments:
        checked += 1
        lhs, rhs = run_program(program, ops, assignment)
        if lhs != rhs:
            witness = {v: model.format_value(model.from_int(a, q))
                       for v, a in zip(law.variables, assignment)}
            return CheckReport(
                name=law.name, passed=False, checked=checked,
                statement=law.statement(), counterexample=witness,
                lhs_value=model.format_value(model.from_int(lhs, q)),
                rhs_value=model.format_value(model.from_int(rhs, q)),
                note=sampler.describe())
    return CheckReport(name=law.name, passed=True, checked=checked,
                       statement=law.statement(),
                       note=_no_counterexample_note(sampler, checked))


class _ValueOrder:
    """Memoised x <= y test on model values (x v y = 0 o y)."""

    def __init__(self, model: Model, q: int):
        lhs = terms.vee(terms.x, terms.y)
        op = terms.plus if model.kind in ADDITIVE else terms.arrow
        rhs = op(terms.ZERO, terms.y)
        self._program = compile_terms([lhs, rhs], model.kind, ("x", "y"))
        self._ops = model.int_ops(q)
        self._cache: dict = {}

    def leq(self, a, b) -> bool:
        key = (a, b)
        hit = self._cache.get(key)
        if hit is None:
            join, reg = run_program(self._program, self._ops, key)
            hit = self._cache[key] = (join == reg)
        return hit


def leq_values(model: Model, a, b) -> bool:
    """Exact order test on two model values."""
    a, b = model.validate(a), model.validate(b)
    denom = 1
    for f in (a, b) if model.scalar else (*a, *b):
        denom = denom * f.denominator // math.gcd(denom, f.denominator)
    order = _ValueOrder(model, denom)
    return order.leq(model.to_int(a, denom), model.to_int(b, denom))


def check_conditional_law_sampled(model: Model, claw: ConditionalLaw,
                                  sampler) -> CheckReport:
    if claw.kind != model.kind:
        raise ValueError(f"law {claw.name} targets {claw.kind}, model is {model.kind}")
    atoms = list(claw.premises) + [claw.conclusion]
    programs = [(atom.relation,
                 compile_terms([atom.lhs, atom.rhs], model.kind, claw.variables))
                for atom in atoms]
    q, assignments = _assignments(model, sampler, len(claw.variables))
    ops = model.int_ops(q)
    order = _ValueOrder(model, q)
    checked = 0
    satisfied = 0

    def holds(relation, lhs, rhs):
        return lhs == rhs if relation == "eq" else order.leq(lhs, rhs)

    for assignment in assignments:
        checked += 1
        ok = True
        for relation, program in programs[:-1]:
            lhs, rhs = run_program(program, ops, assignment)
            if not holds(relation, lhs, rhs):
                ok = False
                break
        if not ok:
            continue
        satisfied += 1
        relation, program = programs[-1]
        lhs, rhs = run_program(program, ops, assignment)
        if not holds(relation, lhs, rhs):
            witness = {v: model.format_value(model.from_int(a, q))
                       for v, a in zip(claw.variables, assignment)}
            return CheckReport(
                name=claw.name, passed=False, checked=checked,
                statement=claw.statement(), counterexample=witness,
                lhs_value=model.format_value(model.from_int(lhs, q)),
                rhs_value=model.format_value(model.from_int(rhs, q)),
                premises_satisfied=satisfied, note=sampler.describe())
    return CheckReport(name=claw.name, passed=True, checked=checked,
                       statement=claw.statement(), premises_satisfied=satisfied,
                       note=_no_counterexample_note(sampler, checked))


def sample_check(model: Model, laws, sampler) -> list[CheckReport]:
    """Run a list of (conditional) laws against one model with one sampler."""
    reports = []
    for law in laws:
        if isinstance(law, Law):
            reports.append(check_law_sampled(model, law, sampler))
        else:
            reports.append(check_conditional_law_sampled(model, law, sampler))
    return reports


# ---------------------------------------------------------------------------
# Structural facts about the paired models


def pos_divergence_witness(denominator: int = 2):
    """A point where the two [-1,1]^2 structures disagree on ^+.

    Scans the grid lexicographically; the witness always has a negative
    second coordinate, since <a,b>^+ keeps b in one model and clamps it to
    max(0,b) in the other.
    """
    qmv_pos = RSTAR_QMV.ops().pos
    qw_pos = RSTAR_QW.ops().pos
    q = denominator
    for a in range(-q, q + 1):
        for b in range(-q, q + 1):
            point = (Fraction(a, q), Fraction(b, q))
            if qmv_pos(point) != qw_pos(point):
                return point, qmv_pos(point), qw_pos(point)
    return None


def arrow_transport_agrees(denominator: int = 2) -> bool:
    """Pointwise check that reading the additive model implicatively
    (arrow(x,y) := plus(neg(x), y)) reproduces the qw model's arrow."""
    plus_ = RSTAR_QMV.ops().binary
    neg_ = RSTAR_QMV.ops().neg
    arrow_ = RSTAR_QW.ops().binary
    points = [(Fraction(a, denominator), Fraction(b, denominator))
              for a in range(-denominator, denominator + 1)
              for b in range(-denominator, denominator + 1)]
    return all(plus_(neg_(p), r) == arrow_(p, r)
               for p in points for r in points)
