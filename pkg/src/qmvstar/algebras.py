"""Finite algebras as operation tables, and exhaustive law checking.

An algebra of kind mv/qmv carries a binary table `plus`; kinds w/qw carry
`arrow`.  All kinds carry `neg` and the constant `one`; mv/qmv additionally
carry `zero`, and the quasi kinds qmv/qw carry primitive `pos`/`negpart`
tables.  Tables are tuples of element indices and immutable after load.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import NamedTuple

from . import terms
from .terms import (ADDITIVE, IMPLICATIVE, KINDS, QUASI, Law, ConditionalLaw,
                    Program, Term, compile_terms, run_program, term_str)


class Element(NamedTuple):
    """Carrier member: position in the carrier list plus its display name."""

    index: int
    name: str


class AlgebraError(Exception):
    """Structural problem with an algebra (bad kind, bad table, ...)."""


class AlgebraFormatError(AlgebraError):
    """Parse error in the algebra file format, with 1-based position."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class FiniteAlgebra:
    """Immutable operation-table algebra over an ordered finite carrier."""

    kind: str
    names: tuple[str, ...]
    binary_table: tuple[tuple[int, ...], ...]  # plus (mv/qmv) or arrow (w/qw)
    neg_table: tuple[int, ...]
    one: int
    zero: int | None = None
    pos_table: tuple[int, ...] | None = None
    negpart_table: tuple[int, ...] | None = None
    label: str = ""

    def __post_init__(self):
        n = len(self.names)
        if self.kind not in KINDS:
            raise AlgebraError(f"unknown kind {self.kind!r}")
        if len(set(self.names)) != n:
            raise AlgebraError("duplicate element names")
        if len(self.binary_table) != n or any(len(r) != n for r in self.binary_table):
            raise AlgebraError("binary table is not |carrier| x |carrier|")
        for table in (self.neg_table, self.pos_table, self.negpart_table):
            if table is not None and len(table) != n:
                raise AlgebraError("unary table length differs from carrier size")
        for value in itertools.chain(
                itertools.chain.from_iterable(self.binary_table),
                self.neg_table,
                self.pos_table or (), self.negpart_table or (),
                (self.one,), (self.zero,) if self.zero is not None else ()):
            if not 0 <= value < n:
                raise AlgebraError(f"table entry {value} outside carrier")
        if self.kind in QUASI:
            if self.pos_table is None or self.negpart_table is None:
                raise AlgebraError(f"kind {self.kind} requires pos and negpart tables")
        else:
            if self.pos_table is not None or self.negpart_table is not None:
                raise AlgebraError(f"kind {self.kind} must not carry pos/negpart tables")
        if self.kind in ADDITIVE:
            if self.zero is None:
                raise AlgebraError(f"kind {self.kind} requires the constant 0")
        elif self.zero is not None:
            raise AlgebraError(f"kind {self.kind} must not carry a stored 0")

    # -- basic views ---------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.names)

    def elements(self) -> tuple[Element, ...]:
        return tuple(Element(i, n) for i, n in enumerate(self.names))

    def element(self, name: str) -> Element:
        try:
            return Element(self.names.index(name), name)
        except ValueError:
            raise AlgebraError(f"no element named {name!r}") from None

    # -- primitive operations on indices -------------------------------------

    def binary(self, a: int, b: int) -> int:
        return self.binary_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def pos(self, a: int) -> int:
        if self.pos_table is None:
            raise AlgebraError(f"kind {self.kind} has no primitive pos")
        return self.pos_table[a]

    def negpart(self, a: int) -> int:
        if self.negpart_table is None:
            raise AlgebraError(f"kind {self.kind} has no primitive negpart")
        return self.negpart_table[a]


class _AlgebraOps:
    """Adapter giving `run_program` the algebra's primitive operations."""

    __slots__ = ("binary", "neg", "pos", "negpart", "one", "zero")

    def __init__(self, alg: FiniteAlgebra):
        self.binary = alg.binary
        self.neg = alg.neg
        self.pos = alg.pos if alg.pos_table is not None else None
        self.negpart = alg.negpart if alg.negpart_table is not None else None
        self.one = alg.one
        self.zero = alg.zero


# ---------------------------------------------------------------------------
# File format


def load_algebra(path) -> FiniteAlgebra:
    with open(path, "r", encoding="utf-8") as handle:
        return loads_algebra(handle.read(), label=str(path))


def loads_algebra(text: str, label: str = "<string>") -> FiniteAlgebra:
    """Parse the line-oriented algebra format (see the package README)."""
    kind = None
    names: tuple[str, ...] = ()
    index: dict[str, int] = {}
    consts: dict[str, int] = {}
    unary: dict[str, tuple[int, ...]] = {}
    binary_rows: list[tuple[int, ...]] = []
    binary_name = None

    lines = text.splitlines()
    pending_rows = 0

    def lookup(token: str, lineno: int, col: int) -> int:
        if token not in index:
            raise AlgebraFormatError(f"unknown element {token!r}", lineno, col)
        return index[token]

    def strip_comment(raw: str) -> str:
        cut = raw.find("#")
        return raw if cut < 0 else raw[:cut]

    lineno = 0
    it = iter(range(len(lines)))
    for lineno_0 in it:
        lineno = lineno_0 + 1
        line = strip_comment(lines[lineno_0]).strip()
        if not line:
            continue
        if pending_rows:
            tokens = line.split()
            if len(tokens) != len(names):
                raise AlgebraFormatError(
                    f"table row has {len(tokens)} entries, expected {len(names)}",
                    lineno)
            row = []
            for pos_i, token in enumerate(tokens):
                row.append(lookup(token, lineno, pos_i + 1))
            binary_rows.append(tuple(row))
            pending_rows -= 1
            continue
        if ":" not in line:
            raise AlgebraFormatError("expected 'key: value'", lineno)
        key, _, rest = line.partition(":")
        key = key.strip()
        rest = rest.strip()
        if key == "kind":
            if rest not in KINDS:
                raise AlgebraFormatError(f"unknown kind {rest!r}", lineno)
            kind = rest
        elif key == "elements":
            tokens = rest.split()
            if not tokens:
                raise AlgebraFormatError("empty carrier", lineno)
            if len(set(tokens)) != len(tokens):
                raise AlgebraFormatError("duplicate element names", lineno)
            names = tuple(tokens)
            index = {n: i for i, n in enumerate(names)}
        elif key in ("const 1", "const 0"):
            if not names:
                raise AlgebraFormatError("constants must follow 'elements:'", lineno)
            consts[key[-1]] = lookup(rest, lineno, len(key) + 2)
        elif key in ("op plus", "op arrow"):
            if not names:
                raise AlgebraFormatError("tables must follow 'elements:'", lineno)
            if binary_name is not None:
                raise AlgebraFormatError("second binary table", lineno)
            binary_name = key.split()[1]
            pending_rows = len(names)
            if rest:
                raise AlgebraFormatError("table rows start on the next line", lineno)
        elif key in ("op neg", "op pos", "op negpart"):
            if not names:
                raise AlgebraFormatError("tables must follow 'elements:'", lineno)
            tokens = rest.split()
            if len(tokens) != len(names):
                raise AlgebraFormatError(
                    f"unary table has {len(tokens)} entries, expected {len(names)}",
                    lineno)
            unary[key.split()[1]] = tuple(
                lookup(token, lineno, i + 1) for i, token in enumerate(tokens))
        else:
            raise AlgebraFormatError(f"unknown key {key!r}", lineno)

    if kind is None:
        raise AlgebraFormatError("missing 'kind:' line", lineno or 1)
    if not names:
        raise AlgebraFormatError("missing 'elements:' line", lineno or 1)
    if pending_rows:
        raise AlgebraFormatError(
            f"binary table is missing {pending_rows} row(s)", lineno or 1)

    expected_binary = "plus" if kind in ADDITIVE else "arrow"
    if binary_name is None:
        raise AlgebraFormatError(f"missing table {expected_binary}", lineno or 1)
    if binary_name != expected_binary:
        raise AlgebraFormatError(
            f"kind {kind} uses op {expected_binary}, not {binary_name}", lineno or 1)
    if "neg" not in unary:
        raise AlgebraFormatError("missing table neg", lineno or 1)
    for name in ("pos", "negpart"):
        if kind in QUASI and name not in unary:
            raise AlgebraFormatError(f"missing table {name}", lineno or 1)
        if kind not in QUASI and name in unary:
            raise AlgebraFormatError(f"kind {kind} must not carry table {name}", lineno or 1)
    if "1" not in consts:
        raise AlgebraFormatError("missing 'const 1:'", lineno or 1)
    if kind in ADDITIVE and "0" not in consts:
        raise AlgebraFormatError("missing 'const 0:'", lineno or 1)
    if kind in IMPLICATIVE and "0" in consts:
        raise AlgebraFormatError(f"kind {kind} must not declare 'const 0:'", lineno or 1)

    return FiniteAlgebra(
        kind=kind,
        names=names,
        binary_table=tuple(binary_rows),
        neg_table=unary["neg"],
        one=consts["1"],
        zero=consts.get("0"),
        pos_table=unary.get("pos"),
        negpart_table=unary.get("negpart"),
        label=label,
    )


def dumps_algebra(alg: FiniteAlgebra) -> str:
    """Serialise back to the file format (inverse of `loads_algebra`)."""
    out = [f"kind: {alg.kind}", f"elements: {' '.join(alg.names)}"]
    out.append(f"const 1: {alg.names[alg.one]}")
    if alg.zero is not None:
        out.append(f"const 0: {alg.names[alg.zero]}")
    op = "plus" if alg.kind in ADDITIVE else "arrow"
    out.append(f"op {op}:")
    for row in alg.binary_table:
        out.append(" ".join(alg.names[i] for i in row))
    out.append("op neg: " + " ".join(alg.names[i] for i in alg.neg_table))
    if alg.pos_table is not None:
        out.append("op pos: " + " ".join(alg.names[i] for i in alg.pos_table))
    if alg.negpart_table is not None:
        out.append("op negpart: " + " ".join(alg.names[i] for i in alg.negpart_table))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Term evaluation and law checking


@dataclass(frozen=True)
class CheckReport:
    """Outcome of checking one (conditional) law on one structure."""

    name: str
    passed: bool
    checked: int
    statement: str = ""
    counterexample: dict | None = None
    lhs_value: str | None = None
    rhs_value: str | None = None
    premises_satisfied: int | None = None
    note: str = ""

    def __str__(self) -> str:
        head = f"{self.name}: {'pass' if self.passed else 'FAIL'} ({self.checked} assignments"
        if self.premises_satisfied is not None:
            head += f", {self.premises_satisfied} with premises satisfied"
        head += ")"
        if not self.passed and self.counterexample is not None:
            assign = ", ".join(f"{k}={v}" for k, v in self.counterexample.items())
            head += f" at {assign}: lhs={self.lhs_value}, rhs={self.rhs_value}"
        if self.note:
            head += f" [{self.note}]"
        return head


def eval_term(alg: FiniteAlgebra, term: Term, assignment: dict[str, Element | str]) -> Element:
    """Evaluate one term under a name->element assignment."""
    resolved = {}
    for key, val in assignment.items():
        resolved[key] = val.index if isinstance(val, Element) else alg.element(val).index
    names = tuple(sorted(resolved))
    program = compile_terms([term], alg.kind, names)
    ops = _AlgebraOps(alg)
    (result,) = run_program(program, ops, tuple(resolved[n] for n in names))
    return Element(result, alg.names[result])


@functools.lru_cache(maxsize=None)
def _law_program(law: Law, kind: str) -> Program:
    return compile_terms([law.lhs, law.rhs], kind, law.variables)


def check_law(alg: FiniteAlgebra, law: Law) -> CheckReport:
    """Exhaustively check an equation over all |carrier|^arity assignments.

    Assignments are enumerated in lexicographic order of carrier indices, so
    a failing report always carries the first counterexample.
    """
    program = _law_program(law, alg.kind)
    ops = _AlgebraOps(alg)
    checked = 0
    for assignment in itertools.product(range(alg.size), repeat=len(law.variables)):
        checked += 1
        lhs, rhs = run_program(program, ops, assignment)
        if lhs != rhs:
            return CheckReport(
                name=law.name, passed=False, checked=checked,
                statement=law.statement(),
                counterexample={v: alg.names[i]
                                for v, i in zip(law.variables, assignment)},
                lhs_value=alg.names[lhs], rhs_value=alg.names[rhs])
    return CheckReport(name=law.name, passed=True, checked=checked,
                       statement=law.statement())


def check_theory(alg: FiniteAlgebra, laws: tuple[Law, ...]) -> list[CheckReport]:
    for law in laws:
        if law.kind != alg.kind:
            raise AlgebraError(
                f"law {law.name} targets kind {law.kind}, algebra is {alg.kind}")
    return [check_law(alg, law) for law in laws]


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)


@functools.lru_cache(maxsize=None)
def _claw_programs(claw: ConditionalLaw, kind: str):
    atoms = list(claw.premises) + [claw.conclusion]
    programs = []
    for atom in atoms:
        programs.append((atom.relation,
                         compile_terms([atom.lhs, atom.rhs], kind, claw.variables)))
    return programs[:-1], programs[-1]


@functools.lru_cache(maxsize=None)
def _leq_program(kind: str) -> Program:
    # x <= y iff x v y = 0 o y, where o is the kind's binary operation
    lhs = terms.vee(terms.x, terms.y)
    rhs = (terms.plus if kind in ADDITIVE else terms.arrow)(terms.ZERO, terms.y)
    return compile_terms([lhs, rhs], kind, ("x", "y"))


@functools.lru_cache(maxsize=None)
def leq_matrix(alg: FiniteAlgebra) -> tuple[tuple[bool, ...], ...]:
    """Memoised order relation; safe because algebras are immutable."""
    program = _leq_program(alg.kind)
    ops = _AlgebraOps(alg)
    rows = []
    for a in range(alg.size):
        row = []
        for b in range(alg.size):
            join, reg = run_program(program, ops, (a, b))
            row.append(join == reg)
        rows.append(tuple(row))
    return tuple(rows)


def leq(alg: FiniteAlgebra, a: Element | str, b: Element | str) -> bool:
    ai = a.index if isinstance(a, Element) else alg.element(a).index
    bi = b.index if isinstance(b, Element) else alg.element(b).index
    return leq_matrix(alg)[ai][bi]


def check_conditional_law(alg: FiniteAlgebra, claw: ConditionalLaw) -> CheckReport:
    """Check premises -> conclusion over all assignments; vacuous passes count."""
    premise_programs, conclusion = _claw_programs(claw, alg.kind)
    ops = _AlgebraOps(alg)
    order = leq_matrix(alg)
    checked = 0
    satisfied = 0

    def holds(relation: str, lhs: int, rhs: int) -> bool:
        if relation == "eq":
            return lhs == rhs
        return order[lhs][rhs]

    for assignment in itertools.product(range(alg.size), repeat=len(claw.variables)):
        checked += 1
        ok = True
        for relation, program in premise_programs:
            lhs, rhs = run_program(program, ops, assignment)
            if not holds(relation, lhs, rhs):
                ok = False
                break
        if not ok:
            continue
        satisfied += 1
        relation, program = conclusion
        lhs, rhs = run_program(program, ops, assignment)
        if not holds(relation, lhs, rhs):
            return CheckReport(
                name=claw.name, passed=False, checked=checked,
                statement=claw.statement(),
                counterexample={v: alg.names[i]
                                for v, i in zip(claw.variables, assignment)},
                lhs_value=alg.names[lhs], rhs_value=alg.names[rhs],
                premises_satisfied=satisfied)
    return CheckReport(name=claw.name, passed=True, checked=checked,
                       statement=claw.statement(), premises_satisfied=satisfied)


# ---------------------------------------------------------------------------
# Derived structure


def derived_zero(alg: FiniteAlgebra) -> Element:
    """The element 1->1 of a w/qw algebra; requires a constant diagonal."""
    if alg.kind not in IMPLICATIVE:
        raise AlgebraError(f"derived zero only defined for w/qw kinds, not {alg.kind}")
    diag = {alg.binary(a, a) for a in range(alg.size)}
    if len(diag) != 1:
        raise AlgebraError(
            "diagonal x->x is not constant; not a quasi-Wajsberg* algebra")
    zero = alg.binary(alg.one, alg.one)
    return Element(zero, alg.names[zero])


def zero_index(alg: FiniteAlgebra) -> int:
    if alg.zero is not None:
        return alg.zero
    return derived_zero(alg).index


def regularize(alg: FiniteAlgebra, a: int) -> int:
    """0 o a, the regularization of a."""
    return alg.binary(zero_index(alg), a)


def regular_set(alg: FiniteAlgebra) -> tuple[Element, ...]:
    """Fixed points of a |-> 0 o a."""
    return tuple(Element(a, alg.names[a]) for a in range(alg.size)
                 if regularize(alg, a) == a)


def is_flat(alg: FiniteAlgebra) -> bool:
    return zero_index(alg) == alg.one


def is_linear(alg: FiniteAlgebra) -> bool:
    order = leq_matrix(alg)
    return all(order[a][b] or order[b][a]
               for a in range(alg.size) for b in range(alg.size))
