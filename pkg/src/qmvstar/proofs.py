"""Proof scripts and the checking kernel.

A script is a numbered list of formulas, each carrying one primitive
justification: an axiom instance (schema id plus explicit substitution), a
hypothesis reference, or one of the three rules

    R1  from phi and phi -> psi            derive (r -> r) -> psi
    R2  from (r -> r) -> (phi -> psi)      derive phi -> psi
    R3  from phi -> psi and chi -> omega   derive (psi -> chi) -> (phi -> omega)

R1's side formula r is a free choice and is recorded in the justification.
R2 requires the consequent to be an implication.  Rule references must point
strictly backwards.  There are no derived-lemma justifications: anything the
generators in `combinators` produce is inlined down to these primitives, so
every script is independently checkable by this kernel alone.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .formulas import Formula, ONE, arrow, formula_str, parse_formula
from .schemas import SCHEMAS_BY_ID, Substitution, apply_substitution


@dataclass(frozen=True)
class AxiomJust:
    schema_id: str
    substitution: tuple[tuple[str, Formula], ...]  # sorted by metavariable

    @staticmethod
    def of(schema_id: str, subst: Substitution) -> "AxiomJust":
        return AxiomJust(schema_id, tuple(sorted(subst.items())))


@dataclass(frozen=True)
class HypJust:
    index: int  # 1-based into the hypothesis list


@dataclass(frozen=True)
class R1Just:
    minor: int  # line proving phi
    major: int  # line proving phi -> psi
    side: Formula  # the chosen r


@dataclass(frozen=True)
class R2Just:
    source: int


@dataclass(frozen=True)
class R3Just:
    first: int
    second: int


Justification = AxiomJust | HypJust | R1Just | R2Just | R3Just


@dataclass(frozen=True)
class ProofLine:
    formula: Formula
    justification: Justification


@dataclass(frozen=True)
class ProofScript:
    lines: tuple[ProofLine, ...]
    hypotheses: tuple[Formula, ...] = ()
    goal: Formula | None = None

    @property
    def theorem(self) -> Formula:
        if not self.lines:
            raise ProofError(0, "empty script has no theorem")
        return self.lines[-1].formula


@dataclass(frozen=True)
class Verified:
    theorem: Formula
    hypotheses: tuple[Formula, ...]
    line_count: int


class ProofError(Exception):
    """Checking failure; `line` is 1-based (0 for script-level problems)."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}" if line else reason)
        self.line = line
        self.reason = reason


def _expect_arrow(formula: Formula, line: int, role: str) -> tuple[Formula, Formula]:
    if formula.tag != "arrow":
        raise ProofError(line, f"{role} must be an implication, got {formula_str(formula)}")
    return formula.args


def check_proof(script: ProofScript) -> Verified:
    """Verify every line's justification; returns the proved theorem.

    The theorem is relative to the script's hypotheses (empty for a proof
    proper).  Any defect raises ProofError naming the line and the expected
    shape.
    """
    hypotheses = script.hypotheses
    lines = script.lines
    if not lines:
        raise ProofError(0, "empty script")
    for number, line in enumerate(lines, start=1):
        just = line.justification
        formula = line.formula
        if isinstance(just, AxiomJust):
            schema = SCHEMAS_BY_ID.get(just.schema_id)
            if schema is None:
                raise ProofError(number, f"unknown schema {just.schema_id!r}")
            subst = dict(just.substitution)
            if set(subst) != set(schema.metavariables):
                raise ProofError(
                    number,
                    f"substitution must bind exactly {{{','.join(schema.metavariables)}}}")
            if apply_substitution(schema.pattern, subst) is not formula:
                raise ProofError(
                    number, f"recorded substitution does not produce the line "
                            f"from schema {just.schema_id}")
        elif isinstance(just, HypJust):
            if not 1 <= just.index <= len(hypotheses):
                raise ProofError(number, f"no hypothesis {just.index}")
            if hypotheses[just.index - 1] is not formula:
                raise ProofError(number, f"line differs from hypothesis {just.index}")
        elif isinstance(just, R1Just):
            _check_backref(number, just.minor)
            _check_backref(number, just.major)
            phi = lines[just.minor - 1].formula
            major = lines[just.major - 1].formula
            antecedent, psi = _expect_arrow(major, number, "R1 major premise")
            if antecedent is not phi:
                raise ProofError(
                    number, "R1 major premise must be (minor premise) -> psi")
            expected = arrow(arrow(just.side, just.side), psi)
            if expected is not formula:
                raise ProofError(
                    number, f"R1 conclusion must be {formula_str(expected)}")
        elif isinstance(just, R2Just):
            _check_backref(number, just.source)
            source = lines[just.source - 1].formula
            diag, body = _expect_arrow(source, number, "R2 premise")
            if diag.tag != "arrow" or diag.args[0] is not diag.args[1]:
                raise ProofError(number, "R2 premise must start with r -> r")
            if body.tag != "arrow":
                raise ProofError(number, "R2 consequent must be an implication")
            if body is not formula:
                raise ProofError(number, f"R2 conclusion must be {formula_str(body)}")
        elif isinstance(just, R3Just):
            _check_backref(number, just.first)
            _check_backref(number, just.second)
            phi, psi = _expect_arrow(lines[just.first - 1].formula, number,
                                     "R3 first premise")
            chi, omega = _expect_arrow(lines[just.second - 1].formula, number,
                                       "R3 second premise")
            expected = arrow(arrow(psi, chi), arrow(phi, omega))
            if expected is not formula:
                raise ProofError(
                    number, f"R3 conclusion must be {formula_str(expected)}")
        else:
            raise ProofError(number, f"unknown justification {just!r}")
    if script.goal is not None and script.goal is not lines[-1].formula:
        raise ProofError(
            len(lines), f"final formula differs from the declared theorem "
                        f"{formula_str(script.goal)}")
    return Verified(lines[-1].formula, hypotheses, len(lines))


def _check_backref(current: int, reference: int) -> None:
    if not 1 <= reference < current:
        raise ProofError(
            current, f"justification cites line {reference}; references must "
                     f"point strictly backwards")


def check_proof_from(hypotheses, script: ProofScript) -> Verified:
    """Verify with the hypothesis list replaced by the given one."""
    replaced = ProofScript(script.lines, tuple(hypotheses), script.goal)
    return check_proof(replaced)


# ---------------------------------------------------------------------------
# Proof file format


class ProofFormatError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


_LINE_RE = re.compile(r"(\d+)\.\s*(.*?)\s*;\s*(.*)")
_HYP_RE = re.compile(r"hyp\s+(\d+):\s*(.*)")


def _parse_justification(text: str, lineno: int) -> Justification:
    parts = text.split()
    if not parts:
        raise ProofFormatError("missing justification", lineno)
    head = parts[0]
    rest = text[len(head):].strip()
    try:
        if head == "ax":
            bits = rest.split(None, 1)
            if not bits:
                raise ProofFormatError("ax needs a schema id", lineno)
            schema_id = bits[0]
            subst: Substitution = {}
            if len(bits) > 1:
                for item in bits[1].split(","):
                    name, sep, value = item.partition(":=")
                    if not sep:
                        raise ProofFormatError(f"bad binding {item.strip()!r}", lineno)
                    subst[name.strip()] = parse_formula(value)
            return AxiomJust.of(schema_id, subst)
        if head == "hyp":
            return HypJust(int(rest))
        if head == "r1":
            match = re.fullmatch(r"(\d+)\s+(\d+)\s+r:=(.*)", rest)
            if not match:
                raise ProofFormatError("r1 needs '<i> <j> r:=<formula>'", lineno)
            return R1Just(int(match.group(1)), int(match.group(2)),
                          parse_formula(match.group(3)))
        if head == "r2":
            return R2Just(int(rest))
        if head == "r3":
            i, j = rest.split()
            return R3Just(int(i), int(j))
    except ProofFormatError:
        raise
    except ValueError as exc:
        raise ProofFormatError(f"bad justification {text!r}: {exc}", lineno) from None
    raise ProofFormatError(f"unknown justification {head!r}", lineno)


def parse_proof(text: str) -> ProofScript:
    goal = None
    hypotheses: list[Formula] = []
    lines: list[ProofLine] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        cut = raw.find("#")
        line = (raw if cut < 0 else raw[:cut]).strip()
        if not line:
            continue
        if line.startswith("theorem:"):
            if goal is not None:
                raise ProofFormatError("duplicate theorem line", lineno)
            goal = parse_formula(line[len("theorem:"):])
            continue
        match = _HYP_RE.fullmatch(line)
        if match:
            index = int(match.group(1))
            if index != len(hypotheses) + 1:
                raise ProofFormatError(
                    f"hypotheses must be numbered in order; expected "
                    f"{len(hypotheses) + 1}, got {index}", lineno)
            hypotheses.append(parse_formula(match.group(2)))
            continue
        match = _LINE_RE.fullmatch(line)
        if match:
            number = int(match.group(1))
            if number != len(lines) + 1:
                raise ProofFormatError(
                    f"lines must be numbered in order; expected "
                    f"{len(lines) + 1}, got {number}", lineno)
            formula = parse_formula(match.group(2))
            lines.append(ProofLine(formula, _parse_justification(match.group(3), lineno)))
            continue
        raise ProofFormatError(f"unrecognised line {line!r}", lineno)
    return ProofScript(tuple(lines), tuple(hypotheses), goal)


def _format_justification(just: Justification) -> str:
    if isinstance(just, AxiomJust):
        if not just.substitution:
            return f"ax {just.schema_id}"
        bindings = ", ".join(f"{name}:={formula_str(value)}"
                             for name, value in just.substitution)
        return f"ax {just.schema_id} {bindings}"
    if isinstance(just, HypJust):
        return f"hyp {just.index}"
    if isinstance(just, R1Just):
        return f"r1 {just.minor} {just.major} r:={formula_str(just.side)}"
    if isinstance(just, R2Just):
        return f"r2 {just.source}"
    return f"r3 {just.first} {just.second}"


def format_proof(script: ProofScript) -> str:
    out = []
    if script.goal is not None:
        out.append(f"theorem: {formula_str(script.goal)}")
    for index, hyp in enumerate(script.hypotheses, start=1):
        out.append(f"hyp {index}: {formula_str(hyp)}")
    for number, line in enumerate(script.lines, start=1):
        out.append(f"{number}. {formula_str(line.formula)} ; "
                   f"{_format_justification(line.justification)}")
    return "\n".join(out) + "\n"


def load_proof(path) -> ProofScript:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_proof(handle.read())
