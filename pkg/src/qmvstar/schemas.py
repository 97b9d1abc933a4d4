"""Axiom schemas of the proof system and one-sided pattern matching.

Each biconditional axiom contributes two directed schemas (.L is
left-to-right, .R is right-to-left) because the language has no
biconditional connective; the two single-direction axioms and the doubled
pair contribute the rest, for 22 schemas in total:

    Q1..Q8 x 2, Q9, Q10, Q11a.L/.R, Q11b.L/.R
"""

from __future__ import annotations

from dataclasses import dataclass

from .formulas import (Formula, ONE, arrow, neg, negpart, pos, var, vee)

p, q, r = var("p"), var("q"), var("r")


@dataclass(frozen=True)
class AxiomSchema:
    id: str
    base: str
    pattern: Formula
    metavariables: tuple[str, ...]


def _directed(base: str, lhs: Formula, rhs: Formula, metavariables):
    return (AxiomSchema(f"{base}.L", base, arrow(lhs, rhs), tuple(metavariables)),
            AxiomSchema(f"{base}.R", base, arrow(rhs, lhs), tuple(metavariables)))


def _single(base: str, pattern: Formula, metavariables):
    return (AxiomSchema(base, base, pattern, tuple(metavariables)),)


SCHEMAS: tuple[AxiomSchema, ...] = (
    _directed("Q1", arrow(p, q), arrow(neg(q), neg(p)), "pq")
    + _directed("Q2", ONE, arrow(arrow(ONE, p), ONE), "p")
    + _directed("Q3", p, arrow(arrow(q, q), p), "pq")
    + _directed("Q4", arrow(p, q),
                arrow(arrow(pos(q), negpart(p)), arrow(pos(p), negpart(q))), "pq")
    + _directed("Q5", neg(arrow(p, q)), arrow(q, p), "pq")
    + _directed("Q6", pos(arrow(p, arrow(neg(p), q))),
                arrow(pos(p), arrow(neg(pos(p)), pos(q))), "pq")
    + _directed("Q7", arrow(p, vee(q, r)), vee(arrow(p, r), arrow(p, q)), "pqr")
    + _directed("Q8", vee(p, vee(q, r)), vee(vee(p, q), r), "pqr")
    + _single("Q9", arrow(arrow(arrow(p, ONE), arrow(arrow(q, ONE), r)),
                          arrow(arrow(q, ONE), arrow(arrow(p, ONE), r))), "pqr")
    + _single("Q10", arrow(p, ONE), "p")
    + _directed("Q11a", arrow(arrow(ONE, ONE), pos(p)),
                arrow(arrow(p, ONE), ONE), "p")
    + _directed("Q11b", arrow(arrow(ONE, ONE), negpart(p)),
                arrow(arrow(p, neg(ONE)), neg(ONE)), "p")
)

SCHEMAS_BY_ID: dict[str, AxiomSchema] = {s.id: s for s in SCHEMAS}

Substitution = dict[str, Formula]


def apply_substitution(pattern: Formula, subst: Substitution) -> Formula:
    """Instantiate a schema pattern; every metavariable must be bound."""
    tag = pattern.tag
    if tag == "var":
        if pattern.name not in subst:
            raise KeyError(f"metavariable {pattern.name} unbound")
        return subst[pattern.name]
    if tag == "one":
        return pattern
    args = tuple(apply_substitution(a, subst) for a in pattern.args)
    if tag == "neg":
        return neg(args[0])
    if tag == "arrow":
        return arrow(args[0], args[1])
    if tag == "pos":
        return pos(args[0])
    return negpart(args[0])


def match_schema(schema: AxiomSchema, formula: Formula) -> Substitution | None:
    """One-sided syntactic match: binding must be consistent across repeats."""
    binding: Substitution = {}

    def walk(pattern: Formula, target: Formula) -> bool:
        if pattern.tag == "var":
            bound = binding.get(pattern.name)
            if bound is None:
                binding[pattern.name] = target
                return True
            return bound is target
        if pattern.tag != target.tag:
            return False
        if pattern.tag == "one":
            return True
        return all(walk(pa, ta) for pa, ta in zip(pattern.args, target.args))

    if walk(schema.pattern, formula):
        return binding
    return None


def find_axiom_instance(formula: Formula):
    """First (schema, substitution) whose instance is `formula`, or None."""
    for schema in SCHEMAS:
        subst = match_schema(schema, formula)
        if subst is not None:
            return schema, subst
    return None
