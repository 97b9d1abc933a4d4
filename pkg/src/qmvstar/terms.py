"""Metavariable terms over the four algebra signatures.

A term is a tree whose leaves are metavariables (x, y, z, u, v, t) or the
constants 0 and 1, and whose internal nodes are either signature operations
(plus, arrow, neg, pos, negpart) or derived-operation macros (vee, wedge).
Which nodes are primitive and which are macros depends on the target kind:

    kind   primitive ops                 macros
    mv     plus, neg, 0, 1               pos, negpart, vee, wedge
    qmv    plus, neg, pos, negpart, 0, 1 vee, wedge
    w      arrow, neg, 1                 pos, negpart, vee, wedge, 0
    qw     arrow, neg, pos, negpart, 1   vee, wedge, 0

Terms are hash-consed, so structurally equal terms are the same object and
equality is identity.  `expand` rewrites every macro into primitives for a
given kind; the result is a fixpoint (expanding twice equals expanding once).
"""

from __future__ import annotations

import weakref
from typing import NamedTuple

KINDS = ("mv", "qmv", "w", "qw")

# kind subsets used throughout: additive signatures carry plus/0,
# implicative signatures carry arrow; quasi kinds carry primitive pos/negpart.
ADDITIVE = ("mv", "qmv")
IMPLICATIVE = ("w", "qw")
QUASI = ("qmv", "qw")


class Term:
    """Interned term node; build only through the module factories."""

    __slots__ = ("op", "args", "name", "_hash", "__weakref__")

    def __init__(self, op: str, args: tuple, name: str | None):
        self.op = op
        self.args = args
        self.name = name
        self._hash = hash((op, name) + tuple(id(a) for a in args))

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Term({term_str(self)!r})"


_INTERN: "weakref.WeakValueDictionary[tuple, Term]" = weakref.WeakValueDictionary()


def _mk(op: str, args: tuple = (), name: str | None = None) -> Term:
    key = (op, name) + tuple(id(a) for a in args)
    node = _INTERN.get(key)
    if node is None:
        node = Term(op, args, name)
        _INTERN[key] = node
    return node


def var(name: str) -> Term:
    return _mk("var", name=name)


ONE = _mk("one")
ZERO = _mk("zero")


def plus(a: Term, b: Term) -> Term:
    return _mk("plus", (a, b))


def arrow(a: Term, b: Term) -> Term:
    return _mk("arrow", (a, b))


def neg(a: Term) -> Term:
    return _mk("neg", (a,))


def pos(a: Term) -> Term:
    return _mk("pos", (a,))


def negpart(a: Term) -> Term:
    return _mk("negpart", (a,))


def vee(a: Term, b: Term) -> Term:
    return _mk("vee", (a, b))


def wedge(a: Term, b: Term) -> Term:
    return _mk("wedge", (a, b))


NEG_ONE = neg(ONE)  # the constant -1 is always the derived term neg(1)

# shorthand metavariables for catalog definitions
x, y, z, u, v, t = (var(n) for n in "xyzuvt")


def variables(term: Term) -> tuple[str, ...]:
    """Metavariable names occurring in `term`, sorted."""
    seen: set[str] = set()
    stack = [term]
    while stack:
        node = stack.pop()
        if node.op == "var":
            seen.add(node.name)
        else:
            stack.extend(node.args)
    return tuple(sorted(seen))


def _vee_additive(a: Term, b: Term) -> Term:
    # x v y = (x+ (+) (-x+ (+) y+)+) (+) (x- (+) (-x- (+) y-)+)
    left = plus(pos(a), pos(plus(neg(pos(a)), pos(b))))
    right = plus(negpart(a), pos(plus(neg(negpart(a)), negpart(b))))
    return plus(left, right)


def _vee_implicative(a: Term, b: Term) -> Term:
    # x v y = ((x+ -> y+)+ -> (~x)-) -> ((y- -> x-)- -> x-)
    left = arrow(pos(arrow(pos(a), pos(b))), negpart(neg(a)))
    right = arrow(negpart(arrow(negpart(b), negpart(a))), negpart(a))
    return arrow(left, right)


def expand(term: Term, kind: str) -> Term:
    """Rewrite macros into the primitive signature of `kind`, bottom-up."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    memo: dict[Term, Term] = {}

    def go(node: Term) -> Term:
        hit = memo.get(node)
        if hit is not None:
            return hit
        args = tuple(go(a) for a in node.args)
        op = node.op
        if op == "vee":
            if kind in ADDITIVE:
                out = go(_vee_additive(*args))
            else:
                out = go(_vee_implicative(*args))
        elif op == "wedge":
            out = go(neg(vee(neg(args[0]), neg(args[1]))))
        elif op == "zero" and kind in IMPLICATIVE:
            out = arrow(ONE, ONE)
        elif op == "pos" and kind == "mv":
            out = go(plus(ONE, plus(NEG_ONE, args[0])))  # 1 (+) (-1 (+) x)
        elif op == "negpart" and kind == "mv":
            out = go(plus(NEG_ONE, plus(ONE, args[0])))
        elif op == "pos" and kind == "w":
            out = arrow(arrow(args[0], ONE), ONE)  # (x -> 1) -> 1
        elif op == "negpart" and kind == "w":
            out = arrow(arrow(args[0], neg(ONE)), neg(ONE))
        elif args == node.args:
            out = node
        else:
            out = _mk(op, args, node.name)
        memo[node] = out
        return out

    out = go(term)
    _check_signature(out, kind)
    return out


def _check_signature(term: Term, kind: str) -> None:
    stack = [term]
    while stack:
        node = stack.pop()
        op = node.op
        if op == "plus" and kind not in ADDITIVE:
            raise ValueError(f"operation plus not in {kind} signature")
        if op == "arrow" and kind not in IMPLICATIVE:
            raise ValueError(f"operation arrow not in {kind} signature")
        if op in ("pos", "negpart") and kind not in QUASI:
            raise ValueError(f"operation {op} unexpected after expansion for {kind}")
        if op == "zero" and kind in IMPLICATIVE:
            raise ValueError(f"constant 0 unexpected after expansion for {kind}")
        stack.extend(node.args)


_PRINT = {
    "plus": " + ",
    "arrow": " -> ",
    "vee": r" \/ ",
    "wedge": r" /\ ",
}


def term_str(term: Term) -> str:
    """Render a term; binary subterms are always parenthesised."""
    op = term.op
    if op == "var":
        return term.name
    if op == "one":
        return "1"
    if op == "zero":
        return "0"
    if op == "neg":
        return f"-{_atom_str(term.args[0])}"
    if op == "pos":
        return f"{_atom_str(term.args[0])}^+"
    if op == "negpart":
        return f"{_atom_str(term.args[0])}^-"
    a, b = term.args
    return f"{_atom_str(a)}{_PRINT[op]}{_atom_str(b)}"


def _atom_str(term: Term) -> str:
    if term.op in ("var", "one", "zero", "neg", "pos", "negpart"):
        return term_str(term)
    return f"({term_str(term)})"


# ---------------------------------------------------------------------------
# Laws


class Law:
    """A named equation between two terms, targeting one algebra kind.

    `base` groups split multi-equation axioms (e.g. QW*5a..d share base QW*5).
    """

    __slots__ = ("name", "base", "kind", "lhs", "rhs", "variables")

    def __init__(self, name: str, kind: str, lhs: Term, rhs: Term,
                 base: str | None = None):
        self.name = name
        self.base = base if base is not None else name
        self.kind = kind
        self.lhs = lhs
        self.rhs = rhs
        self.variables = tuple(sorted(variables_set(lhs) | variables_set(rhs)))

    def statement(self) -> str:
        return f"{term_str(self.lhs)} = {term_str(self.rhs)}"

    def __repr__(self) -> str:
        return f"Law({self.name}: {self.statement()})"


class Atom(NamedTuple):
    """One premise or conclusion: an equation or an order fact s <= t."""

    relation: str  # "eq" or "leq"
    lhs: Term
    rhs: Term

    def statement(self) -> str:
        sep = " = " if self.relation == "eq" else " <= "
        return term_str(self.lhs) + sep + term_str(self.rhs)


def eq(lhs: Term, rhs: Term) -> Atom:
    return Atom("eq", lhs, rhs)


def le(lhs: Term, rhs: Term) -> Atom:
    return Atom("leq", lhs, rhs)


class ConditionalLaw:
    """If every premise holds under an assignment, the conclusion must too."""

    __slots__ = ("name", "base", "kind", "premises", "conclusion", "variables")

    def __init__(self, name: str, kind: str, premises: tuple[Atom, ...],
                 conclusion: Atom, base: str | None = None):
        self.name = name
        self.base = base if base is not None else name
        self.kind = kind
        self.premises = premises
        self.conclusion = conclusion
        names: set[str] = set()
        for atom in premises + (conclusion,):
            names |= variables_set(atom.lhs) | variables_set(atom.rhs)
        self.variables = tuple(sorted(names))

    def statement(self) -> str:
        if not self.premises:
            return self.conclusion.statement()
        pres = " & ".join(a.statement() for a in self.premises)
        return f"{pres} ==> {self.conclusion.statement()}"

    def __repr__(self) -> str:
        return f"ConditionalLaw({self.name}: {self.statement()})"


# ---------------------------------------------------------------------------
# Compilation to flat programs.
#
# check_law and the model samplers evaluate one term pair at up to ~10^6
# assignments; walking the tree each time would dominate the runtime.  A
# compiled program is a topologically ordered list of instructions over the
# shared (hash-consed) DAG; shared subterms are computed once per assignment.

INSTR_VAR = 0
INSTR_ONE = 1
INSTR_ZERO = 2
INSTR_NEG = 3
INSTR_POS = 4
INSTR_NEGPART = 5
INSTR_BIN = 6  # plus or arrow, whichever the kind's binary operation is


class Program:
    """Straight-line evaluation plan for one or more terms of one kind."""

    __slots__ = ("kind", "variables", "instructions", "roots")

    def __init__(self, kind: str, variables: tuple[str, ...],
                 instructions: list[tuple], roots: tuple[int, ...]):
        self.kind = kind
        self.variables = variables
        self.instructions = instructions
        self.roots = roots


def compile_terms(terms: list[Term], kind: str,
                  variables: tuple[str, ...] | None = None) -> Program:
    """Expand each term for `kind` and compile them into one shared program.

    `variables` fixes the assignment layout (defaults to the sorted union of
    the terms' metavariables).
    """
    expanded = [expand(term, kind) for term in terms]
    if variables is None:
        names: set[str] = set()
        for term in expanded:
            names.update(variables_set(term))
        variables = tuple(sorted(names))
    slot = {name: i for i, name in enumerate(variables)}

    index: dict[Term, int] = {}
    instructions: list[tuple] = []

    def emit(node: Term) -> int:
        got = index.get(node)
        if got is not None:
            return got
        op = node.op
        if op == "var":
            if node.name not in slot:
                raise KeyError(f"metavariable {node.name} unbound")
            instr = (INSTR_VAR, slot[node.name])
        elif op == "one":
            instr = (INSTR_ONE,)
        elif op == "zero":
            instr = (INSTR_ZERO,)
        elif op == "neg":
            instr = (INSTR_NEG, emit(node.args[0]))
        elif op == "pos":
            instr = (INSTR_POS, emit(node.args[0]))
        elif op == "negpart":
            instr = (INSTR_NEGPART, emit(node.args[0]))
        else:  # plus / arrow
            instr = (INSTR_BIN, emit(node.args[0]), emit(node.args[1]))
        instructions.append(instr)
        index[node] = len(instructions) - 1
        return index[node]

    roots = tuple(emit(term) for term in expanded)
    return Program(kind, variables, instructions, roots)


def variables_set(term: Term) -> set[str]:
    names: set[str] = set()
    stack = [term]
    while stack:
        node = stack.pop()
        if node.op == "var":
            names.add(node.name)
        else:
            stack.extend(node.args)
    return names


def run_program(program: Program, ops, assignment: tuple) -> tuple:
    """Evaluate `program` under `assignment` using an ops provider.

    `ops` supplies binary(a, b), neg(a), pos(a), negpart(a) and the constants
    `one`/`zero`; values are opaque to this function.  Returns the values of
    the program's roots.
    """
    values = []
    append = values.append
    binary = ops.binary
    neg_ = ops.neg
    pos_ = ops.pos
    negpart_ = ops.negpart
    for instr in program.instructions:
        code = instr[0]
        if code == INSTR_BIN:
            append(binary(values[instr[1]], values[instr[2]]))
        elif code == INSTR_VAR:
            append(assignment[instr[1]])
        elif code == INSTR_NEG:
            append(neg_(values[instr[1]]))
        elif code == INSTR_POS:
            append(pos_(values[instr[1]]))
        elif code == INSTR_NEGPART:
            append(negpart_(values[instr[1]]))
        elif code == INSTR_ONE:
            append(ops.one)
        else:
            append(ops.zero)
    return tuple(values[r] for r in program.roots)
