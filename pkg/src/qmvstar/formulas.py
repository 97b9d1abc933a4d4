"""Formula syntax for the logic: connectives ->, ~, ^+, ^- and constant 1.

Formulas are hash-consed, so structural equality is identity equality; the
proof kernel leans on that for O(1) line comparisons.

Concrete grammar (ASCII):

    variables  [a-z][a-z0-9_]*        constant  1
    postfix    ^+  ^-                 (bind tightest)
    negation   ~
    arrow      ->                     (right-associative)
    macros     \\/  /\\                (looser than ->, left-associative)

`\\/` and `/\\` are parse-time macros: p \\/ q expands to
((p^+ -> q^+)^+ -> (~p)^-) -> ((q^- -> p^-)^- -> p^-) and p /\\ q to
~(~p \\/ ~q).  Printers never emit them, so parse(print(f)) == f.
"""

from __future__ import annotations

import re
import weakref


class Formula:
    """Interned formula node; build only through the module factories."""

    __slots__ = ("tag", "args", "name", "_hash", "__weakref__")

    def __init__(self, tag: str, args: tuple, name: str | None):
        self.tag = tag
        self.args = args
        self.name = name
        self._hash = hash((tag, name) + tuple(id(a) for a in args))

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Formula({formula_str(self)!r})"

    def __str__(self) -> str:
        return formula_str(self)


_INTERN: "weakref.WeakValueDictionary[tuple, Formula]" = weakref.WeakValueDictionary()


def _mk(tag: str, args: tuple = (), name: str | None = None) -> Formula:
    key = (tag, name) + tuple(id(a) for a in args)
    node = _INTERN.get(key)
    if node is None:
        node = Formula(tag, args, name)
        _INTERN[key] = node
    return node


_VAR_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


def var(name: str) -> Formula:
    if not _VAR_RE.match(name):
        raise ValueError(f"bad variable name {name!r}")
    return _mk("var", name=name)


ONE = _mk("one")


def neg(f: Formula) -> Formula:
    return _mk("neg", (f,))


def arrow(f: Formula, g: Formula) -> Formula:
    return _mk("arrow", (f, g))


def pos(f: Formula) -> Formula:
    return _mk("pos", (f,))


def negpart(f: Formula) -> Formula:
    return _mk("negpart", (f,))


def vee(f: Formula, g: Formula) -> Formula:
    """Macro expansion of the join (already in primitive connectives)."""
    left = arrow(pos(arrow(pos(f), pos(g))), negpart(neg(f)))
    right = arrow(negpart(arrow(negpart(g), negpart(f))), negpart(f))
    return arrow(left, right)


def wedge(f: Formula, g: Formula) -> Formula:
    return neg(vee(neg(f), neg(g)))


def variables(f: Formula) -> tuple[str, ...]:
    seen: set[str] = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if node.tag == "var":
            seen.add(node.name)
        else:
            stack.extend(node.args)
    return tuple(sorted(seen))


def subformula_at(f: Formula, path: tuple[int, ...]) -> Formula:
    node = f
    for step in path:
        if step >= len(node.args):
            raise ValueError(f"path {path} leaves the formula at {node}")
        node = node.args[step]
    return node


def replace_at(f: Formula, path: tuple[int, ...], replacement: Formula) -> Formula:
    if not path:
        return replacement
    step, rest = path[0], path[1:]
    if step >= len(f.args):
        raise ValueError(f"path step {step} invalid at {f}")
    args = list(f.args)
    args[step] = replace_at(args[step], rest, replacement)
    return _mk(f.tag, tuple(args), f.name)


def size(f: Formula) -> int:
    total = 0
    stack = [f]
    while stack:
        node = stack.pop()
        total += 1
        stack.extend(node.args)
    return total


# ---------------------------------------------------------------------------
# Printer (minimal parentheses for the grammar above)


def formula_str(f: Formula) -> str:
    tag = f.tag
    if tag == "var":
        return f.name
    if tag == "one":
        return "1"
    if tag == "arrow":
        a, b = f.args
        left = formula_str(a)
        if a.tag == "arrow":
            left = f"({left})"
        return f"{left} -> {formula_str(b)}"
    if tag == "neg":
        (a,) = f.args
        inner = formula_str(a)
        if a.tag == "arrow":
            inner = f"({inner})"
        return f"~{inner}"
    # postfix ^+ / ^-
    (a,) = f.args
    inner = formula_str(a)
    if a.tag in ("arrow", "neg"):
        inner = f"({inner})"
    return inner + ("^+" if tag == "pos" else "^-")


# ---------------------------------------------------------------------------
# Parser


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str):
        super().__init__(f"column {position + 1}: {message}")
        self.position = position
        self.text = text


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<arrow>->)|(?P<vee>\\/)|(?P<wedge>/\\)|(?P<pos>\^\+)"
    r"|(?P<negpart>\^-)|(?P<neg>~)|(?P<lpar>\()|(?P<rpar>\))"
    r"|(?P<one>1)|(?P<var>[a-z][a-z0-9_]*))")


def _tokenize(text: str):
    tokens = []
    index = 0
    while index < len(text):
        match = _TOKEN_RE.match(text, index)
        if match is None or match.lastgroup is None:
            stripped = text[index:].lstrip()
            if not stripped:
                break
            bad = len(text) - len(stripped)
            raise FormulaSyntaxError(f"unexpected character {text[bad]!r}", bad, text)
        tokens.append((match.lastgroup, match.group(match.lastgroup), match.start()))
        index = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def take(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def error(self, message: str):
        kind, _, position = self.peek()
        raise FormulaSyntaxError(message, position, self.text)

    def parse(self) -> Formula:
        f = self.parse_join()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return f

    def parse_join(self) -> Formula:
        f = self.parse_arrow()
        while self.peek()[0] in ("vee", "wedge"):
            kind, _, _ = self.take()
            g = self.parse_arrow()
            f = vee(f, g) if kind == "vee" else wedge(f, g)
        return f

    def parse_arrow(self) -> Formula:
        f = self.parse_unary()
        if self.peek()[0] == "arrow":
            self.take()
            return arrow(f, self.parse_arrow())
        return f

    def parse_unary(self) -> Formula:
        if self.peek()[0] == "neg":
            self.take()
            return neg(self.parse_unary())
        return self.parse_postfix()

    def parse_postfix(self) -> Formula:
        f = self.parse_atom()
        while self.peek()[0] in ("pos", "negpart"):
            kind, _, _ = self.take()
            f = pos(f) if kind == "pos" else negpart(f)
        return f

    def parse_atom(self) -> Formula:
        kind, value, _ = self.peek()
        if kind == "var":
            self.take()
            return var(value)
        if kind == "one":
            self.take()
            return ONE
        if kind == "lpar":
            self.take()
            f = self.parse_join()
            if self.peek()[0] != "rpar":
                self.error("expected ')'")
            self.take()
            return f
        self.error("expected a variable, '1', '~', or '('")


def parse_formula(text: str) -> Formula:
    return _Parser(text).parse()
