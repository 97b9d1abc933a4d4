"""Term-equivalence functors, products, congruences, quotients, filters.

The functor pair: `to_qw` reads an additive algebra implicatively via
x -> y := -x + y, and `to_qmv` reads an implicative algebra additively via
x + y := ~x -> y with 0 := the constant diagonal.  They are mutually inverse
table-for-table.

Congruences are stored as partitions with class ids assigned by the smallest
member index; quotient carriers follow ascending class id, so all derived
tables are deterministic and diff-able.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebras import (AlgebraError, Element, FiniteAlgebra, derived_zero,
                       leq_matrix, regular_set, regularize, zero_index)
from .terms import ADDITIVE, IMPLICATIVE


# ---------------------------------------------------------------------------
# Signature functors


def to_qw(alg: FiniteAlgebra) -> FiniteAlgebra:
    """Additive -> implicative reading: arrow(x, y) = plus(neg(x), y).

    qmv inputs keep their primitive pos/negpart tables (kind qw); mv inputs
    drop them (kind w, where both are derived terms).  The stored 0 is
    dropped; it stays recoverable as 1 -> 1.
    """
    if alg.kind not in ADDITIVE:
        raise AlgebraError(f"to_qw expects an mv/qmv algebra, got {alg.kind}")
    n = alg.size
    arrow_table = tuple(
        tuple(alg.binary(alg.neg(a), b) for b in range(n)) for a in range(n))
    quasi = alg.kind == "qmv"
    return FiniteAlgebra(
        kind="qw" if quasi else "w",
        names=alg.names,
        binary_table=arrow_table,
        neg_table=alg.neg_table,
        one=alg.one,
        pos_table=alg.pos_table if quasi else None,
        negpart_table=alg.negpart_table if quasi else None,
        label=f"to_qw({alg.label})" if alg.label else "")


def to_qmv(alg: FiniteAlgebra) -> FiniteAlgebra:
    """Implicative -> additive reading: plus(x, y) = arrow(neg(x), y).

    Requires a constant diagonal x -> x, which becomes the stored 0.
    """
    if alg.kind not in IMPLICATIVE:
        raise AlgebraError(f"to_qmv expects a w/qw algebra, got {alg.kind}")
    zero = derived_zero(alg).index
    n = alg.size
    plus_table = tuple(
        tuple(alg.binary(alg.neg(a), b) for b in range(n)) for a in range(n))
    quasi = alg.kind == "qw"
    return FiniteAlgebra(
        kind="qmv" if quasi else "mv",
        names=alg.names,
        binary_table=plus_table,
        neg_table=alg.neg_table,
        one=alg.one,
        zero=zero,
        pos_table=alg.pos_table if quasi else None,
        negpart_table=alg.negpart_table if quasi else None,
        label=f"to_qmv({alg.label})" if alg.label else "")


def restrict_to_plain(alg: FiniteAlgebra) -> FiniteAlgebra:
    """Forget the primitive pos/negpart (and turn qmv->mv, qw->w).

    Only meaningful for algebras where 0 o x = x, i.e. after a mu-quotient;
    there the primitive tables agree with the plain derived terms.
    """
    if alg.kind == "qw":
        return FiniteAlgebra(kind="w", names=alg.names,
                             binary_table=alg.binary_table,
                             neg_table=alg.neg_table, one=alg.one,
                             label=alg.label)
    if alg.kind == "qmv":
        return FiniteAlgebra(kind="mv", names=alg.names,
                             binary_table=alg.binary_table,
                             neg_table=alg.neg_table, one=alg.one,
                             zero=alg.zero, label=alg.label)
    return alg


# ---------------------------------------------------------------------------
# Direct products


def direct_product(a: FiniteAlgebra, b: FiniteAlgebra) -> FiniteAlgebra:
    """Componentwise product; carrier ordered lexicographically by factors."""
    if a.kind != b.kind:
        raise AlgebraError(f"kind mismatch: {a.kind} vs {b.kind}")
    pairs = [(i, j) for i in range(a.size) for j in range(b.size)]
    index = {p: k for k, p in enumerate(pairs)}
    names = tuple(f"({a.names[i]},{b.names[j]})" for i, j in pairs)

    def unary(fa, fb):
        return tuple(index[(fa(i), fb(j))] for i, j in pairs)

    binary_table = tuple(
        tuple(index[(a.binary(i1, i2), b.binary(j1, j2))] for i2, j2 in pairs)
        for i1, j1 in pairs)
    return FiniteAlgebra(
        kind=a.kind,
        names=names,
        binary_table=binary_table,
        neg_table=unary(a.neg, b.neg),
        one=index[(a.one, b.one)],
        zero=index[(a.zero, b.zero)] if a.zero is not None else None,
        pos_table=unary(a.pos, b.pos) if a.pos_table is not None else None,
        negpart_table=(unary(a.negpart, b.negpart)
                       if a.negpart_table is not None else None),
        label=f"product({a.label},{b.label})" if a.label or b.label else "")


# ---------------------------------------------------------------------------
# Congruences


@dataclass(frozen=True)
class Congruence:
    """Partition of a parent algebra's carrier, compatible with all operations."""

    parent: FiniteAlgebra
    class_of: tuple[int, ...]          # element index -> class id
    classes: tuple[tuple[int, ...], ...]  # class id -> sorted member indices

    def related(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def class_names(self) -> tuple[str, ...]:
        names = self.parent.names
        return tuple("{" + ",".join(names[i] for i in cls) + "}"
                     for cls in self.classes)

    def pairs(self) -> frozenset[tuple[int, int]]:
        out = set()
        for cls in self.classes:
            out.update(itertools.product(cls, cls))
        return frozenset(out)

    def __str__(self) -> str:
        names = self.parent.names
        return " | ".join(",".join(names[i] for i in cls) for cls in self.classes)


def _canonical_partition(alg: FiniteAlgebra, blocks) -> Congruence:
    # class ids by smallest member index
    blocks = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0])
    class_of = [-1] * alg.size
    for cid, block in enumerate(blocks):
        for member in block:
            if class_of[member] != -1:
                raise AlgebraError("overlapping classes in partition")
            class_of[member] = cid
    if -1 in class_of:
        raise AlgebraError("partition does not cover the carrier")
    return Congruence(alg, tuple(class_of), tuple(blocks))


def compatibility_failure(alg: FiniteAlgebra, cong: Congruence):
    """First operation/argument witness violating compatibility, or None."""
    rel = cong.related
    n = alg.size
    unary_ops = [("neg", alg.neg)]
    if alg.pos_table is not None:
        unary_ops += [("pos", alg.pos), ("negpart", alg.negpart)]
    for name, op in unary_ops:
        for cls in cong.classes:
            for a, b in itertools.combinations(cls, 2):
                if not rel(op(a), op(b)):
                    return (name, (a,), (b,))
    binary = alg.binary
    for cls_x in cong.classes:
        for cls_y in cong.classes:
            rep_x, rep_y = cls_x[0], cls_y[0]
            base = binary(rep_x, rep_y)
            for a in cls_x:
                for b in cls_y:
                    if not rel(binary(a, b), base):
                        return ("binary", (rep_x, rep_y), (a, b))
    return None


def is_compatible(alg: FiniteAlgebra, cong: Congruence) -> bool:
    return compatibility_failure(alg, cong) is None


def congruence_from_blocks(alg: FiniteAlgebra, blocks, check: bool = True) -> Congruence:
    cong = _canonical_partition(alg, blocks)
    if check:
        failure = compatibility_failure(alg, cong)
        if failure is not None:
            op, args_a, args_b = failure
            names = alg.names
            raise AlgebraError(
                f"partition not compatible with {op} at "
                f"{tuple(names[i] for i in args_a)} vs {tuple(names[i] for i in args_b)}")
    return cong


def congruence_mu(alg: FiniteAlgebra) -> Congruence:
    """Classes are the fibers of x |-> 0 o x (equivalently mutual <=)."""
    fibers: dict[int, list[int]] = {}
    for a in range(alg.size):
        fibers.setdefault(regularize(alg, a), []).append(a)
    return congruence_from_blocks(alg, fibers.values())


def congruence_tau(alg: FiniteAlgebra) -> Congruence:
    """One class collects every regular element; the rest stay singletons."""
    regular = {e.index for e in regular_set(alg)}
    blocks = [sorted(regular)] + [[a] for a in range(alg.size) if a not in regular]
    return congruence_from_blocks(alg, blocks)


def diagonal_congruence(alg: FiniteAlgebra) -> Congruence:
    return congruence_from_blocks(alg, [[a] for a in range(alg.size)], check=False)


def all_congruence(alg: FiniteAlgebra) -> Congruence:
    return congruence_from_blocks(alg, [list(range(alg.size))], check=False)


def quotient(alg: FiniteAlgebra, cong: Congruence) -> FiniteAlgebra:
    """Algebra on the classes; compatibility is re-verified first."""
    if cong.parent is not alg and cong.parent != alg:
        raise AlgebraError("congruence belongs to a different algebra")
    failure = compatibility_failure(alg, cong)
    if failure is not None:
        raise AlgebraError(f"induced operation ill-defined: incompatible at {failure}")
    reps = [cls[0] for cls in cong.classes]
    cls_of = cong.class_of
    names = tuple(alg.names[r] for r in reps)
    binary_table = tuple(
        tuple(cls_of[alg.binary(r1, r2)] for r2 in reps) for r1 in reps)

    def unary(op):
        return tuple(cls_of[op(r)] for r in reps)

    return FiniteAlgebra(
        kind=alg.kind,
        names=names,
        binary_table=binary_table,
        neg_table=unary(alg.neg),
        one=cls_of[alg.one],
        zero=cls_of[alg.zero] if alg.zero is not None else None,
        pos_table=unary(alg.pos) if alg.pos_table is not None else None,
        negpart_table=unary(alg.negpart) if alg.negpart_table is not None else None,
        label=f"quotient({alg.label})" if alg.label else "")


# ---------------------------------------------------------------------------
# Canonical embedding into W/mu x W/tau


@dataclass(frozen=True)
class EmbeddingReport:
    mapping: tuple[tuple[str, str, str], ...]  # (element, mu-class, tau-class)
    injective: bool
    homomorphism: bool
    mu_projection_surjective: bool
    tau_projection_surjective: bool
    detail: str = ""

    @property
    def all_pass(self) -> bool:
        return (self.injective and self.homomorphism
                and self.mu_projection_surjective and self.tau_projection_surjective)


def canonical_embedding(alg: FiniteAlgebra):
    """h(x) = (x/mu, x/tau) into quotient(mu) x quotient(tau), with verdicts.

    Returns (mu, tau, product algebra, EmbeddingReport).  Additive inputs are
    transformed implicatively first, which leaves mu/tau untouched.
    """
    base = to_qw(alg) if alg.kind in ADDITIVE else alg
    mu = congruence_mu(base)
    tau = congruence_tau(base)
    qmu = quotient(base, mu)
    qtau = quotient(base, tau)
    prod = direct_product(qmu, qtau)

    def h(a: int) -> int:
        return mu.class_of[a] * qtau.size + tau.class_of[a]

    images = [h(a) for a in range(base.size)]
    injective = len(set(images)) == base.size

    failures = []
    for a in range(base.size):
        if h(base.neg(a)) != prod.neg(images[a]):
            failures.append(f"neg({base.names[a]})")
        if base.pos_table is not None:
            if h(base.pos(a)) != prod.pos(images[a]):
                failures.append(f"pos({base.names[a]})")
            if h(base.negpart(a)) != prod.negpart(images[a]):
                failures.append(f"negpart({base.names[a]})")
        for b in range(base.size):
            if h(base.binary(a, b)) != prod.binary(images[a], images[b]):
                failures.append(f"binary({base.names[a]},{base.names[b]})")
    if h(base.one) != prod.one:
        failures.append("one")

    mu_hit = {mu.class_of[a] for a in range(base.size)}
    tau_hit = {tau.class_of[a] for a in range(base.size)}

    mu_names = mu.class_names()
    tau_names = tau.class_names()
    mapping = tuple((base.names[a], mu_names[mu.class_of[a]], tau_names[tau.class_of[a]])
                    for a in range(base.size))
    report = EmbeddingReport(
        mapping=mapping,
        injective=injective,
        homomorphism=not failures,
        mu_projection_surjective=mu_hit == set(range(len(mu.classes))),
        tau_projection_surjective=tau_hit == set(range(len(tau.classes))),
        detail="; ".join(failures[:5]))
    return mu, tau, prod, report


# ---------------------------------------------------------------------------
# Binary relations


@dataclass(frozen=True)
class BinaryRelation:
    parent: FiniteAlgebra
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        n = self.parent.size
        for a, b in self.pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise AlgebraError("relation pair outside carrier")


def relation_of(cong: Congruence) -> BinaryRelation:
    return BinaryRelation(cong.parent, cong.pairs())


def compose(r: BinaryRelation, s: BinaryRelation) -> BinaryRelation:
    """(x, z) in r o s iff some y has (x, y) in r and (y, z) in s."""
    if r.parent != s.parent:
        raise AlgebraError("relations on different algebras")
    by_first: dict[int, list[int]] = {}
    for a, b in s.pairs:
        by_first.setdefault(a, []).append(b)
    out = {(a, c) for a, b in r.pairs for c in by_first.get(b, ())}
    return BinaryRelation(r.parent, frozenset(out))


def intersect(r: BinaryRelation, s: BinaryRelation) -> BinaryRelation:
    if r.parent != s.parent:
        raise AlgebraError("relations on different algebras")
    return BinaryRelation(r.parent, r.pairs & s.pairs)


def is_all(r: BinaryRelation) -> bool:
    return len(r.pairs) == r.parent.size ** 2


def is_diagonal(r: BinaryRelation) -> bool:
    return r.pairs == frozenset((a, a) for a in range(r.parent.size))


# ---------------------------------------------------------------------------
# Brute-force congruence enumeration

MAX_ENUMERATION_SIZE = 8


def _set_partitions(n: int):
    """All partitions of range(n) via restricted-growth strings."""
    codes = [0] * n

    def rec(i: int, maxi: int):
        if i == n:
            blocks: dict[int, list[int]] = {}
            for idx, c in enumerate(codes):
                blocks.setdefault(c, []).append(idx)
            yield list(blocks.values())
            return
        for c in range(maxi + 2):
            codes[i] = c
            yield from rec(i + 1, max(maxi, c))

    yield from rec(0, -1) if n else iter(([],))


def enumerate_congruences(alg: FiniteAlgebra) -> list[Congruence]:
    """Every compatible partition, by brute force over set partitions.

    Capped at carrier size 8 (Bell(8) = 4140 partitions).  The result always
    contains the diagonal and the all relation, ordered coarsest-last by
    (class count desc, partition shape).
    """
    if alg.size > MAX_ENUMERATION_SIZE:
        raise AlgebraError(
            f"carrier size {alg.size} exceeds enumeration cap {MAX_ENUMERATION_SIZE}")
    found = []
    for blocks in _set_partitions(alg.size):
        cong = _canonical_partition(alg, blocks)
        if compatibility_failure(alg, cong) is None:
            found.append(cong)
    found.sort(key=lambda c: (-len(c.classes), c.classes))
    return found


# ---------------------------------------------------------------------------
# MV* filters


@dataclass(frozen=True)
class FilterReport:
    subset: tuple[str, ...]
    f1: bool
    f2: bool
    f3: bool
    detail: str = ""

    @property
    def all_pass(self) -> bool:
        return self.f1 and self.f2 and self.f3


def check_filter(alg: FiniteAlgebra, subset) -> FilterReport:
    """Check the filter conditions on an mv algebra.

    F1: every x^+ = 1 + (-1 + x) lies in the subset.
    F2: x in F and y - x in F imply y in F          (y - x is y + (-x))
    F3: x + y in F implies (x + t) + (y - t) in F for every t.
    """
    if alg.kind != "mv":
        raise AlgebraError(f"filters are defined on mv algebras, not {alg.kind}")
    members = set()
    for e in subset:
        members.add(e.index if isinstance(e, Element) else alg.element(e).index)
    names = alg.names
    plus_, neg_ = alg.binary, alg.neg

    def pos_(a: int) -> int:
        return plus_(alg.one, plus_(neg_(alg.one), a))

    def minus(a: int, b: int) -> int:
        return plus_(a, neg_(b))

    detail = []
    f1 = True
    for a in range(alg.size):
        if pos_(a) not in members:
            f1 = False
            detail.append(f"F1: missing {names[pos_(a)]} (= {names[a]}^+)")
            break
    f2 = True
    for a in members:
        for b in range(alg.size):
            if minus(b, a) in members and b not in members:
                f2 = False
                detail.append(f"F2: {names[a]} in F and {names[b]}-{names[a]} in F "
                              f"but {names[b]} not in F")
                break
        if not f2:
            break
    f3 = True
    for a in range(alg.size):
        for b in range(alg.size):
            if plus_(a, b) not in members:
                continue
            for c in range(alg.size):
                if plus_(plus_(a, c), minus(b, c)) not in members:
                    f3 = False
                    detail.append(
                        f"F3: {names[a]}+{names[b]} in F but "
                        f"({names[a]}+{names[c]})+({names[b]}-{names[c]}) not in F")
                    break
            if not f3:
                break
        if not f3:
            break
    return FilterReport(subset=tuple(sorted(names[i] for i in members)),
                        f1=f1, f2=f2, f3=f3, detail="; ".join(detail))
