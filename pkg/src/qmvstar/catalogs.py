"""Law catalogs: the four axiom systems and the derived-property suites.

Axiom names follow the standard QMV*/QW*/MV*/M numbering of the algebra
families.  Axioms that bundle a chain of equalities are split into adjacent
pairs with letter suffixes (QMV*5a..d, QW*5a..d) so a failure localises; the
split laws share a `base` name and the catalog counts 14/12/12/11 bases for
qmv/qw/mv/w.

The property suites encode the derived identities and order facts that every
model of the corresponding theory must satisfy; they power `algebra props`
and the sampling sweeps over the standard models.
"""

from __future__ import annotations

from .terms import (ADDITIVE, IMPLICATIVE, ConditionalLaw, Law, NEG_ONE, ONE,
                    ZERO, arrow, eq, le, neg, negpart, plus, pos, u, v, vee,
                    wedge, x, y, z)


def _laws(kind, triples):
    out = []
    for name, lhs, rhs in triples:
        base = name.rstrip("abcdefgh")
        out.append(Law(name, kind, lhs, rhs, base=base))
    return tuple(out)


# ---------------------------------------------------------------------------
# Axiom systems

QMV_LAWS = _laws("qmv", [
    ("QMV*1", plus(x, y), plus(y, x)),
    ("QMV*2", plus(plus(ONE, x), plus(y, plus(ONE, z))),
              plus(plus(plus(ONE, x), y), plus(ONE, z))),
    ("QMV*3", plus(plus(x, ONE), ONE), ONE),
    ("QMV*4", plus(plus(x, y), ZERO), plus(x, y)),
    ("QMV*5a", plus(pos(x), ZERO), pos(plus(x, ZERO))),
    ("QMV*5b", pos(plus(x, ZERO)), plus(ONE, plus(NEG_ONE, x))),
    ("QMV*5c", plus(negpart(x), ZERO), negpart(plus(x, ZERO))),
    ("QMV*5d", negpart(plus(x, ZERO)), plus(NEG_ONE, plus(ONE, x))),
    ("QMV*6", plus(x, y), plus(plus(pos(x), pos(y)), plus(negpart(x), negpart(y)))),
    ("QMV*7", ZERO, neg(ZERO)),
    ("QMV*8", plus(x, neg(x)), ZERO),
    ("QMV*9", neg(plus(x, y)), plus(neg(x), neg(y))),
    ("QMV*10", neg(neg(x)), x),
    ("QMV*11", pos(plus(neg(x), plus(x, y))),
               plus(neg(pos(x)), plus(pos(x), pos(y)))),
    ("QMV*12", vee(x, y), vee(y, x)),
    ("QMV*13", vee(x, vee(y, z)), vee(vee(x, y), z)),
    ("QMV*14", plus(x, vee(y, z)), vee(plus(x, y), plus(x, z))),
])

MV_LAWS = _laws("mv", [
    ("MV*1", plus(x, y), plus(y, x)),
    ("MV*2", plus(plus(ONE, x), plus(y, plus(ONE, z))),
             plus(plus(plus(ONE, x), y), plus(ONE, z))),
    ("MV*3", plus(x, neg(x)), ZERO),
    ("MV*4", plus(plus(x, ONE), ONE), ONE),
    ("MV*5", plus(x, ZERO), x),
    ("MV*6", neg(plus(x, y)), plus(neg(x), neg(y))),
    ("MV*7", neg(neg(x)), x),
    ("MV*8", plus(x, y), plus(plus(pos(x), pos(y)), plus(negpart(x), negpart(y)))),
    ("MV*9", pos(plus(neg(x), plus(x, y))),
             plus(neg(pos(x)), plus(pos(x), pos(y)))),
    ("MV*10", vee(x, y), vee(y, x)),
    ("MV*11", vee(x, vee(y, z)), vee(vee(x, y), z)),
    ("MV*12", plus(x, vee(y, z)), vee(plus(x, y), plus(x, z))),
])

QW_LAWS = _laws("qw", [
    ("QW*1", arrow(x, y), arrow(neg(y), neg(x))),
    ("QW*2", arrow(arrow(x, ONE), arrow(arrow(y, ONE), z)),
             arrow(arrow(y, ONE), arrow(arrow(x, ONE), z))),
    ("QW*3", arrow(arrow(ONE, x), ONE), ONE),
    ("QW*4", arrow(arrow(z, z), arrow(x, y)), arrow(x, y)),
    ("QW*5a", arrow(arrow(ONE, ONE), pos(x)), pos(arrow(arrow(ONE, ONE), x))),
    ("QW*5b", pos(arrow(arrow(ONE, ONE), x)), arrow(arrow(x, ONE), ONE)),
    ("QW*5c", arrow(arrow(ONE, ONE), negpart(x)),
              negpart(arrow(arrow(ONE, ONE), x))),
    ("QW*5d", negpart(arrow(arrow(ONE, ONE), x)),
              arrow(arrow(x, NEG_ONE), NEG_ONE)),
    ("QW*6", arrow(x, y), arrow(arrow(pos(y), negpart(x)),
                                arrow(pos(x), negpart(y)))),
    ("QW*7", neg(arrow(x, y)), arrow(y, x)),
    ("QW*8", neg(neg(x)), x),
    ("QW*9", pos(arrow(x, arrow(neg(x), y))),
             arrow(pos(x), arrow(neg(pos(x)), pos(y)))),
    ("QW*10", vee(x, y), vee(y, x)),
    ("QW*11", vee(x, vee(y, z)), vee(vee(x, y), z)),
    ("QW*12", arrow(x, vee(y, z)), vee(arrow(x, y), arrow(x, z))),
])

W_LAWS = _laws("w", [
    ("M1", arrow(x, y), arrow(neg(y), neg(x))),
    ("M2", arrow(arrow(x, ONE), arrow(arrow(y, ONE), z)),
           arrow(arrow(y, ONE), arrow(arrow(x, ONE), z))),
    ("M3", arrow(arrow(ONE, x), ONE), ONE),
    ("M4", arrow(arrow(y, y), x), x),
    ("M5", arrow(x, y), arrow(arrow(pos(y), negpart(x)),
                              arrow(pos(x), negpart(y)))),
    ("M6", neg(arrow(x, y)), arrow(y, x)),
    ("M7", neg(neg(x)), x),
    ("M8", pos(arrow(x, arrow(neg(x), y))),
           arrow(pos(x), arrow(neg(pos(x)), pos(y)))),
    ("M9", vee(x, y), vee(y, x)),
    ("M10", vee(x, vee(y, z)), vee(vee(x, y), z)),
    ("M11", arrow(x, vee(y, z)), vee(arrow(x, y), arrow(x, z))),
])

THEORIES: dict[str, tuple[Law, ...]] = {
    "qmv": QMV_LAWS, "mv": MV_LAWS, "qw": QW_LAWS, "w": W_LAWS,
}


def theory_for(kind: str) -> tuple[Law, ...]:
    return THEORIES[kind]


def law_bases(laws) -> tuple[str, ...]:
    seen = []
    for law in laws:
        if law.base not in seen:
            seen.append(law.base)
    return tuple(seen)


# ---------------------------------------------------------------------------
# Derived-property suites


def additive_property_suite(kind: str) -> tuple[Law, ...]:
    """Derived identities of the additive (quasi-)MV* signature."""
    assert kind in ADDITIVE
    p = plus
    return _laws(kind, [
        ("prop-01a", p(ZERO, ZERO), ZERO),
        ("prop-01b", p(ONE, ZERO), ONE),
        ("prop-01c", p(NEG_ONE, ZERO), NEG_ONE),
        ("prop-01d", p(ONE, ONE), ONE),
        ("prop-01e", p(NEG_ONE, NEG_ONE), NEG_ONE),
        ("prop-02", neg(p(x, ZERO)), p(neg(x), ZERO)),
        ("prop-03a", pos(ZERO), ZERO),
        ("prop-03b", negpart(ZERO), ZERO),
        ("prop-03c", pos(ONE), ONE),
        ("prop-03d", negpart(ONE), ZERO),
        ("prop-03e", pos(NEG_ONE), ZERO),
        ("prop-03f", negpart(NEG_ONE), NEG_ONE),
        ("prop-04a", p(pos(neg(x)), ZERO), p(neg(negpart(x)), ZERO)),
        ("prop-04b", p(negpart(neg(x)), ZERO), p(neg(pos(x)), ZERO)),
        ("prop-05a", p(pos(negpart(x)), ZERO), ZERO),
        ("prop-05b", p(negpart(pos(x)), ZERO), ZERO),
        ("prop-06a", p(pos(pos(x)), ZERO), p(pos(x), ZERO)),
        ("prop-06b", p(negpart(negpart(x)), ZERO), p(negpart(x), ZERO)),
        ("prop-07a", vee(x, ZERO), p(pos(x), ZERO)),
        ("prop-07b", wedge(x, ZERO), p(negpart(x), ZERO)),
        ("prop-08a", vee(pos(x), ZERO), p(pos(x), ZERO)),
        ("prop-08b", wedge(negpart(x), ZERO), p(negpart(x), ZERO)),
        ("prop-09a", wedge(pos(x), ZERO), ZERO),
        ("prop-09b", vee(negpart(x), ZERO), ZERO),
        ("prop-10a", vee(x, x), p(x, ZERO)),
        ("prop-10b", wedge(x, x), p(x, ZERO)),
        ("prop-11a", p(x, y), p(p(x, ZERO), y)),
        ("prop-11b", p(p(x, ZERO), y), p(x, p(y, ZERO))),
        ("prop-11c", p(x, p(y, ZERO)), p(p(x, ZERO), p(y, ZERO))),
        ("prop-12a", vee(x, y), p(vee(x, y), ZERO)),
        ("prop-12b", p(vee(x, y), ZERO), vee(p(x, ZERO), y)),
        ("prop-12c", vee(p(x, ZERO), y), vee(x, p(y, ZERO))),
        ("prop-12d", wedge(x, y), p(wedge(x, y), ZERO)),
        ("prop-12e", p(wedge(x, y), ZERO), wedge(p(x, ZERO), y)),
        ("prop-12f", wedge(p(x, ZERO), y), wedge(x, p(y, ZERO))),
        ("prop-13a", vee(x, y), p(vee(pos(x), pos(y)), vee(negpart(x), negpart(y)))),
        ("prop-13b", wedge(x, y), p(wedge(pos(x), pos(y)), wedge(negpart(x), negpart(y)))),
        ("prop-14a", vee(pos(x), negpart(x)), p(pos(x), ZERO)),
        ("prop-14b", wedge(pos(x), negpart(x)), p(negpart(x), ZERO)),
        ("prop-15a", p(x, ZERO), p(pos(p(x, ZERO)), negpart(p(x, ZERO)))),
        ("prop-15b", p(pos(p(x, ZERO)), negpart(p(x, ZERO))),
                     p(vee(pos(x), negpart(x)), wedge(pos(x), negpart(x)))),
        ("prop-15c", p(vee(pos(x), negpart(x)), wedge(pos(x), negpart(x))),
                     p(pos(x), negpart(x))),
    ])


def additive_order_suite(kind: str) -> tuple[ConditionalLaw, ...]:
    """Order facts of the additive signature (<= is x v y = 0 + y)."""
    assert kind in ADDITIVE
    p = plus

    def c(name, premises, conclusion):
        base = name.rstrip("abcd")
        return ConditionalLaw(name, kind, tuple(premises), conclusion, base=base)

    return (
        c("ord-01", [le(x, y), le(y, x)], eq(p(x, ZERO), p(y, ZERO))),
        c("ord-02a", [], le(NEG_ONE, x)),
        c("ord-02b", [], le(x, ONE)),
        c("ord-03a", [], le(x, p(x, ZERO))),
        c("ord-03b", [], le(p(x, ZERO), x)),
        c("ord-04", [le(x, y), le(u, v)], le(p(x, u), p(y, v))),
        c("ord-05a", [le(x, y)], le(pos(x), pos(y))),
        c("ord-05b", [le(x, y)], le(negpart(x), negpart(y))),
        c("ord-06", [le(x, y), le(u, v)], le(vee(x, u), vee(y, v))),
        c("ord-07", [le(x, y), le(u, v)], le(wedge(x, u), wedge(y, v))),
        c("ord-08a", [le(x, y)], eq(wedge(x, y), p(x, ZERO))),
        c("ord-08b", [eq(wedge(x, y), p(x, ZERO))], le(x, y)),
        c("ord-09", [le(x, y)], le(neg(y), neg(x))),
        c("ord-10", [eq(p(x, ZERO), p(ONE, z))], le(ZERO, x)),
        c("ord-11", [eq(p(x, ZERO), p(NEG_ONE, z))], le(x, ZERO)),
        c("ord-12a", [le(x, ZERO)], eq(p(pos(x), ZERO), ZERO)),
        c("ord-12b", [eq(p(pos(x), ZERO), ZERO)], le(x, ZERO)),
        c("ord-12c", [le(ZERO, x)], eq(p(negpart(x), ZERO), ZERO)),
        c("ord-12d", [eq(p(negpart(x), ZERO), ZERO)], le(ZERO, x)),
        c("ord-13a", [], le(negpart(x), x)),
        c("ord-13b", [], le(x, pos(x))),
    )


def implicative_property_suite(kind: str) -> tuple[Law, ...]:
    """Derived identities of the implicative (quasi-)Wajsberg* signature."""
    assert kind in IMPLICATIVE
    a = arrow
    return _laws(kind, [
        ("unit-01a", a(ZERO, ONE), ONE),
        ("unit-01b", a(ZERO, NEG_ONE), NEG_ONE),
        ("unit-02a", a(ONE, ZERO), NEG_ONE),
        ("unit-02b", a(NEG_ONE, ZERO), ONE),
        ("unit-03a", a(NEG_ONE, ONE), ONE),
        ("unit-03b", a(ONE, NEG_ONE), NEG_ONE),
        ("unit-04a", pos(ZERO), ZERO),
        ("unit-04b", negpart(ZERO), ZERO),
        ("unit-04c", pos(ONE), ONE),
        ("unit-04d", negpart(NEG_ONE), NEG_ONE),
        ("unit-05a", negpart(ONE), ZERO),
        ("unit-05b", pos(NEG_ONE), ZERO),
        ("reg-01a", a(ZERO, a(x, y)), a(x, y)),
        ("reg-01b", a(ZERO, neg(a(x, y))), neg(a(x, y))),
        ("reg-02a", a(a(x, y), ZERO), neg(a(x, y))),
        ("reg-02b", a(neg(a(x, y)), ZERO), a(x, y)),
        ("lat-01a", vee(x, x), a(ZERO, x)),
        ("lat-01b", wedge(x, x), a(ZERO, x)),
        ("lat-02a", a(x, wedge(y, z)), wedge(a(x, y), a(x, z))),
        ("lat-02b", a(wedge(x, y), z), vee(a(x, z), a(y, z))),
        ("lat-02c", a(vee(x, y), z), wedge(a(x, z), a(y, z))),
        ("lat-03a", a(x, y), a(a(ZERO, x), y)),
        ("lat-03b", a(a(ZERO, x), y), a(x, a(ZERO, y))),
        ("lat-03c", a(x, a(ZERO, y)), a(a(ZERO, x), a(ZERO, y))),
        ("lat-04a", vee(x, y), a(ZERO, vee(x, y))),
        ("lat-04b", a(ZERO, vee(x, y)), vee(a(ZERO, x), y)),
        ("lat-04c", vee(a(ZERO, x), y), vee(x, a(ZERO, y))),
        ("lat-04d", vee(x, a(ZERO, y)), vee(a(ZERO, x), a(ZERO, y))),
        ("lat-04e", wedge(x, y), a(ZERO, wedge(x, y))),
        ("lat-04f", a(ZERO, wedge(x, y)), wedge(a(ZERO, x), y)),
        ("lat-04g", wedge(a(ZERO, x), y), wedge(x, a(ZERO, y))),
        ("lat-04h", wedge(x, a(ZERO, y)), wedge(a(ZERO, x), a(ZERO, y))),
        ("sign-01a", a(ZERO, pos(neg(x))), a(ZERO, neg(negpart(x)))),
        ("sign-01b", a(ZERO, negpart(neg(x))), a(ZERO, neg(pos(x)))),
        ("sign-02a", a(ZERO, negpart(pos(x))), ZERO),
        ("sign-02b", a(ZERO, pos(negpart(x))), ZERO),
        ("sign-03a", a(ZERO, pos(pos(x))), a(ZERO, pos(x))),
        ("sign-03b", a(ZERO, negpart(negpart(x))), a(ZERO, negpart(x))),
        ("sign-04a", a(pos(neg(x)), y), a(neg(negpart(x)), y)),
        ("sign-04b", a(x, pos(neg(y))), a(x, neg(negpart(y)))),
        ("sign-04c", a(negpart(neg(x)), y), a(neg(pos(x)), y)),
        ("sign-04d", a(x, negpart(neg(y))), a(x, neg(pos(y)))),
        ("sign-05a", a(negpart(pos(x)), y), a(ZERO, y)),
        ("sign-05b", a(pos(negpart(x)), y), a(ZERO, y)),
        ("sign-05c", a(x, negpart(pos(y))), a(x, ZERO)),
        ("sign-05d", a(x, pos(negpart(y))), a(x, ZERO)),
        ("sign-06a", a(pos(pos(x)), y), a(pos(x), y)),
        ("sign-06b", a(x, pos(pos(y))), a(x, pos(y))),
        ("sign-06c", a(negpart(negpart(x)), y), a(negpart(x), y)),
        ("sign-06d", a(x, negpart(negpart(y))), a(x, negpart(y))),
        ("bound-01a", vee(x, ZERO), a(ZERO, pos(x))),
        ("bound-01b", wedge(x, ZERO), a(ZERO, negpart(x))),
        ("bound-02a", vee(pos(x), ZERO), a(ZERO, pos(x))),
        ("bound-02b", wedge(negpart(x), ZERO), a(ZERO, negpart(x))),
        ("bound-02c", vee(negpart(x), ZERO), ZERO),
        ("bound-02d", wedge(pos(x), ZERO), ZERO),
        ("bound-03a", vee(x, y), a(neg(vee(pos(x), pos(y))),
                                   vee(negpart(x), negpart(y)))),
        ("bound-03b", wedge(x, y), a(neg(wedge(pos(x), pos(y))),
                                     wedge(negpart(x), negpart(y)))),
        ("bound-04a", vee(pos(x), negpart(x)), a(ZERO, pos(x))),
        ("bound-04b", wedge(pos(x), negpart(x)), a(ZERO, negpart(x))),
        ("bound-05", a(ZERO, x), a(neg(pos(x)), negpart(x))),
        ("bound-06a", pos(vee(x, y)), vee(pos(x), pos(y))),
        ("bound-06b", negpart(vee(x, y)), vee(negpart(x), negpart(y))),
        ("bound-06c", pos(wedge(x, y)), wedge(pos(x), pos(y))),
        ("bound-06d", negpart(wedge(x, y)), wedge(negpart(x), negpart(y))),
        ("bound-07a", vee(x, wedge(x, y)), vee(x, x)),
        ("bound-07b", wedge(x, vee(x, y)), wedge(x, x)),
        ("qlat-01a", vee(x, vee(y, y)), vee(x, y)),
        ("qlat-01b", wedge(x, wedge(y, y)), wedge(x, y)),
    ])


def implicative_order_suite(kind: str) -> tuple[ConditionalLaw, ...]:
    """Order facts of the implicative signature (<= is x v y = 0 -> y)."""
    assert kind in IMPLICATIVE
    a = arrow

    def c(name, premises, conclusion):
        base = name.rstrip("abcd")
        return ConditionalLaw(name, kind, tuple(premises), conclusion, base=base)

    return (
        c("ord-01", [le(x, y), le(y, x)], eq(a(ZERO, x), a(ZERO, y))),
        c("ord-02a", [], le(NEG_ONE, x)),
        c("ord-02b", [], le(x, ONE)),
        c("ord-03a", [], le(x, a(ZERO, x))),
        c("ord-03b", [], le(a(ZERO, x), x)),
        c("ord-04", [le(x, y), le(u, v)], le(vee(x, u), vee(y, v))),
        c("ord-05", [le(x, y), le(u, v)], le(wedge(x, u), wedge(y, v))),
        c("ord-06a", [le(x, y)], eq(wedge(x, y), a(ZERO, x))),
        c("ord-06b", [eq(wedge(x, y), a(ZERO, x))], le(x, y)),
        c("ord-07", [le(x, y)], le(neg(y), neg(x))),
        c("ord-08", [le(x, y), le(u, v)], le(a(y, u), a(x, v))),
        c("ord-09a", [le(x, y)], le(pos(x), pos(y))),
        c("ord-09b", [le(x, y)], le(negpart(x), negpart(y))),
        c("ord-10a", [], le(negpart(x), x)),
        c("ord-10b", [], le(x, pos(x))),
    )


def property_suite(kind: str):
    """(plain laws, conditional laws) for the kind's signature family."""
    if kind in ADDITIVE:
        return additive_property_suite(kind), additive_order_suite(kind)
    return implicative_property_suite(kind), implicative_order_suite(kind)


def dump_catalog(kind: str) -> str:
    """Stable text rendering of the kind's axiom catalog (golden-file ready)."""
    lines = []
    for law in THEORIES[kind]:
        vars_ = ",".join(law.variables)
        lines.append(f"{law.name} [{vars_}]: {law.statement()}")
    return "\n".join(lines) + "\n"
