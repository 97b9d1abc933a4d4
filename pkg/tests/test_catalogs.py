import pathlib

import pytest

from qmvstar import catalogs

DATA = pathlib.Path(__file__).parent / "data"

EXPECTED_BASES = {"qmv": 14, "qw": 12, "mv": 12, "w": 11}


@pytest.mark.parametrize("kind,count", sorted(EXPECTED_BASES.items()))
def test_axiom_base_counts(kind, count):
    laws = catalogs.theory_for(kind)
    assert len(catalogs.law_bases(laws)) == count


@pytest.mark.parametrize("kind", sorted(EXPECTED_BASES))
def test_catalog_dump_matches_golden(kind):
    golden = (DATA / f"catalog_{kind}.txt").read_text()
    assert catalogs.dump_catalog(kind) == golden


def test_split_laws_share_base():
    by_name = {law.name: law for law in catalogs.QMV_LAWS}
    assert by_name["QMV*5a"].base == by_name["QMV*5d"].base == "QMV*5"
    by_name = {law.name: law for law in catalogs.QW_LAWS}
    assert by_name["QW*5b"].base == "QW*5"


def test_law_variable_arities():
    arity = {law.name: len(law.variables) for law in catalogs.QMV_LAWS}
    assert arity["QMV*1"] == 2
    assert arity["QMV*2"] == 3
    assert arity["QMV*7"] == 0
    assert arity["QMV*13"] == 3


def test_laws_only_use_their_kind():
    # every catalog law expands cleanly for its own kind
    from qmvstar.terms import compile_terms
    for kind in EXPECTED_BASES:
        for law in catalogs.theory_for(kind):
            compile_terms([law.lhs, law.rhs], kind, law.variables)
        plain, conditional = catalogs.property_suite(kind)
        for law in plain:
            compile_terms([law.lhs, law.rhs], kind, law.variables)
        for claw in conditional:
            for atom in claw.premises + (claw.conclusion,):
                compile_terms([atom.lhs, atom.rhs], kind, claw.variables)


def test_suite_sizes():
    plain, conditional = catalogs.property_suite("qmv")
    assert len(plain) == 42 and len(conditional) == 21
    plain, conditional = catalogs.property_suite("qw")
    assert len(plain) == 69 and len(conditional) == 15
