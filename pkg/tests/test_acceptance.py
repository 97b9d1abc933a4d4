"""The acceptance gate: every criterion at its stated tolerance.

Run with `pytest tests/test_acceptance.py -s` to see one pass/fail line per
checked claim (the same records `qmvstar fixtures run` prints).
"""

import pytest

from qmvstar import acceptance


def _run(criterion):
    records = criterion()
    for record in records:
        detail = f" -- {record.detail}" if record.detail else ""
        print(f"{'PASS' if record.passed else 'FAIL'} {record.name}{detail}")
    failed = [r.name for r in records if not r.passed]
    assert not failed, f"failing acceptance checks: {failed}"


def test_criterion_1_fixture_theory_and_mutation():
    _run(acceptance.criterion_1)


def test_criterion_2_term_equivalence():
    _run(acceptance.criterion_2)


def test_criterion_3_congruence_structure():
    _run(acceptance.criterion_3)


def test_criterion_4_standard_models():
    _run(acceptance.criterion_4)


def test_criterion_5_derived_property_suites():
    _run(acceptance.criterion_5)


def test_criterion_6_proof_fixtures_and_combinators():
    _run(acceptance.criterion_6)


def test_criterion_7_soundness_suite():
    _run(acceptance.criterion_7)


def test_criterion_8_congruence_enumeration_oracle():
    _run(acceptance.criterion_8)
