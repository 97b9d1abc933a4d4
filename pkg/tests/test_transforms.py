import pytest

from qmvstar import algebras, catalogs, transforms
from qmvstar.algebras import AlgebraError, check_theory, load_algebra
from qmvstar.fixtures import fixture_path
from qmvstar.transforms import (BinaryRelation, canonical_embedding, check_filter,
                                compose, congruence_from_blocks, congruence_mu,
                                congruence_tau, diagonal_congruence, direct_product,
                                enumerate_congruences, intersect, is_all,
                                is_diagonal, quotient, relation_of,
                                restrict_to_plain, to_qmv, to_qw)


@pytest.fixture(scope="module")
def seven():
    return load_algebra(fixture_path("qmv7.alg"))


@pytest.fixture(scope="module")
def seven_qw(seven):
    return to_qw(seven)


def test_to_qw_tables(seven, seven_qw):
    assert seven_qw.kind == "qw"
    a, d = seven.element("a").index, seven.element("d").index
    assert seven_qw.names[seven_qw.binary(a, d)] == "1"
    for i in range(7):
        assert seven_qw.names[seven_qw.binary(i, i)] == "0"
    assert algebras.all_passed(check_theory(seven_qw, catalogs.QW_LAWS))


def test_round_trips_table_for_table(seven, seven_qw):
    back = to_qmv(seven_qw)
    assert back.binary_table == seven.binary_table
    assert back.zero == seven.zero
    assert to_qw(back).binary_table == seven_qw.binary_table


def test_functor_kind_contracts(seven, seven_qw):
    with pytest.raises(AlgebraError):
        to_qw(seven_qw)
    with pytest.raises(AlgebraError):
        to_qmv(seven)
    plain_w = restrict_to_plain(quotient(seven_qw, congruence_mu(seven_qw)))
    assert plain_w.kind == "w" and plain_w.pos_table is None
    assert to_qmv(plain_w).kind == "mv"


def test_mu_classes_and_characterization_agreement(seven):
    mu = congruence_mu(seven)
    assert str(mu) == "a | b,c | 0 | d,e | 1"
    # mutual-order characterization produces the same partition
    order = algebras.leq_matrix(seven)
    for i in range(seven.size):
        for j in range(seven.size):
            mutual = order[i][j] and order[j][i]
            assert mutual == mu.related(i, j)


def test_tau_classes(seven):
    tau = congruence_tau(seven)
    assert str(tau) == "a,b,0,e,1 | c | d"


def test_quotient_by_mu_is_regular(seven_qw):
    q = quotient(seven_qw, congruence_mu(seven_qw))
    assert q.size == 5
    assert all(algebras.regularize(q, i) == i for i in range(q.size))
    assert algebras.all_passed(
        check_theory(restrict_to_plain(q), catalogs.W_LAWS))


def test_quotient_by_tau_collapses_all_binary_output(seven_qw):
    q = quotient(seven_qw, congruence_tau(seven_qw))
    assert algebras.is_flat(q) and algebras.is_linear(q)
    zero = algebras.zero_index(q)
    for i in range(q.size):
        for j in range(q.size):
            assert q.binary(i, j) == zero


def test_quotient_by_diagonal_is_isomorphic(seven):
    q = quotient(seven, diagonal_congruence(seven))
    assert q.binary_table == seven.binary_table
    assert q.names == seven.names


def test_quotient_rejects_incompatible_partition(seven):
    with pytest.raises(AlgebraError, match="not compatible"):
        congruence_from_blocks(seven, [[0, 6], [1], [2], [3], [4], [5]])


def test_direct_product_with_singleton(seven):
    one = transforms.quotient(seven, transforms.all_congruence(seven))
    assert one.size == 1
    prod = direct_product(seven, one)
    assert prod.size == seven.size
    # pairing with the unique element preserves the tables
    assert [[row[j] for j in range(7)] for row in prod.binary_table] == \
        [list(row) for row in seven.binary_table]


def test_product_passes_theory(seven):
    prod = direct_product(seven, seven)
    reports = check_theory(prod, catalogs.QMV_LAWS)
    assert algebras.all_passed(reports)
    three_var = [r for r in reports if r.name == "QMV*2"]
    assert three_var[0].checked == 49 ** 3


def test_kind_mismatch_in_product(seven, seven_qw):
    with pytest.raises(AlgebraError):
        direct_product(seven, seven_qw)


def test_embedding_verdicts(seven):
    mu, tau, prod, report = canonical_embedding(seven)
    assert prod.size == 15
    assert report.all_pass
    images = {(m, t) for _, m, t in report.mapping}
    assert len(images) == 7


def test_relations(seven):
    mu = relation_of(congruence_mu(seven))
    tau = relation_of(congruence_tau(seven))
    assert is_diagonal(intersect(mu, tau))
    assert compose(mu, mu).pairs == mu.pairs  # transitivity
    assert not is_all(compose(mu, tau))
    assert is_all(compose(compose(mu, tau), mu))
    # mu o tau is the all relation iff every mu-class meets every tau-class
    mu_c, tau_c = congruence_mu(seven), congruence_tau(seven)
    forall_xy = all(
        set(mu_c.classes[mu_c.class_of[i]]) & set(tau_c.classes[tau_c.class_of[j]])
        for i in range(seven.size) for j in range(seven.size))
    assert forall_xy == is_all(compose(mu, tau))


def test_relation_outside_carrier(seven):
    with pytest.raises(AlgebraError):
        BinaryRelation(seven, frozenset({(0, 9)}))


def test_enumerate_congruences(seven):
    congs = enumerate_congruences(seven)
    partitions = {c.classes for c in congs}
    assert diagonal_congruence(seven).classes in partitions
    assert transforms.all_congruence(seven).classes in partitions
    assert congruence_mu(seven).classes in partitions
    assert congruence_tau(seven).classes in partitions
    assert len(congs) == 4  # the fixture has no other congruences


def test_enumerate_singleton_and_cap(seven):
    one = quotient(seven, transforms.all_congruence(seven))
    assert len(enumerate_congruences(one)) == 1
    big = direct_product(seven, seven)
    with pytest.raises(AlgebraError, match="cap"):
        enumerate_congruences(big)


# -- filters -------------------------------------------------------------------


@pytest.fixture(scope="module")
def five_chain_mv(seven_qw):
    q = quotient(seven_qw, congruence_mu(seven_qw))
    return to_qmv(restrict_to_plain(q))


def test_improper_filter(five_chain_mv):
    report = check_filter(five_chain_mv, list(five_chain_mv.names))
    assert report.all_pass


def test_positive_cone_is_a_filter(five_chain_mv):
    alg = five_chain_mv
    zero = algebras.zero_index(alg)
    cone = [name for name in alg.names
            if algebras.leq(alg, alg.names[zero], name)]
    assert sorted(cone) == ["0", "1", "d"]
    report = check_filter(alg, cone)
    assert report.all_pass


def test_missing_positive_part_fails_f1(five_chain_mv):
    report = check_filter(five_chain_mv, ["1"])
    assert not report.f1
    assert "F1" in report.detail and "missing" in report.detail


def test_filter_requires_mv_kind(seven):
    with pytest.raises(AlgebraError):
        check_filter(seven, ["1"])
