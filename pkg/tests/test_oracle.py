import pickle

import pytest

from reciprocals import (Oracle, ReciprocalTuple, build_lattice, dim_ao,
                         dim_c, dim_cx, dim_del_plus_c, dim_j,
                         enumerate_tuples, new_arrangement, series_of_c,
                         verify_all, verify_decomposition, verify_generators,
                         verify_series)
from reciprocals.exc import ArgumentError, TooLargeError, VerificationError
from reciprocals.oracle import (CLAUSES, Check, DegreeRow, GradedReport,
                                degree_report, differentiate)
from reciprocals.series import parse_builtin


@pytest.fixture(scope='module')
def braid3_oracle():
    return Oracle(parse_builtin('braid:3'))


def test_reciprocal_tuple():
    t = ReciprocalTuple((2, 0, 2))
    assert t == (0, 2, 2)
    assert t.degree == 3
    assert t.multiplicities() == {0: 1, 2: 2}
    assert ReciprocalTuple().degree == 0


def test_enumerate_tuples(braid3):
    assert len(enumerate_tuples(braid3, 2)) == 6
    assert enumerate_tuples(braid3, 2, 'independent') == [
        (0, 1), (0, 2), (1, 2)]
    assert enumerate_tuples(braid3, 2, 'dependent') == [
        (0, 0), (1, 1), (2, 2)]
    assert enumerate_tuples(braid3, 0) == [()]
    assert enumerate_tuples(braid3, 3, 'independent') == []


def test_enumerate_tuples_by_flat(braid3):
    lat = build_lattice(braid3)
    assert enumerate_tuples(braid3, 2, lat[1]) == [(0, 0)]
    assert enumerate_tuples(braid3, 2, lat[4]) == [(0, 1), (0, 2), (1, 2)]
    assert enumerate_tuples(braid3, 0, lat[0]) == [()]
    assert enumerate_tuples(braid3, 1, lat[0]) == []


def test_enumerate_tuples_errors(braid3):
    with pytest.raises(ArgumentError):
        enumerate_tuples(braid3, -1)
    with pytest.raises(ArgumentError):
        enumerate_tuples(braid3, 2, 'some')


def test_numerator(braid3_oracle):
    a = [f.to_polynomial(braid3_oracle.arrangement.ring())
         for f in braid3_oracle.arrangement]
    assert braid3_oracle.numerator(()) == a[0].ring.one
    assert braid3_oracle.numerator((0,)) == a[1] * a[2]
    assert braid3_oracle.numerator((0, 0)) == a[1] ** 2 * a[2] ** 2
    assert braid3_oracle.numerator((1, 0)) == a[0] * a[1] * a[2] ** 2
    form = braid3_oracle.numerator_form((2, 1))
    assert form.tuple == (1, 2)


def test_dims_braid3(braid3_oracle):
    assert [braid3_oracle.dim_c(p) for p in range(4)] == [1, 3, 5, 7]
    assert [braid3_oracle.dim_ao(p) for p in range(4)] == [1, 3, 2, 0]
    assert [braid3_oracle.dim_j(p) for p in range(4)] == [0, 0, 3, 7]
    assert [braid3_oracle.dim_del_plus_c(p) for p in range(4)] == [0, 0, 3, 7]


def test_dims_boolean(boolean2):
    assert [dim_c(boolean2, p) for p in range(4)] == [1, 2, 3, 4]
    assert [dim_ao(boolean2, p) for p in range(4)] == [1, 2, 1, 0]
    assert dim_j(boolean2, 2) == 2
    assert dim_del_plus_c(boolean2, 2) == 2


def test_dim_cx(braid3):
    lat = build_lattice(braid3)
    assert [dim_cx(braid3, x, 2) for x in lat] == [0, 1, 1, 1, 2]
    assert [dim_cx(braid3, x, 0) for x in lat] == [1, 0, 0, 0, 0]


def test_differentiate():
    arr = new_arrangement(1, [[1]])
    d = differentiate(arr, {ReciprocalTuple((0,)): 1}, (1,))
    assert d == {(0, 0): -1}
    d = differentiate(arr, {ReciprocalTuple((0, 0)): 1}, (3,))
    assert d == {(0, 0, 0): -6}


def test_differentiate_drops_constant_forms(braid3):
    # x1 - x2 is constant along (1, 1, 0)
    d = differentiate(braid3, {ReciprocalTuple((0, 1)): 1}, (1, 1, 0))
    assert d == {(0, 1, 1): -1}


def test_budget(braid3):
    oracle = Oracle(braid3, budget=100)
    assert oracle.estimate(1) == 30
    assert oracle.dim_c(1) == 3
    with pytest.raises(TooLargeError) as ctx:
        oracle.dim_c(3)
    assert ctx.value.budget == 100
    assert ctx.value.estimate == oracle.estimate(3)
    with pytest.raises(ArgumentError):
        Oracle(braid3, budget=0)


def test_budget_covers_derivative_matrices(braid3):
    oracle = Oracle(braid3, budget=300)
    assert oracle.tuple_count(2) == 6
    assert oracle.derivative_count(2) == 9
    assert oracle.estimate(2) == 210
    assert oracle.dim_c(2) == 5
    with pytest.raises(TooLargeError) as ctx:
        oracle.dim_del_plus_c(2)
    assert ctx.value.estimate == 315

    # the sum checks stack both matrices
    oracle = Oracle(braid3, budget=400)
    assert oracle.dim_del_plus_c(2) == 3
    with pytest.raises(TooLargeError) as ctx:
        oracle.verify_generators(2)
    assert ctx.value.estimate == 525


def test_too_large_error_pickles():
    err = pickle.loads(pickle.dumps(TooLargeError(10, 5)))
    assert (err.estimate, err.budget) == (10, 5)


def test_echo_logs_dimensions(braid3, caplog):
    caplog.set_level('INFO', logger='reciprocals')
    oracle = Oracle(braid3, echo=True)
    assert oracle.echo
    oracle.dim_c(2)
    assert 'dim C_2 = 5' in caplog.text


def test_dims_cached(braid3):
    oracle = Oracle(braid3)
    oracle.dim_c(2)
    oracle._arr = None
    assert oracle.dim_c(2) == 5


@pytest.mark.slow
def test_series_agrees_with_oracle(suite_arrangement, suite_max_degree):
    oracle = Oracle(suite_arrangement)
    series = series_of_c(suite_arrangement, suite_max_degree)
    assert [oracle.dim_c(p) for p in range(suite_max_degree + 1)] == list(
        series)


@pytest.mark.slow
def test_verify_generators(suite_arrangement, suite_max_degree):
    report = verify_generators(suite_arrangement, suite_max_degree)
    assert report.passed, report.first_failure
    assert {c.clause for c in report.checks} == set(CLAUSES[:6])


@pytest.mark.slow
def test_verify_decomposition(suite_arrangement, suite_max_degree):
    report = verify_decomposition(suite_arrangement, suite_max_degree)
    assert report.passed, report.first_failure
    for row in report.rows:
        assert sum(row.flat_dims.values()) == row.dim_c


@pytest.mark.slow
def test_verify_series(suite_arrangement, suite_max_degree):
    report = verify_series(suite_arrangement, suite_max_degree)
    assert report.passed, report.first_failure


def test_verify_all_braid3(braid3):
    report = verify_all(braid3, 2)
    assert report.passed
    assert len(report.checks) == 42
    assert [r.degree for r in report.rows] == [0, 1, 2]
    row = report.rows[2]
    assert (row.dim_c, row.dim_ao, row.dim_j, row.dim_del_plus_c) == (
        5, 2, 3, 3)
    assert row.flat_dims == {0: 0, 1: 1, 2: 1, 3: 1, 4: 2}


def test_degree_report_matches_verify_all(braid3):
    merged = GradedReport()
    for p in range(3):
        merged = merged.merge(degree_report(braid3, p))
    assert merged.to_dict() == verify_all(braid3, 2).to_dict()


def test_graded_report_order_and_failure():
    checks = [
        Check(1, 'series', None, 3, 3, True),
        Check(0, 'aomoto', None, 1, 1, True),
        Check(1, 'flat-series', 2, 1, 0, False),
        Check(1, 'direct-sum', None, 3, 3, True),
    ]
    report = GradedReport([DegreeRow(1, 3, None, None, None, None)], checks)
    assert [(c.degree, c.clause) for c in report.checks] == [
        (0, 'aomoto'), (1, 'direct-sum'), (1, 'series'), (1, 'flat-series')]
    assert not report.passed
    assert report.first_failure.flat == 2
    assert report.to_dict()['passed'] is False
    with pytest.raises(VerificationError) as ctx:
        report.raise_for_failure()
    assert 'flat 2' in str(ctx.value)


def test_graded_report_merges_rows():
    a = GradedReport([DegreeRow(2, 5, 2, None, None, None)])
    b = GradedReport([DegreeRow(2, 5, None, 3, 3, {0: 5})])
    row, = a.merge(b).rows
    assert row == DegreeRow(2, 5, 2, 3, 3, {0: 5})
