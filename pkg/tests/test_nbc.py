import itertools

import pytest

from reciprocals import (build_lattice, broken_circuits, check_nbc_count,
                         circuits, nbc_sets, poincare_polynomial)
from reciprocals.arrangement import Flat
from reciprocals.exc import VerificationError
from reciprocals.nbc import NbcReport, NbcRow
from reciprocals.series import parse_builtin


def test_circuits_braid3(braid3):
    assert [c.indices for c in circuits(braid3)] == [(0, 1, 2)]
    assert broken_circuits(braid3) == [frozenset({1, 2})]


def test_circuits_boolean():
    arr = parse_builtin('boolean:3')
    assert circuits(arr) == []
    assert broken_circuits(arr) == []


def test_circuits_generic():
    arr = parse_builtin('generic:4,2')
    assert [c.indices for c in circuits(arr)] == [
        (0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert broken_circuits(arr) == [
        frozenset({1, 2}), frozenset({1, 3}), frozenset({2, 3})]


def test_circuits_minimal(suite_arrangement):
    found = circuits(suite_arrangement)
    for c in found:
        assert suite_arrangement.rank(c.indices) == len(c.indices) - 1
        for i in c.indices:
            rest = [j for j in c.indices if j != i]
            assert suite_arrangement.is_independent(rest)


def test_nbc_sets_braid3(braid3):
    lat = build_lattice(braid3)
    sets = nbc_sets(braid3, lat)
    assert [s.indices for s in sets[0]] == [()]
    assert [s.indices for s in sets[1]] == [(0,)]
    assert [s.indices for s in sets[4]] == [(0, 1), (0, 2)]
    assert all(s.flat is lat[4] for s in sets[4])


def test_nbc_sets_boolean():
    arr = parse_builtin('boolean:2')
    sets = nbc_sets(arr)
    found = sorted(s.indices for group in sets.values() for s in group)
    assert found == [(), (0,), (0, 1), (1,)]


def test_nbc_sets_independent_without_broken_circuits(suite_arrangement):
    arr = suite_arrangement
    lat = build_lattice(arr)
    broken = broken_circuits(arr)
    sets = nbc_sets(arr, lat)
    for x in lat:
        for s in sets[x.id]:
            assert arr.is_independent(s.indices)
            assert list(s.indices) == sorted(s.indices)
            assert not any(b <= set(s.indices) for b in broken)
            assert arr.closure(s.indices) == set(x.support)


def test_nbc_count(suite_arrangement):
    report = check_nbc_count(suite_arrangement)
    assert report.passed
    assert report.failures == []
    report.raise_for_failure()


def test_nbc_counts_are_whitney_numbers(suite_arrangement):
    report = check_nbc_count(suite_arrangement)
    assert report.counts_by_codim() == list(
        poincare_polynomial(suite_arrangement).coeffs)


def test_nbc_counts_independent_of_order(suite_arrangement):
    n = len(suite_arrangement)
    orders = itertools.islice(itertools.permutations(range(n)), 1, 4)
    expected = check_nbc_count(suite_arrangement).counts_by_codim()
    for order in orders:
        arr = suite_arrangement.permuted(order)
        report = check_nbc_count(arr)
        assert report.passed, order
        assert report.counts_by_codim() == expected


def test_nbc_sets_depend_on_order(braid3):
    arr = braid3.permuted([2, 1, 0])
    top = [s.indices for s in nbc_sets(arr)[4]]
    assert top == [(0, 1), (0, 2)]
    # in the original numbering the nbc sets of the top flat changed
    assert {(2, 1), (2, 0)} == {tuple(2 - i for i in s) for s in top}


def test_report_failure():
    flat = Flat(3, (0, 1), 2, (), mobius=2)
    report = NbcReport([NbcRow(flat, 1, 2, False)])
    assert not report.passed
    assert report.to_dict()['flats'][0]['count'] == 1
    with pytest.raises(VerificationError):
        report.raise_for_failure()


def test_report_to_dict(braid3):
    data = check_nbc_count(braid3).to_dict()
    assert data['passed']
    assert [f['count'] for f in data['flats']] == [1, 1, 1, 1, 2]
    assert data['flats'][4]['support'] == [0, 1, 2]
