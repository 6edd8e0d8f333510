"""Circuits, broken circuits and nbc sets of an arrangement."""
import itertools
from collections import namedtuple

from .arrangement import build_lattice
from .exc import VerificationError
from .log import logger


#: A minimal dependent set of forms, as sorted indices.
Circuit = namedtuple('Circuit', 'indices')

#: An increasing independent tuple with no broken circuit, and its flat.
NbcSet = namedtuple('NbcSet', 'indices flat')

#: One line of :func:`check_nbc_count`.
NbcRow = namedtuple('NbcRow', 'flat count expected passed')


def circuits(arr):
    """All inclusion-minimal dependent subsets of the forms.

    Subsets are enumerated by increasing size up to ``dim + 1``; a dependent
    subset is kept when it contains no circuit found earlier.
    """
    found = []
    for size in range(1, min(len(arr), arr.dim + 1) + 1):
        for subset in itertools.combinations(range(len(arr)), size):
            if arr.rank(subset) == size:
                continue
            s = set(subset)
            if any(set(c.indices) <= s for c in found):
                continue
            found.append(Circuit(subset))
    logger.debug("%d circuits among %d forms", len(found), len(arr))
    return found


def broken_circuits(arr, circs=None):
    """Circuits with their least element removed, deduplicated."""
    if circs is None:
        circs = circuits(arr)
    broken = {c.indices[1:] for c in circs}
    return [frozenset(b) for b in sorted(broken, key=lambda b: (len(b), b))]


def nbc_sets(arr, lat=None):
    """Map each flat id to its nbc sets.

    Increasing tuples are grown depth first and pruned as soon as they become
    dependent or contain a broken circuit. The empty tuple belongs to V.
    """
    if lat is None:
        lat = build_lattice(arr)
    broken = broken_circuits(arr)
    result = {x.id: [] for x in lat.flats}

    def grow(prefix):
        flat = lat.flat_of(arr, prefix)
        result[flat.id].append(NbcSet(prefix, flat))
        start = prefix[-1] + 1 if prefix else 0
        for i in range(start, len(arr)):
            candidate = prefix + (i,)
            if arr.rank(candidate) != len(candidate):
                continue
            s = set(candidate)
            if any(b <= s for b in broken):
                continue
            grow(candidate)

    grow(())
    return result


class NbcReport:
    """Per-flat comparison of nbc counts with |μ(X)|."""

    def __init__(self, rows):
        self._rows = tuple(rows)

    @property
    def rows(self):
        return self._rows

    @property
    def passed(self):
        return all(r.passed for r in self._rows)

    @property
    def failures(self):
        return [r for r in self._rows if not r.passed]

    def counts_by_codim(self):
        """Total nbc count per codimension, lowest first."""
        totals = {}
        for r in self._rows:
            totals[r.flat.codim] = totals.get(r.flat.codim, 0) + r.count
        return [totals.get(k, 0) for k in range(max(totals) + 1)]

    def raise_for_failure(self):
        if not self.passed:
            r = self.failures[0]
            raise VerificationError(
                f"flat {r.flat.id} (support {list(r.flat.support)}): "
                f"{r.count} nbc sets, expected {r.expected}")

    def to_dict(self):
        return {
            'passed': self.passed,
            'flats': [{'id': r.flat.id, 'codim': r.flat.codim,
                       'support': list(r.flat.support),
                       'count': r.count, 'expected': r.expected,
                       'passed': r.passed} for r in self._rows],
        }


def check_nbc_count(arr, lat=None, sets=None):
    """Compare |nbc_X| with (-1)^codim X μ(X) on every flat."""
    if lat is None or not lat.has_mobius:
        lat = build_lattice(arr)
    if sets is None:
        sets = nbc_sets(arr, lat)
    rows = []
    for x in lat.flats:
        expected = (-1) ** x.codim * x.mobius
        count = len(sets[x.id])
        rows.append(NbcRow(x, count, expected, count == expected))
    return NbcReport(rows)
