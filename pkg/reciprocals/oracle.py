"""Brute-force graded dimensions by exact linear algebra.

Every degree-p reciprocal 1/∏ε is multiplied by (∏Δ)^p, the product of all
forms raised to p; the result is the polynomial ∏ α_i^(p - m_i), where m_i is
the multiplicity of form i in ε. Spans of reciprocals are then spans of these
numerators, and dimensions are matrix ranks. The oracle exists to check the
combinatorial formulas on small arrangements, not to scale.
"""
import itertools
from collections import Counter, namedtuple

from sympy import Rational
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .arrangement import Flat, build_lattice, poincare_polynomial
from .exc import (AmbiguousDecompositionError, ArgumentError, TooLargeError,
                  VerificationError)
from .linalg import polys_to_matrix, solve, span_rank
from .log import logger
from .nbc import nbc_sets
from .polynomial import binomial
from .series import flat_series, substitute

#: Default bound on rows x worst-case columns of one oracle matrix.
DEFAULT_BUDGET = 10 ** 7

#: Clause names in report order.
CLAUSES = (
    'direct-sum',      # dim ∂₊C_p + dim AO_p = dim C_p
    'sum-spans',       # ∂₊C_p and AO_p together span C_p
    'ideal-rank',      # dim ∂₊C_p = dim J_p
    'ideal-span',      # ∂₊C_p and J_p span the same space
    'nbc-count',       # number of nbc sets of size p = dim AO_p
    'nbc-basis',       # nbc reciprocals of size p span AO_p
    'decomposition',   # Σ_X dim C_X,p = dim C_p
    'series',          # dim C_p = series coefficient
    'aomoto',          # dim AO_p = Poincaré coefficient
    'flat-series',     # dim C_X,p = |μ(X)| C(p-1, codim X - 1)
)

TUPLE_FILTERS = ('all', 'independent', 'dependent')


class ReciprocalTuple(tuple):
    """A multiset of form indices standing for 1/∏ε, kept sorted."""

    def __new__(cls, indices=()):
        return super().__new__(cls, sorted(indices))

    @property
    def degree(self):
        return len(self)

    def multiplicities(self):
        return Counter(self)


#: A reciprocal together with its cleared-denominator numerator.
NumeratorForm = namedtuple('NumeratorForm', 'tuple numerator')

#: Graded dimensions of one degree; fields not computed are ``None``.
DegreeRow = namedtuple(
    'DegreeRow', 'degree dim_c dim_ao dim_j dim_del_plus_c flat_dims')

#: A single comparison in a report; ``flat`` is a flat id or ``None``.
Check = namedtuple('Check', 'degree clause flat expected actual passed')


def _check_str(check):
    where = f"degree {check.degree}"
    if check.flat is not None:
        where += f", flat {check.flat}"
    return (f"{where}, {check.clause}: expected {check.expected}, "
            f"got {check.actual}")


class GradedReport:
    """Graded dimensions and pass/fail checks, ordered by degree."""

    def __init__(self, rows=(), checks=()):
        self._rows = {}
        for row in rows:
            self._add_row(row)
        order = {c: i for i, c in enumerate(CLAUSES)}
        self._checks = tuple(sorted(
            checks,
            key=lambda c: (c.degree, order.get(c.clause, len(order)),
                           -1 if c.flat is None else c.flat)))

    def _add_row(self, row):
        old = self._rows.get(row.degree)
        if old is None:
            self._rows[row.degree] = row
            return
        merged = [a if a is not None else b for a, b in zip(old, row)]
        self._rows[row.degree] = DegreeRow(*merged)

    @property
    def rows(self):
        return [self._rows[p] for p in sorted(self._rows)]

    @property
    def checks(self):
        return self._checks

    @property
    def passed(self):
        return all(c.passed for c in self._checks)

    @property
    def failures(self):
        return [c for c in self._checks if not c.passed]

    @property
    def first_failure(self):
        failures = self.failures
        return failures[0] if failures else None

    def merge(self, other):
        return GradedReport(self.rows + other.rows,
                            self._checks + other.checks)

    def raise_for_failure(self):
        if not self.passed:
            raise VerificationError(_check_str(self.first_failure))

    def to_dict(self):
        return {
            'passed': self.passed,
            'degrees': [
                {'degree': r.degree, 'dim_c': r.dim_c, 'dim_ao': r.dim_ao,
                 'dim_j': r.dim_j, 'dim_del_plus_c': r.dim_del_plus_c,
                 'flats': (None if r.flat_dims is None else
                           [{'flat': f, 'dim': d}
                            for f, d in sorted(r.flat_dims.items())])}
                for r in self.rows],
            'checks': [c._asdict() for c in self._checks],
        }


#: One term θ_j(φ_j): a monomial operator in the complement directions of
#: the flat of φ_j, applied to the reciprocal of an nbc set.
DecompositionTerm = namedtuple(
    'DecompositionTerm', 'basis nbc flat exponents coefficient')


class Decomposition:
    """Unique expansion of a reciprocal over the nbc basis.

    ``directions`` maps a flat id to the directions the operators of that
    flat differentiate along. ``residue`` maps each nbc set of the top flat
    to the coefficient of its degree zero operator, or is ``None`` when the
    forms do not span the dual space.
    """

    def __init__(self, arr, target, terms, directions, residue):
        self._arr = arr
        self.target = target
        self.terms = tuple(terms)
        self.directions = directions
        self.residue = residue

    @property
    def degree(self):
        return self.target.degree

    def expand(self):
        """Apply every term and collect the result as reciprocals."""
        total = {}
        for term in self.terms:
            element = apply_operator(
                self._arr, {ReciprocalTuple(term.nbc): Rational(1)},
                self.directions[term.flat], term.exponents)
            for tup, coef in element.items():
                total[tup] = total.get(tup, 0) + term.coefficient * coef
        return {t: c for t, c in total.items() if c}

    def __repr__(self):
        return (f"<Decomposition target={tuple(self.target)} "
                f"terms={len(self.terms)}>")


def differentiate(arr, element, direction):
    """Directional derivative of a combination of reciprocals.

    ``element`` maps :class:`ReciprocalTuple` to coefficients. By the
    quotient rule D_v(1/∏ε) = -Σ_j m_j α_j(v) / (α_j ∏ε).
    """
    result = {}
    for tup, coef in element.items():
        for j, m in tup.multiplicities().items():
            a = arr[j](direction)
            if not a:
                continue
            new = ReciprocalTuple(tup + (j,))
            result[new] = result.get(new, 0) - m * a * coef
    return {t: c for t, c in result.items() if c}


def apply_operator(arr, element, directions, exponents):
    """Apply the monomial ∏ D_{v_k}^{e_k} to ``element``."""
    for v, e in zip(directions, exponents):
        for _ in range(e):
            element = differentiate(arr, element, v)
    return element


def _check_degree(p):
    if not isinstance(p, int) or p < 0:
        raise ArgumentError(f"degree must be a nonnegative integer, got {p!r}")


def enumerate_tuples(arr, p, filter='all'):
    """Size-p multisets of form indices matching ``filter``.

    ``filter`` is ``'all'``, ``'independent'`` (distinct and linearly
    independent), ``'dependent'`` (the rest, any repetition included) or a
    :class:`~reciprocals.arrangement.Flat`, selecting tuples cutting out
    exactly that flat.
    """
    _check_degree(p)
    n = len(arr)
    if isinstance(filter, Flat):
        support = set(filter.support)
        return [ReciprocalTuple(t)
                for t in itertools.combinations_with_replacement(range(n), p)
                if set(t) <= support and arr.rank(set(t)) == filter.codim]
    if filter == 'all':
        return [ReciprocalTuple(t) for t in
                itertools.combinations_with_replacement(range(n), p)]
    if filter == 'independent':
        return [ReciprocalTuple(t) for t in itertools.combinations(range(n), p)
                if arr.rank(t) == p]
    if filter == 'dependent':
        return [ReciprocalTuple(t) for t in
                itertools.combinations_with_replacement(range(n), p)
                if not arr.is_independent(t)]
    raise ArgumentError(f"unknown tuple filter {filter!r}")


class Oracle:
    """Graded dimensions of C(Δ) and its pieces for one arrangement.

    Numerators and ranks are cached, so one instance should serve all
    questions about an arrangement. With ``echo`` every computed dimension
    is logged at INFO level.
    """

    def __init__(self, arr, budget=DEFAULT_BUDGET, echo=False):
        if budget <= 0:
            raise ArgumentError("budget must be positive")
        self._arr = arr
        self._budget = budget
        self._echo = echo
        self._ring = arr.ring()
        self._linear = [form.to_polynomial(self._ring) for form in arr]
        self._powers = {}
        self._numerators = {}
        self._dims = {}
        self._lattice = None
        self._nbc = None
        self._directions = {}

    @property
    def arrangement(self):
        return self._arr

    @property
    def budget(self):
        return self._budget

    @property
    def echo(self):
        """Return echo mode status."""
        return self._echo

    @property
    def lattice(self):
        """Intersection lattice with Möbius values, built on first use."""
        if self._lattice is None:
            self._lattice = build_lattice(self._arr)
        return self._lattice

    @property
    def nbc(self):
        """nbc sets per flat id."""
        if self._nbc is None:
            self._nbc = nbc_sets(self._arr, self.lattice)
        return self._nbc

    def tuple_count(self, p):
        """Rows of the degree-p matrix of C: multisets of size p."""
        return binomial(len(self._arr) + p - 1, p)

    def derivative_count(self, p):
        """Rows of the degree-p matrix of ∂₊C: ℓ derivatives per tuple."""
        if p == 0:
            return 0
        return self._arr.dim * self.tuple_count(p - 1)

    def estimate(self, p, rows=None):
        """Rows times worst-case columns of a degree-p matrix.

        ``rows`` defaults to the row count of the matrix of C_p.
        """
        n, l = len(self._arr), self._arr.dim
        if not n:
            return 1
        if rows is None:
            rows = self.tuple_count(p)
        return rows * binomial(l + p * (n - 1), l)

    def check_size(self, p, rows=None):
        estimate = self.estimate(p, rows)
        if estimate > self._budget:
            raise TooLargeError(estimate, self._budget)

    def _power(self, i, k):
        key = (i, k)
        try:
            return self._powers[key]
        except KeyError:
            pass
        value = self._linear[i] ** k
        self._powers[key] = value
        return value

    def numerator(self, tup):
        """(∏Δ)^p / ∏ε for a reciprocal tuple of degree p."""
        tup = ReciprocalTuple(tup)
        try:
            return self._numerators[tup]
        except KeyError:
            pass
        p = tup.degree
        m = tup.multiplicities()
        value = self._ring.one
        for i in range(len(self._arr)):
            if p - m[i]:
                value = value * self._power(i, p - m[i])
        self._numerators[tup] = value
        return value

    def numerator_form(self, tup):
        tup = ReciprocalTuple(tup)
        return NumeratorForm(tup, self.numerator(tup))

    def element_numerator(self, element, p):
        """Numerator of a homogeneous combination of degree-p reciprocals."""
        value = self._ring.zero
        for tup, coef in element.items():
            if tup.degree != p:
                raise ArgumentError(
                    f"term {tuple(tup)} has degree {tup.degree}, expected {p}")
            value += self.numerator(tup).mul_ground(QQ.convert(coef))
        return value

    def _log(self, name, p, value):
        if self._echo:
            logger.info("dim %s_%d = %d", name, p, value)

    def _dim(self, key, p, polys_factory, rows=None):
        try:
            return self._dims[(key, p)]
        except KeyError:
            pass
        self.check_size(p, rows)
        value = span_rank(polys_factory())
        self._dims[(key, p)] = value
        self._log(key, p, value)
        return value

    def tuples(self, p, filter='all'):
        return enumerate_tuples(self._arr, p, filter)

    def numerators(self, p, filter='all'):
        return [self.numerator(t) for t in self.tuples(p, filter)]

    def dim_c(self, p):
        """dim C_p, the degree-p part of the whole algebra."""
        _check_degree(p)
        return self._dim('C', p, lambda: self.numerators(p, 'all'))

    def dim_ao(self, p):
        """dim AO_p, spanned by independent tuples."""
        _check_degree(p)
        return self._dim('AO', p, lambda: self.numerators(p, 'independent'))

    def dim_j(self, p):
        """dim J_p, spanned by dependent tuples."""
        _check_degree(p)
        return self._dim('J', p, lambda: self.numerators(p, 'dependent'))

    def dim_cx(self, flat, p):
        """dim C_{X,p} for the flat X."""
        _check_degree(p)
        return self._dim(('CX', flat.support), p,
                         lambda: self.numerators(p, flat))

    def del_plus_c(self, p):
        """Numerators spanning (∂₊C)_p: all first derivatives of C_{p-1}."""
        _check_degree(p)
        if p == 0:
            return []
        l = self._arr.dim
        directions = [tuple(int(i == k) for k in range(l)) for i in range(l)]
        polys = []
        for tup in self.tuples(p - 1, 'all'):
            for v in directions:
                element = differentiate(self._arr, {tup: Rational(1)}, v)
                polys.append(self.element_numerator(element, p))
        return polys

    def dim_del_plus_c(self, p):
        """dim (∂₊C)_p; zero in degree 0."""
        _check_degree(p)
        return self._dim('dC', p, lambda: self.del_plus_c(p),
                         self.derivative_count(p))

    def _generator_checks(self, p):
        # the combined spans stack ∂₊C_p on top of a part of C_p
        self.check_size(p, self.derivative_count(p) + self.tuple_count(p))
        c, ao = self.dim_c(p), self.dim_ao(p)
        j, d = self.dim_j(p), self.dim_del_plus_c(p)
        spans = self.del_plus_c(p)
        both = span_rank(spans + self.numerators(p, 'independent'))
        ideal = span_rank(spans + self.numerators(p, 'dependent'))
        nbc = [s for sets in self.nbc.values() for s in sets
               if len(s.indices) == p]
        nbc_rank = span_rank([self.numerator(s.indices) for s in nbc])
        checks = [
            Check(p, 'direct-sum', None, c, d + ao, d + ao == c),
            Check(p, 'sum-spans', None, c, both, both == c),
            Check(p, 'ideal-rank', None, j, d, d == j),
            Check(p, 'ideal-span', None, j, ideal, ideal == j == d),
            Check(p, 'nbc-count', None, ao, len(nbc), len(nbc) == ao),
            Check(p, 'nbc-basis', None, ao, nbc_rank, nbc_rank == ao),
        ]
        return DegreeRow(p, c, ao, j, d, None), checks

    def _decomposition_checks(self, p):
        c = self.dim_c(p)
        flat_dims = {x.id: self.dim_cx(x, p) for x in self.lattice.flats}
        total = sum(flat_dims.values())
        checks = [Check(p, 'decomposition', None, c, total, total == c)]
        return DegreeRow(p, c, None, None, None, flat_dims), checks

    def _series_checks(self, p):
        c, ao = self.dim_c(p), self.dim_ao(p)
        poin = poincare_polynomial(self._arr, self.lattice)
        expected = substitute(poin, p)[p]
        checks = [Check(p, 'series', None, expected, c, expected == c),
                  Check(p, 'aomoto', None, poin[p], ao, poin[p] == ao)]
        flat_dims = {}
        for x in self.lattice.flats:
            dim = self.dim_cx(x, p)
            flat_dims[x.id] = dim
            want = flat_series(x.codim, x.mobius, p)[p]
            checks.append(Check(p, 'flat-series', x.id, want, dim,
                                want == dim))
        return DegreeRow(p, c, ao, None, None, flat_dims), checks

    def _report(self, max_degree, parts):
        _check_degree(max_degree)
        rows, checks = [], []
        for p in range(max_degree + 1):
            for part in parts:
                row, found = part(p)
                rows.append(row)
                checks.extend(found)
        return GradedReport(rows, checks)

    def verify_generators(self, max_degree):
        """Direct sum, ideal span and nbc basis checks up to ``max_degree``.

        Minimality of the nbc reciprocals as generators follows from the
        direct sum: a homogeneous generating set is minimal exactly when it
        maps to a basis of C / ∂₊C.
        """
        return self._report(max_degree, [self._generator_checks])

    def verify_decomposition(self, max_degree):
        """Σ_X dim C_{X,p} = dim C_p up to ``max_degree``."""
        return self._report(max_degree, [self._decomposition_checks])

    def verify_series(self, max_degree):
        """Oracle dimensions against the combinatorial series."""
        return self._report(max_degree, [self._series_checks])

    def verify_all(self, max_degree):
        return self._report(max_degree, [self._generator_checks,
                                         self._decomposition_checks,
                                         self._series_checks])

    def degree_report(self, p):
        """All checks of a single degree."""
        _check_degree(p)
        rows, checks = [], []
        for part in (self._generator_checks, self._decomposition_checks,
                     self._series_checks):
            row, found = part(p)
            rows.append(row)
            checks.extend(found)
        return GradedReport(rows, checks)

    def complement_directions(self, flat):
        """Directions v_1..v_c with α_{b_k}(v_m) = δ_km.

        b_1..b_c are chosen greedily, lowest index first, among the forms
        vanishing on ``flat``; the v_k span a complement of the flat.
        """
        try:
            return self._directions[flat.support]
        except KeyError:
            pass
        chosen = []
        for i in flat.support:
            if len(chosen) == flat.codim:
                break
            if self._arr.rank(chosen + [i]) == len(chosen) + 1:
                chosen.append(i)
        rows = DomainMatrix(
            [[QQ.convert(c) for c in self._arr[i].coeffs] for i in chosen],
            (len(chosen), self._arr.dim), QQ) if chosen else None
        directions = []
        for k in range(len(chosen)):
            v = solve(rows, [int(k == m) for m in range(len(chosen))])
            directions.append(v)
        self._directions[flat.support] = directions
        return directions

    def jk_decompose(self, target):
        """Expand 1/∏target uniquely as Σ_j θ_j(φ_j) over the nbc basis.

        θ_j runs over monomial operators of degree p - codim X_j in the
        complement directions of X_j, the flat of φ_j; coefficients come from
        an exact linear solve on numerators.
        """
        target = ReciprocalTuple(target)
        for i in target:
            if not 0 <= i < len(self._arr):
                raise ArgumentError(f"no form with index {i}")
        p = target.degree
        # one candidate row per basis element of C_p plus the target
        self.check_size(p, self.tuple_count(p) + 1)
        lat = self.lattice

        basis = []
        for x in lat.flats:
            for s in self.nbc[x.id]:
                basis.append((len(basis), s, x))

        unknowns, candidates = [], []
        for j, s, x in basis:
            if x.codim > p:
                continue
            directions = self.complement_directions(x)
            for combo in itertools.combinations_with_replacement(
                    range(x.codim), p - x.codim):
                exponents = tuple(combo.count(k) for k in range(x.codim))
                element = apply_operator(
                    self._arr, {ReciprocalTuple(s.indices): Rational(1)},
                    directions, exponents)
                unknowns.append((j, s, x, exponents))
                candidates.append(self.element_numerator(element, p))
        if not unknowns:
            raise VerificationError(
                f"no basis element reaches degree {p}")

        rows = polys_to_matrix(candidates + [self.numerator(target)])
        entries = rows.to_list()
        ncols = rows.shape[1]
        system = DomainMatrix(entries[:-1], (len(candidates), ncols),
                              QQ).transpose()
        solution, kernel = solve(system, entries[-1], nullspace=True)
        if kernel:
            raise AmbiguousDecompositionError(len(kernel))
        if solution is None:
            raise VerificationError(
                f"{tuple(target)} is not in the span of the nbc basis")

        terms = [DecompositionTerm(j, s.indices, x.id, exponents, coef)
                 for (j, s, x, exponents), coef in zip(unknowns, solution)
                 if coef]

        residue = None
        if self._arr.rank() == self._arr.dim:
            residue = {}
            for (j, s, x, exponents), coef in zip(unknowns, solution):
                if x.codim == self._arr.dim and not any(exponents):
                    residue[s.indices] = coef
            for x in lat.top():
                for s in self.nbc[x.id]:
                    residue.setdefault(s.indices, Rational(0))

        directions = {x.id: self.complement_directions(x) for x in lat.flats}
        if self._echo:
            logger.info("decomposed %r into %d terms", tuple(target),
                        len(terms))
        return Decomposition(self._arr, target, terms, directions, residue)


def dim_c(arr, p, budget=DEFAULT_BUDGET):
    return Oracle(arr, budget).dim_c(p)


def dim_ao(arr, p, budget=DEFAULT_BUDGET):
    return Oracle(arr, budget).dim_ao(p)


def dim_j(arr, p, budget=DEFAULT_BUDGET):
    return Oracle(arr, budget).dim_j(p)


def dim_cx(arr, flat, p, budget=DEFAULT_BUDGET):
    return Oracle(arr, budget).dim_cx(flat, p)


def dim_del_plus_c(arr, p, budget=DEFAULT_BUDGET):
    return Oracle(arr, budget).dim_del_plus_c(p)


def verify_generators(arr, max_degree, budget=DEFAULT_BUDGET):
    return Oracle(arr, budget).verify_generators(max_degree)


def verify_decomposition(arr, max_degree, budget=DEFAULT_BUDGET):
    return Oracle(arr, budget).verify_decomposition(max_degree)


def verify_series(arr, max_degree, budget=DEFAULT_BUDGET):
    return Oracle(arr, budget).verify_series(max_degree)


def verify_all(arr, max_degree, budget=DEFAULT_BUDGET):
    return Oracle(arr, budget).verify_all(max_degree)


def degree_report(arr, p, budget=DEFAULT_BUDGET):
    """Module level so that process pools can pickle it."""
    return Oracle(arr, budget).degree_report(p)


def jk_decompose(arr, target, budget=DEFAULT_BUDGET):
    return Oracle(arr, budget).jk_decompose(target)
