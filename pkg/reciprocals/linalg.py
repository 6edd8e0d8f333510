"""Exact linear algebra over the rationals.

Matrices are :class:`sympy.polys.matrices.DomainMatrix` instances over
``QQ``; polynomials are sparse elements of a
:class:`sympy.polys.rings.PolyRing` over ``QQ``, i.e. dictionaries from
exponent tuples to nonzero coefficients.
Everything here is a pure function of immutable inputs.
"""
import functools

from sympy import Rational
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

from .exc import ArgumentError
from .log import logger


def to_rational(value):
    """Coerce ``value`` to an exact :class:`sympy.Rational`.

    Integers, ``"a/b"`` strings, fractions and rationals are accepted;
    floats are refused since they are not exact.
    """
    if isinstance(value, float):
        raise ArgumentError(f"inexact coefficient {value!r}")
    if QQ.of_type(value):
        return QQ.to_sympy(value)
    try:
        return Rational(value)
    except (TypeError, ValueError) as e:
        raise ArgumentError(f"not a rational number: {value!r}") from e


def matrix(rows, ncols=None):
    """Build a ``QQ`` matrix from nested sequences of rational values."""
    rows = [[QQ.convert(to_rational(x)) for x in row] for row in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    for row in rows:
        if len(row) != ncols:
            raise ArgumentError(
                f"row of length {len(row)} in a matrix with {ncols} columns")
    if not rows or not ncols:
        return DomainMatrix.zeros((len(rows), ncols), QQ)
    return DomainMatrix(rows, (len(rows), ncols), QQ)


def _integral(m):
    # scale each row by the lcm of its denominators; row scaling keeps rank
    rows = []
    for row in m.convert_to(QQ).to_list():
        den = ZZ.one
        for x in row:
            den = ZZ.lcm(den, QQ.denom(x))
        rows.append([QQ.numer(x * den) for x in row])
    return DomainMatrix(rows, m.shape, ZZ)


def rank(m):
    """Rank of ``m`` over the rationals.

    Denominators are cleared row by row and the integer matrix is reduced
    with fraction-free elimination.
    """
    nrows, ncols = m.shape
    if not nrows or not ncols:
        return 0
    if m.domain != ZZ:
        m = _integral(m)
    _, _, pivots = m.rref_den()
    return len(pivots)


def _nullspace_from_rref(rows, pivots, ncols):
    pivots = [c for c in pivots if c < ncols]
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = [QQ.zero] * ncols
        vec[free] = QQ.one
        for i, c in enumerate(pivots):
            vec[c] = -rows[i][free]
        basis.append(tuple(QQ.to_sympy(x) for x in vec))
    return basis


def solve(m, rhs, nullspace=False):
    """Solve ``m x = rhs`` exactly.

    Returns one solution as a tuple of rationals, or ``None`` when the system
    is inconsistent. With ``nullspace=True`` a pair ``(solution, basis)`` is
    returned instead, ``basis`` spanning the nullspace of ``m`` so that
    callers can assert uniqueness.
    """
    nrows, ncols = m.shape
    if len(rhs) != nrows:
        raise ArgumentError(
            f"right hand side has {len(rhs)} entries, matrix has {nrows} rows")

    if not nrows:
        solution = tuple(Rational(0) for _ in range(ncols))
        basis = [tuple(Rational(int(i == j)) for j in range(ncols))
                 for i in range(ncols)]
        return (solution, basis) if nullspace else solution

    aug = [row + [QQ.convert(to_rational(b))]
           for row, b in zip(m.convert_to(QQ).to_list(), rhs)]
    reduced, pivots = DomainMatrix(aug, (nrows, ncols + 1), QQ).rref()
    rows = reduced.to_list()

    if ncols in pivots:
        solution = None
    else:
        vec = [QQ.zero] * ncols
        for i, c in enumerate(pivots):
            vec[c] = rows[i][ncols]
        solution = tuple(QQ.to_sympy(x) for x in vec)

    if not nullspace:
        return solution
    return solution, _nullspace_from_rref(rows, pivots, ncols)


def nullspace(m):
    """Basis of ``{x : m x = 0}`` as tuples of rationals."""
    _, basis = solve(m, [0] * m.shape[0], nullspace=True)
    return basis


@functools.lru_cache(maxsize=None)
def polynomial_ring(nvars):
    """The ring ``QQ[x1, ..., xn]`` with graded lexicographic order."""
    if nvars < 1:
        raise ArgumentError("a polynomial ring needs at least one variable")
    return PolyRing([f"x{i + 1}" for i in range(nvars)], QQ, grlex)


def linear_polynomial(coeffs, ring=None):
    """The linear polynomial ``sum(c_i * x_i)``."""
    if ring is None:
        ring = polynomial_ring(len(coeffs))
    if len(coeffs) != ring.ngens:
        raise ArgumentError(
            f"{len(coeffs)} coefficients for {ring.ngens} variables")
    terms = {}
    for i, c in enumerate(coeffs):
        c = QQ.convert(to_rational(c))
        if c:
            monom = tuple(int(i == j) for j in range(ring.ngens))
            terms[monom] = c
    return ring.from_dict(terms)


def poly_mul(a, b):
    """Exact product of two polynomials of the same ring."""
    if a.ring != b.ring:
        raise ArgumentError(
            f"cannot multiply polynomials in {a.ring.ngens} and "
            f"{b.ring.ngens} variables")
    return a * b


def polys_to_matrix(polys):
    """Coefficient matrix of ``polys``.

    Row ``i`` holds the coefficients of ``polys[i]``; columns are the
    occurring monomials in descending graded lexicographic order. The rank of
    the result is the dimension of the span of ``polys``.
    """
    polys = list(polys)
    if not polys:
        return DomainMatrix.zeros((0, 0), QQ)
    ring = polys[0].ring
    for p in polys[1:]:
        if p.ring != ring:
            raise ArgumentError("polynomials from different rings")

    monoms = set()
    for p in polys:
        monoms.update(p.keys())
    monoms = sorted(monoms, key=grlex, reverse=True)
    if not monoms:
        return DomainMatrix.zeros((len(polys), 0), QQ)

    rows = [[p.get(mon, QQ.zero) for mon in monoms] for p in polys]
    logger.debug("coefficient matrix %dx%d", len(rows), len(monoms))
    return DomainMatrix(rows, (len(rows), len(monoms)), QQ)


def span_rank(polys):
    """Dimension of the rational span of ``polys``."""
    return rank(polys_to_matrix(polys))
