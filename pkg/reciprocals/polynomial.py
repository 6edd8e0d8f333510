"""Integer polynomials and truncated power series in one variable."""
import math

from sympy.polys.densearith import dup_add, dup_mul
from sympy.polys.domains import ZZ

from .exc import ArgumentError


def binomial(n, k):
    """Binomial coefficient with ``C(n, 0) = 1`` for every ``n``.

    ``C(n, k)`` is zero for ``k < 0`` and for ``0 <= n < k``. Negative ``n``
    with positive ``k`` is not needed by any formula here and is refused.
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    if n < 0:
        raise ArgumentError(f"binomial({n}, {k}) is not supported")
    return math.comb(n, k)


def _trim(coeffs):
    coeffs = [int(c) for c in coeffs]
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs) or (0,)


class UnivariatePolynomial:
    """Polynomial with integer coefficients, ``coeffs[k]`` multiplying t^k."""

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs):
        self._coeffs = _trim(coeffs)

    @classmethod
    def one(cls):
        return cls((1,))

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        if self._coeffs == (0,):
            return -1
        return len(self._coeffs) - 1

    def __getitem__(self, k):
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return 0

    def __iter__(self):
        return iter(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def _dense(self):
        # sympy's dense representation stores the leading coefficient first
        if self._coeffs == (0,):
            return []
        return [ZZ(c) for c in reversed(self._coeffs)]

    def __mul__(self, other):
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return UnivariatePolynomial(
            reversed(dup_mul(self._dense(), other._dense(), ZZ)))

    def __add__(self, other):
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return UnivariatePolynomial(
            reversed(dup_add(self._dense(), other._dense(), ZZ)))

    def __call__(self, t):
        return sum(c * t ** k for k, c in enumerate(self._coeffs))

    def __eq__(self, other):
        if isinstance(other, UnivariatePolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (tuple, list)):
            return self._coeffs == _trim(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"UnivariatePolynomial({list(self._coeffs)!r})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            mono = '' if k == 0 else ('t' if k == 1 else f't^{k}')
            if abs(c) != 1 or not mono:
                coef = str(c)
            else:
                coef = '-' if c < 0 else ''
            terms.append(f"{coef}{mono}")
        return ' + '.join(terms).replace('+ -', '- ') or '0'


class TruncatedSeries:
    """Power series with integer coefficients known up to ``t^order``."""

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs):
        self._coeffs = tuple(int(c) for c in coeffs)
        if not self._coeffs:
            raise ArgumentError("a truncated series needs at least t^0")

    @classmethod
    def expand(cls, numerator, k, order):
        """Expand ``numerator * (1 - t)^(-k)`` up to ``t^order``.

        Uses ``(1 - t)^(-k) = sum C(p + k - 1, k - 1) t^p``.
        """
        if order < 0:
            raise ArgumentError("truncation order must be nonnegative")
        if k < 0:
            raise ArgumentError("only nonpositive powers of (1 - t) expand")
        coeffs = []
        for p in range(order + 1):
            if k == 0:
                coeffs.append(numerator[p])
                continue
            coeffs.append(sum(numerator[i] * binomial(p - i + k - 1, k - 1)
                              for i in range(min(p, numerator.degree) + 1)))
        return cls(coeffs)

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def order(self):
        """Truncation order N; coefficients of t^0 .. t^N are known."""
        return len(self._coeffs) - 1

    def __getitem__(self, p):
        return self._coeffs[p]

    def __iter__(self):
        return iter(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self._coeffs == other._coeffs
        if isinstance(other, (tuple, list)):
            return self._coeffs == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"TruncatedSeries({list(self._coeffs)!r})"

    def __str__(self):
        return ' '.join(str(c) for c in self._coeffs)
