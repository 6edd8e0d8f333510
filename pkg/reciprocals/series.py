"""Poincaré series of the algebra generated by reciprocals of the forms.

The series is obtained from the Poincaré polynomial of the arrangement by
substituting t/(1 - t) for t; every power of t/(1 - t) is expanded with the
closed binomial form, so all arithmetic stays in the integers.
"""
from .arrangement import new_arrangement, poincare_polynomial
from .exc import ArgumentError, NotGenericError
from .polynomial import TruncatedSeries, UnivariatePolynomial, binomial

#: Default truncation order of emitted series.
DEFAULT_DEGREE = 10

FAMILIES = ('braid', 'boolean', 'generic')


def _check_order(order):
    if not isinstance(order, int) or order < 0:
        raise ArgumentError(f"truncation order must be >= 0, got {order!r}")


def substitute(poly, order):
    """Expand ``poly(t / (1 - t))`` up to ``t^order``.

    (t/(1-t))^k contributes C(p-1, k-1) to t^p for p >= k >= 1.
    """
    _check_order(order)
    coeffs = [poly[0]]
    for p in range(1, order + 1):
        coeffs.append(sum(poly[k] * binomial(p - 1, k - 1)
                          for k in range(1, min(p, poly.degree) + 1)))
    return TruncatedSeries(coeffs)


def series_of_c(arr, order=DEFAULT_DEGREE, lat=None):
    """Poincaré series of C(Δ) up to ``t^order``."""
    return substitute(poincare_polynomial(arr, lat), order)


def free_poincare_polynomial(exponents):
    """∏ (1 + d_i t) for a free arrangement with the given exponents."""
    result = UnivariatePolynomial.one()
    for d in exponents:
        if d < 0:
            raise ArgumentError(f"exponents are nonnegative, got {d}")
        result = result * UnivariatePolynomial((1, d))
    return result


def free_poincare_series(exponents, order=DEFAULT_DEGREE):
    """(1 - t)^(-ℓ) ∏ (1 + (d_i - 1) t) up to ``t^order``."""
    _check_order(order)
    exponents = list(exponents)
    numerator = UnivariatePolynomial.one()
    for d in exponents:
        if d < 0:
            raise ArgumentError(f"exponents are nonnegative, got {d}")
        numerator = numerator * UnivariatePolynomial((1, d - 1))
    return TruncatedSeries.expand(numerator, len(exponents), order)


def braid_series(l, order=DEFAULT_DEGREE):
    """(1 - t)^(-ℓ+1) (1 + t)(1 + 2t)...(1 + (ℓ-2)t) up to ``t^order``."""
    if l < 1:
        raise ArgumentError("braid arrangements need l >= 1")
    _check_order(order)
    numerator = UnivariatePolynomial.one()
    for k in range(1, l - 1):
        numerator = numerator * UnivariatePolynomial((1, k))
    return TruncatedSeries.expand(numerator, l - 1, order)


def _check_generic(n, l):
    if l < 1:
        raise ArgumentError("generic arrangements need l >= 1")
    if n < l:
        raise NotGenericError(
            f"a generic arrangement needs at least {l} forms, got {n}")


def generic_poincare_polynomial(n, l):
    """(1 + t) Σ_{i<ℓ} C(n-1, i) t^i."""
    _check_generic(n, l)
    return (UnivariatePolynomial((1, 1))
            * UnivariatePolynomial([binomial(n - 1, i) for i in range(l)]))


def generic_series(n, l, order=DEFAULT_DEGREE):
    """(1 - t)^(-ℓ) Σ_{i<ℓ} C(n-ℓ+i-1, i) t^i up to ``t^order``."""
    _check_generic(n, l)
    _check_order(order)
    numerator = UnivariatePolynomial(
        [binomial(n - l + i - 1, i) for i in range(l)])
    return TruncatedSeries.expand(numerator, l, order)


def binomial_identity(n, l, k):
    """Both sides of Σ_j (-1)^j C(n-1, k-j) C(ℓ-k+j-1, j) = C(n-ℓ+k-1, k).

    Valid for 0 <= k <= ℓ - 1 and n >= ℓ; it turns the generic Poincaré
    polynomial into the numerator of :func:`generic_series`.
    """
    if not 0 <= k < l or n < l:
        raise ArgumentError(f"identity needs 0 <= k < l <= n, got "
                            f"n={n} l={l} k={k}")
    lhs = sum((-1) ** j * binomial(n - 1, k - j) * binomial(l - k + j - 1, j)
              for j in range(k + 1))
    return lhs, binomial(n - l + k - 1, k)


def flat_series(codim, mobius_value, order=DEFAULT_DEGREE):
    """|μ(X)| t^c (1 - t)^(-c) for a flat of codimension c."""
    _check_order(order)
    numerator = UnivariatePolynomial([0] * codim + [abs(mobius_value)])
    return TruncatedSeries.expand(numerator, codim, order)


def builtin_arrangement(family, *params):
    """One of the builtin families.

    ``braid l``: all x_i - x_j, i < j, ordered by the gap j - i and then by
    i, so that x_1 - x_3 = (x_1 - x_2) + (x_2 - x_3) comes last for l = 3.
    ``boolean l``: the coordinate forms.
    ``generic n l``: the moment curve forms Σ_j i^(j-1) x_j for i = 1..n,
    any l of which are independent.
    """
    try:
        params = [int(p) for p in params]
    except (TypeError, ValueError) as e:
        raise ArgumentError(f"bad parameters for {family}: {params}") from e
    if any(p < 1 for p in params):
        raise ArgumentError(f"parameters of {family} must be >= 1")

    if family == 'braid' and len(params) == 1:
        l, = params
        forms = []
        for gap in range(1, l):
            for i in range(l - gap):
                j = i + gap
                forms.append([1 if k == i else -1 if k == j else 0
                              for k in range(l)])
        return new_arrangement(l, forms)
    if family == 'boolean' and len(params) == 1:
        l, = params
        return new_arrangement(
            l, [[int(i == k) for k in range(l)] for i in range(l)])
    if family == 'generic' and len(params) == 2:
        n, l = params
        _check_generic(n, l)
        return new_arrangement(
            l, [[i ** j for j in range(l)] for i in range(1, n + 1)])
    raise ArgumentError(f"unknown builtin family {family!r} with "
                        f"{len(params)} parameters")


def parse_builtin(text):
    """Parse ``name:params`` such as ``braid:4`` or ``generic:5,2``."""
    family, sep, params = text.partition(':')
    if not sep or family not in FAMILIES:
        raise ArgumentError(
            f"builtin must look like name:params with name one of "
            f"{', '.join(FAMILIES)}, got {text!r}")
    return builtin_arrangement(family, *params.split(','))
