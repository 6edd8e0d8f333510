"""Central hyperplane arrangements and their intersection lattices."""
from sympy import Rational

from .exc import (ArgumentError, ArrangementError, ProportionalFormsError,
                  ZeroFormError)
from .linalg import (linear_polynomial, matrix, nullspace, polynomial_ring,
                     rank, to_rational)
from .log import logger
from .polynomial import UnivariatePolynomial


class LinearForm:
    """A nonzero linear form ``sum(c_i * x_i)`` with rational coefficients."""

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs):
        coeffs = tuple(to_rational(c) for c in coeffs)
        if not coeffs:
            raise ArgumentError("a linear form needs at least one coefficient")
        if not any(coeffs):
            raise ArrangementError("a linear form cannot be zero")
        self._coeffs = coeffs

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def dim(self):
        return len(self._coeffs)

    def normalized(self):
        """Coefficients scaled so that the first nonzero one is 1.

        Two forms are proportional exactly when their normalizations agree.
        """
        lead = next(c for c in self._coeffs if c)
        return tuple(c / lead for c in self._coeffs)

    def __call__(self, vector):
        if len(vector) != len(self._coeffs):
            raise ArgumentError(
                f"evaluating a form on {len(self._coeffs)} variables at a "
                f"vector of length {len(vector)}")
        return sum((c * to_rational(v) for c, v in zip(self._coeffs, vector)),
                   Rational(0))

    def to_polynomial(self, ring=None):
        return linear_polynomial(self._coeffs, ring)

    def __eq__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"LinearForm({[str(c) for c in self._coeffs]!r})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self._coeffs):
            if not c:
                continue
            var = f"x{i + 1}"
            if c == 1:
                terms.append(f"+ {var}")
            elif c == -1:
                terms.append(f"- {var}")
            elif c < 0:
                terms.append(f"- {-c}*{var}")
            else:
                terms.append(f"+ {c}*{var}")
        text = ' '.join(terms)
        return text[2:] if text.startswith('+ ') else '-' + text[2:]


class Arrangement:
    """An ordered set of pairwise non-proportional nonzero forms.

    Do not create an instance yourself, call :func:`new_arrangement`. The
    order of :attr:`forms` is the linear order used for broken circuits.
    """

    def __init__(self, dim, forms, names=None):
        self._dim = dim
        self._forms = tuple(forms)
        self._names = tuple(names) if names is not None else None
        self._ranks = {}

    @property
    def dim(self):
        """Ambient dimension ℓ."""
        return self._dim

    @property
    def forms(self):
        return self._forms

    @property
    def names(self):
        """Optional labels, one per form, or ``None``."""
        return self._names

    def __len__(self):
        return len(self._forms)

    def __iter__(self):
        return iter(self._forms)

    def __getitem__(self, i):
        return self._forms[i]

    def __eq__(self, other):
        if not isinstance(other, Arrangement):
            return NotImplemented
        return self._dim == other._dim and self._forms == other._forms

    def __hash__(self):
        return hash((self._dim, self._forms))

    def __repr__(self):
        return f"<Arrangement dim={self._dim} forms={len(self._forms)}>"

    def __getstate__(self):
        return {'dim': self._dim, 'forms': self._forms, 'names': self._names}

    def __setstate__(self, state):
        self.__init__(state['dim'], state['forms'], state['names'])

    def ring(self):
        """Polynomial ring of the ambient space."""
        return polynomial_ring(self._dim)

    def rank(self, indices=None):
        """Rank of the forms indexed by ``indices`` (all forms by default)."""
        key = (frozenset(range(len(self._forms))) if indices is None
               else frozenset(indices))
        try:
            return self._ranks[key]
        except KeyError:
            pass
        if not key:
            value = 0
        else:
            value = rank(matrix([self._forms[i].coeffs for i in sorted(key)]))
        self._ranks[key] = value
        return value

    def closure(self, indices):
        """Indices of all forms lying in the span of ``indices``.

        The result is the support of the flat cut out by ``indices``.
        """
        indices = frozenset(indices)
        r = self.rank(indices)
        return frozenset(i for i in range(len(self._forms))
                         if i in indices or self.rank(indices | {i}) == r)

    def is_independent(self, indices):
        indices = tuple(indices)
        return (len(set(indices)) == len(indices)
                and self.rank(indices) == len(indices))

    def permuted(self, order):
        """The same forms listed in ``order`` (a permutation of indices)."""
        order = tuple(order)
        if sorted(order) != list(range(len(self._forms))):
            raise ArgumentError(
                f"{list(order)} is not a permutation of "
                f"0..{len(self._forms) - 1}")
        names = (None if self._names is None
                 else [self._names[i] for i in order])
        return Arrangement(self._dim, [self._forms[i] for i in order], names)


def new_arrangement(dim, forms, names=None):
    """Validate ``forms`` and build an :class:`Arrangement`.

    ``forms`` may hold :class:`LinearForm` instances or sequences of
    rationals. Forms are kept in input order.
    """
    if not isinstance(dim, int) or dim < 1:
        raise ArgumentError(f"dimension must be a positive integer, "
                            f"got {dim!r}")
    checked = []
    seen = {}
    for index, form in enumerate(forms):
        coeffs = form.coeffs if isinstance(form, LinearForm) else tuple(form)
        if len(coeffs) != dim:
            raise ArgumentError(
                f"form {index} has {len(coeffs)} coefficients, expected {dim}")
        coeffs = tuple(to_rational(c) for c in coeffs)
        if not any(coeffs):
            raise ZeroFormError(index)
        form = LinearForm(coeffs)
        key = form.normalized()
        if key in seen:
            raise ProportionalFormsError(seen[key], index)
        seen[key] = index
        checked.append(form)
    if names is not None and len(names) != len(checked):
        raise ArgumentError(
            f"{len(names)} names given for {len(checked)} forms")
    return Arrangement(dim, checked, names)


class Flat:
    """An element X of the intersection lattice.

    ``support`` lists the indices of the forms vanishing on X, which
    identifies the flat; ``basis`` spans X inside V.
    """

    __slots__ = ('id', 'support', 'codim', 'basis', 'mobius')

    def __init__(self, id, support, codim, basis, mobius=None):
        self.id = id
        self.support = tuple(sorted(support))
        self.codim = codim
        self.basis = tuple(basis)
        self.mobius = mobius

    @property
    def dim(self):
        return len(self.basis)

    def __contains__(self, index):
        return index in self.support

    def __repr__(self):
        return (f"<Flat id={self.id} codim={self.codim} "
                f"support={list(self.support)} mobius={self.mobius}>")


class Lattice:
    """Intersection lattice ordered by reverse inclusion.

    Flats are sorted by codimension, then by support; ``flats[0]`` is V.
    """

    def __init__(self, flats):
        self._flats = tuple(flats)
        self._by_support = {frozenset(f.support): f for f in self._flats}

    @property
    def flats(self):
        return self._flats

    @property
    def has_mobius(self):
        return all(f.mobius is not None for f in self._flats)

    @property
    def rank(self):
        """Largest codimension of a flat, the rank of the arrangement."""
        return max(f.codim for f in self._flats)

    def __len__(self):
        return len(self._flats)

    def __iter__(self):
        return iter(self._flats)

    def __getitem__(self, i):
        return self._flats[i]

    def leq(self, x, y):
        """``x <= y``, that is X contains Y."""
        return set(x.support) <= set(y.support)

    def below(self, x):
        """All flats Y with ``Y < x``."""
        return [y for y in self._flats
                if y.id != x.id and self.leq(y, x)]

    def by_support(self, support):
        return self._by_support[frozenset(support)]

    def flat_of(self, arr, indices):
        """The flat V(ε) cut out by the forms ``indices``."""
        return self.by_support(arr.closure(indices))

    def top(self):
        """Flats of maximal codimension."""
        r = self.rank
        return [f for f in self._flats if f.codim == r]


def _subspace_basis(arr, support):
    if not support:
        return [tuple(Rational(int(i == j)) for j in range(arr.dim))
                for i in range(arr.dim)]
    return nullspace(matrix([arr[i].coeffs for i in sorted(support)]))


def intersection_lattice(arr):
    """Build L(Δ) level by level.

    Every flat of codimension k is intersected with each hyperplane not
    containing it; the result is closed and deduplicated by support.
    """
    level = {frozenset()}
    supports = [frozenset()]
    codim = 0
    while level:
        logger.debug("lattice: %d flats of codimension %d", len(level), codim)
        following = set()
        for support in level:
            for i in range(len(arr)):
                if i not in support:
                    following.add(arr.closure(support | {i}))
        codim += 1
        level = following
        supports.extend(sorted(following, key=sorted))

    flats = [Flat(i, s, arr.rank(s), _subspace_basis(arr, s))
             for i, s in enumerate(supports)]
    return Lattice(flats)


def mobius(lat):
    """Return a copy of ``lat`` with Möbius values filled in.

    μ(V) = 1 and μ(X) = -Σ_{Y < X} μ(Y), processed by codimension.
    """
    values = {}
    for x in lat.flats:
        if not x.support:
            values[x.id] = 1
        else:
            values[x.id] = -sum(values[y.id] for y in lat.below(x))
    return Lattice(Flat(x.id, x.support, x.codim, x.basis, values[x.id])
                   for x in lat.flats)


def build_lattice(arr):
    """Intersection lattice with Möbius values."""
    return mobius(intersection_lattice(arr))


def poincare_polynomial(arr, lat=None):
    """Σ_X μ(X) (-t)^codim X; coefficients are the Whitney numbers."""
    if lat is None or not lat.has_mobius:
        lat = build_lattice(arr)
    coeffs = [0] * (lat.rank + 1)
    for x in lat.flats:
        coeffs[x.codim] += (-1) ** x.codim * x.mobius
    return UnivariatePolynomial(coeffs)


def characteristic_polynomial(arr, lat=None):
    """Σ_X μ(X) t^dim X, coefficients listed from t^0 upwards."""
    if lat is None or not lat.has_mobius:
        lat = build_lattice(arr)
    coeffs = [0] * (arr.dim + 1)
    for x in lat.flats:
        coeffs[arr.dim - x.codim] += x.mobius
    return UnivariatePolynomial(coeffs)


def localization(arr, flat):
    """Δ_X: the forms vanishing on ``flat``, in their original order."""
    names = (None if arr.names is None
             else [arr.names[i] for i in flat.support])
    return Arrangement(arr.dim, [arr[i] for i in flat.support], names)
