"""Run configuration and the arrangement file format.

An arrangement file is line based; ``#`` starts a comment. The first
non-comment line holds the dimension ℓ, every further non-comment line the ℓ
coefficients of one form, written as integers or ``a/b``::

    # braid arrangement on three letters
    3
    1 -1 0
    0 1 -1
    1 0 -1
"""
import configparser
import os
import re

from sympy import Rational

from .arrangement import new_arrangement
from .exc import ArgumentError, ParseError
from .oracle import DEFAULT_BUDGET
from .series import DEFAULT_DEGREE

COMMANDS = ('lattice', 'poincare', 'nbc', 'series', 'verify', 'decompose')
FORMATS = ('text', 'json')

#: Default highest degree checked by ``verify``.
DEFAULT_MAX_DEGREE = 4

RE_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def _parse_rational(token, lineno):
    if not RE_RATIONAL.match(token):
        raise ParseError(lineno, f"malformed rational {token!r}")
    num, _, den = token.partition('/')
    if den and int(den) == 0:
        raise ParseError(lineno, f"zero denominator in {token!r}")
    return Rational(int(num), int(den) if den else 1)


def parse_arrangement_file(text):
    """Parse the text of an arrangement file into an arrangement.

    Grammar errors raise :class:`~reciprocals.exc.ParseError` with the line
    number; invalid arrangements raise the errors of
    :func:`~reciprocals.arrangement.new_arrangement`.
    """
    dim = None
    forms = []
    lineno = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if dim is None:
            if len(tokens) != 1 or not re.match(r"\d+\Z", tokens[0]):
                raise ParseError(
                    lineno, f"expected the dimension, got {line!r}")
            dim = int(tokens[0])
            if dim < 1:
                raise ParseError(lineno, "dimension must be at least 1")
            continue
        if len(tokens) != dim:
            raise ParseError(
                lineno, f"expected {dim} coefficients, got {len(tokens)}")
        forms.append([_parse_rational(t, lineno) for t in tokens])
    if dim is None:
        raise ParseError(max(lineno, 1), "empty arrangement file")
    return new_arrangement(dim, forms)


def format_arrangement(arr, comment=None):
    """Serialize ``arr`` in the format :func:`parse_arrangement_file` reads."""
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(str(arr.dim))
    for form in arr:
        lines.append(' '.join(str(c) for c in form.coeffs))
    return '\n'.join(lines) + '\n'


class RunConfig:
    """Everything one command invocation needs.

    ``source`` is a path (``-`` for standard input), ``builtin`` a family
    spec such as ``braid:3``; exactly one of them is set. ``order`` is an
    optional permutation of form indices, 0-based.
    """

    def __init__(self, command, source=None, builtin=None,
                 degree=DEFAULT_DEGREE, max_degree=DEFAULT_MAX_DEGREE,
                 order=None, output_format='text', budget=DEFAULT_BUDGET,
                 jobs=1, free=None, generic=None, target=None):
        if command not in COMMANDS:
            raise ArgumentError(f"unknown command {command!r}")
        if (source is None) == (builtin is None) and not (
                command == 'series' and (free or generic)):
            raise ArgumentError("give either an input file or a builtin")
        if degree < 0:
            raise ArgumentError("degree must be nonnegative")
        if max_degree < 0:
            raise ArgumentError("max degree must be nonnegative")
        if budget <= 0:
            raise ArgumentError("budget must be positive")
        if jobs < 1:
            raise ArgumentError("jobs must be at least 1")
        if output_format not in FORMATS:
            raise ArgumentError(f"unknown output format {output_format!r}")
        if command == 'decompose' and target is None:
            raise ArgumentError("decompose needs a tuple")
        self.command = command
        self.source = source
        self.builtin = builtin
        self.degree = degree
        self.max_degree = max_degree
        self.order = None if order is None else list(order)
        self.output_format = output_format
        self.budget = budget
        self.jobs = jobs
        self.free = None if free is None else list(free)
        self.generic = generic
        self.target = None if target is None else list(target)

    def __repr__(self):
        src = self.builtin if self.builtin is not None else self.source
        return f"<RunConfig {self.command} {src}>"


def read_defaults(read_default_file, read_default_group='reciprocals'):
    """Read option defaults from an INI file.

    Recognized keys are ``degree``, ``max-degree``, ``budget``, ``jobs`` and
    ``format``; missing keys are simply absent from the result.
    """
    cfg = configparser.RawConfigParser()
    cfg.read(os.path.expanduser(read_default_file))
    if not cfg.has_section(read_default_group):
        return {}
    section = cfg[read_default_group]
    defaults = {}
    try:
        for key, name in (('degree', 'degree'),
                          ('max-degree', 'max_degree'),
                          ('budget', 'budget'),
                          ('jobs', 'jobs')):
            if key in section:
                defaults[name] = section.getint(key)
    except ValueError as e:
        raise ArgumentError(f"{read_default_file}: {e}") from e
    if 'format' in section:
        defaults['output_format'] = section.get('format')
    return defaults
