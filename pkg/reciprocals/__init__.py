"""
reciprocals: hyperplane arrangements and the algebra generated by the
reciprocals of their defining linear forms.

Combinatorial invariants (intersection lattice, Möbius function, Poincaré
polynomial, nbc sets) are computed exactly, and an exact linear algebra
oracle checks the graded structure of the algebra on small arrangements.
"""

from .arrangement import (Arrangement, Flat, Lattice, LinearForm,
                          build_lattice, characteristic_polynomial,
                          intersection_lattice, localization, mobius,
                          new_arrangement, poincare_polynomial)
from .config import RunConfig, format_arrangement, parse_arrangement_file
from .commands import CommandResult, run_command
from .exc import (AmbiguousDecompositionError, ArgumentError,
                  ArrangementError, Error, NotGenericError, ParseError,
                  ProportionalFormsError, TooLargeError, VerificationError,
                  ZeroFormError)
from .nbc import (broken_circuits, check_nbc_count, circuits, nbc_sets)
from .oracle import (Decomposition, GradedReport, Oracle, ReciprocalTuple,
                     dim_ao, dim_c, dim_cx, dim_del_plus_c, dim_j,
                     enumerate_tuples, jk_decompose, verify_all,
                     verify_decomposition, verify_generators, verify_series)
from .polynomial import TruncatedSeries, UnivariatePolynomial, binomial
from .pool import Pool, create_pool, verify_concurrently
from .series import (builtin_arrangement, free_poincare_series,
                     generic_series, series_of_c)
from ._version import version

__version__ = version

__all__ = [

    # Errors
    'Error',
    'AmbiguousDecompositionError',
    'ArgumentError',
    'ArrangementError',
    'NotGenericError',
    'ParseError',
    'ProportionalFormsError',
    'TooLargeError',
    'VerificationError',
    'ZeroFormError',

    'Arrangement',
    'Flat',
    'Lattice',
    'LinearForm',
    'build_lattice',
    'characteristic_polynomial',
    'intersection_lattice',
    'localization',
    'mobius',
    'new_arrangement',
    'poincare_polynomial',

    'broken_circuits',
    'check_nbc_count',
    'circuits',
    'nbc_sets',

    'TruncatedSeries',
    'UnivariatePolynomial',
    'binomial',
    'builtin_arrangement',
    'free_poincare_series',
    'generic_series',
    'series_of_c',

    'Decomposition',
    'GradedReport',
    'Oracle',
    'ReciprocalTuple',
    'dim_ao',
    'dim_c',
    'dim_cx',
    'dim_del_plus_c',
    'dim_j',
    'enumerate_tuples',
    'jk_decompose',
    'verify_all',
    'verify_decomposition',
    'verify_generators',
    'verify_series',

    'Pool',
    'create_pool',
    'verify_concurrently',

    'CommandResult',
    'RunConfig',
    'format_arrangement',
    'parse_arrangement_file',
    'run_command',
]
