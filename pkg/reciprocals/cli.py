"""The ``reciprocals`` command line tool."""
import json
import logging

import click

from ._version import version
from .commands import EXIT_FAILED, EXIT_INPUT, run_command
from .config import (DEFAULT_MAX_DEGREE, COMMANDS, RunConfig,
                     read_defaults)
from .exc import ArgumentError, Error, TooLargeError
from .oracle import DEFAULT_BUDGET
from .series import DEFAULT_DEGREE


def _int_list(ctx, param, value):
    if value is None:
        return None
    try:
        return [int(v) for v in value.split(',') if v.strip()]
    except ValueError:
        raise click.BadParameter(
            f"expected comma separated integers, got {value!r}")


def _zero_based(ctx, param, value):
    value = _int_list(ctx, param, value)
    if value is None:
        return None
    if any(v < 1 for v in value):
        raise click.BadParameter("form indices start at 1")
    return [v - 1 for v in value]


_input_options = [
    click.argument('source', required=False,
                   type=click.Path(dir_okay=False, allow_dash=True)),
    click.option('--builtin', metavar='NAME:PARAMS',
                 help='Builtin family, e.g. braid:3 or generic:5,2.'),
    click.option('--order', callback=_zero_based, metavar='I,J,...',
                 help='Linear order of the forms, 1-based.'),
    click.option('--json', 'json_output', is_flag=True,
                 help='Emit the report as JSON.'),
    click.option('--budget', type=int, default=DEFAULT_BUDGET,
                 show_default=True,
                 help='Largest oracle matrix, in entries.'),
]


def input_options(f):
    for option in reversed(_input_options):
        f = option(f)
    return f


def _configure_logging(verbose):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, format='%(levelname)s %(name)s: %(message)s')


def _execute(command, json_output, **options):
    """Build the config, run the command and exit with its status."""
    ctx = click.get_current_context()
    try:
        cfg = RunConfig(command,
                        output_format='json' if json_output else 'text',
                        **options)
        result = run_command(cfg)
    except (ArgumentError, TooLargeError) as e:
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_INPUT)
    except Error as e:
        click.echo(f"FAILED: {e}", err=True)
        ctx.exit(EXIT_FAILED)
    if cfg.output_format == 'json':
        click.echo(json.dumps(result.payload, indent=2))
    else:
        for line in result.lines:
            click.echo(line)
    ctx.exit(result.status)


@click.group(name='reciprocals')
@click.version_option(version, prog_name='reciprocals')
@click.option('-v', '--verbose', count=True,
              help='Log to stderr; repeat for debug output.')
@click.option('--defaults-file', type=click.Path(dir_okay=False),
              help='INI file with option defaults.')
@click.option('--defaults-group', default='reciprocals', show_default=True,
              help='Section of the defaults file to read.')
@click.pass_context
def main(ctx, verbose, defaults_file, defaults_group):
    """Arrangements of hyperplanes and the algebra of reciprocals of their
    defining forms.
    """
    _configure_logging(verbose)
    if defaults_file is None:
        return
    try:
        defaults = read_defaults(defaults_file, defaults_group)
    except ArgumentError as e:
        raise click.UsageError(str(e))
    if 'output_format' in defaults:
        defaults['json_output'] = defaults.pop('output_format') == 'json'
    ctx.default_map = {name: dict(defaults) for name in COMMANDS}


@main.command()
@input_options
def lattice(**options):
    """Flats with their codimension and Möbius value."""
    _execute('lattice', **options)


@main.command()
@input_options
def poincare(**options):
    """Coefficients of the Poincaré polynomial."""
    _execute('poincare', **options)


@main.command()
@input_options
def nbc(**options):
    """nbc sets per flat, checked against |μ(X)|."""
    _execute('nbc', **options)


@main.command()
@input_options
@click.option('--degree', type=int, default=DEFAULT_DEGREE,
              show_default=True, help='Truncation order N.')
@click.option('--free', callback=_int_list, metavar='D1,...,DL',
              help='Closed form for a free arrangement with these exponents.')
@click.option('--generic', type=int, nargs=2, default=None,
              metavar='N L', help='Closed form for a generic arrangement.')
def series(**options):
    """Poincaré series of the algebra of reciprocals."""
    _execute('series', **options)


@main.command()
@input_options
@click.option('--max-degree', type=int, default=DEFAULT_MAX_DEGREE,
              show_default=True, help='Highest degree to check.')
@click.option('--jobs', type=int, default=1, show_default=True,
              help='Degrees checked in parallel worker processes.')
def verify(**options):
    """Run the brute-force oracle suite."""
    _execute('verify', **options)


@main.command()
@input_options
@click.option('--tuple', 'target', callback=_int_list, required=True,
              metavar='I1,I2,...', help='Forms of the reciprocal, 1-based.')
def decompose(**options):
    """Expand one reciprocal over the nbc basis."""
    _execute('decompose', **options)
