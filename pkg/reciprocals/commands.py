"""Command implementations behind the ``reciprocals`` CLI.

:func:`run_command` returns a :class:`CommandResult` holding the exit status,
a JSON-ready payload and the text report; printing is left to the caller.
Form indices in payloads and reports are 1-based.
"""
import asyncio
import sys
from collections import namedtuple

from .arrangement import build_lattice, poincare_polynomial
from .config import parse_arrangement_file
from .exc import ArgumentError, ParseError
from .log import logger
from .nbc import broken_circuits, check_nbc_count, nbc_sets
from .oracle import Oracle
from .pool import create_pool, verify_concurrently
from .series import (free_poincare_series, generic_series, parse_builtin,
                     series_of_c)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

CommandResult = namedtuple('CommandResult', 'status payload lines')


def _one_based(indices):
    return [i + 1 for i in indices]


def _fmt_set(indices):
    return ','.join(str(i) for i in _one_based(indices)) or '-'


def _fmt_tuple(indices):
    return '(' + ','.join(str(i) for i in _one_based(indices)) + ')'


def _decode(data):
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as e:
        lineno = data.count(b'\n', 0, e.start) + 1
        raise ParseError(lineno, f"not valid UTF-8: {e.reason}") from e


def _read_stdin():
    stream = getattr(sys.stdin, 'buffer', None)
    if stream is None:
        return sys.stdin.read()
    return _decode(stream.read())


def load_arrangement(cfg):
    """The arrangement named by ``cfg``, reordered if an order is given."""
    if cfg.builtin is not None:
        arr = parse_builtin(cfg.builtin)
    elif cfg.source == '-':
        arr = parse_arrangement_file(_read_stdin())
    else:
        try:
            with open(cfg.source, 'rb') as f:
                data = f.read()
        except OSError as e:
            raise ArgumentError(f"cannot read {cfg.source}: {e}") from e
        arr = parse_arrangement_file(_decode(data))
    if cfg.order is not None:
        arr = arr.permuted(cfg.order)
    logger.debug("loaded %r", arr)
    return arr


def _lattice(cfg, arr):
    lat = build_lattice(arr)
    flats = [{'id': x.id, 'codim': x.codim, 'mobius': x.mobius,
              'support': _one_based(x.support)} for x in lat.flats]
    lines = ['# id codim mobius support']
    lines += [f"{x.id} {x.codim} {x.mobius} {_fmt_set(x.support)}"
              for x in lat.flats]
    return CommandResult(EXIT_OK, {'flats': flats}, lines)


def _poincare(cfg, arr):
    poly = poincare_polynomial(arr)
    return CommandResult(EXIT_OK, {'coefficients': list(poly.coeffs)},
                         [' '.join(str(c) for c in poly.coeffs)])


def _nbc(cfg, arr):
    lat = build_lattice(arr)
    sets = nbc_sets(arr, lat)
    report = check_nbc_count(arr, lat, sets)
    payload = report.to_dict()
    payload['broken_circuits'] = [_one_based(sorted(b))
                                  for b in broken_circuits(arr)]
    payload['counts'] = report.counts_by_codim()
    for entry in payload['flats']:
        entry['support'] = _one_based(entry['support'])
        entry['sets'] = [_one_based(s.indices) for s in sets[entry['id']]]

    lines = []
    for row in report.rows:
        x = row.flat
        shown = ' '.join(_fmt_tuple(s.indices) for s in sets[x.id])
        mark = 'ok' if row.passed else 'FAIL'
        lines.append(f"flat {x.id} codim {x.codim} mobius {x.mobius} "
                     f"count {row.count} {mark}: {shown}")
    lines.append('counts ' + ' '.join(str(c) for c in payload['counts']))
    if report.passed:
        lines.append('all checks passed')
        return CommandResult(EXIT_OK, payload, lines)
    bad = report.failures[0]
    lines.append(f"FAILED: flat {bad.flat.id} has {bad.count} nbc sets, "
                 f"expected {bad.expected}")
    return CommandResult(EXIT_FAILED, payload, lines)


def _series(cfg, arr):
    if cfg.free:
        series = free_poincare_series(cfg.free, cfg.degree)
    elif cfg.generic:
        n, l = cfg.generic
        series = generic_series(n, l, cfg.degree)
    else:
        series = series_of_c(arr, cfg.degree)
    return CommandResult(EXIT_OK, {'coefficients': list(series.coeffs)},
                         [str(series)])


async def _verify_with_pool(arr, cfg):
    async with create_pool(maxsize=cfg.jobs) as pool:
        return await verify_concurrently(arr, cfg.max_degree, pool,
                                         cfg.budget)


def _verify(cfg, arr):
    if cfg.jobs > 1:
        report = asyncio.run(_verify_with_pool(arr, cfg))
    else:
        report = Oracle(arr, cfg.budget).verify_all(cfg.max_degree)
    lines = []
    for r in report.rows:
        dims = sorted((r.flat_dims or {}).items())
        flats = ','.join(str(d) for _, d in dims)
        lines.append(f"degree {r.degree}: C {r.dim_c} AO {r.dim_ao} "
                     f"J {r.dim_j} dC {r.dim_del_plus_c} flats {flats}")
    if report.passed:
        lines.append(f"all {len(report.checks)} checks passed")
        return CommandResult(EXIT_OK, report.to_dict(), lines)
    bad = report.first_failure
    where = f" flat {bad.flat}" if bad.flat is not None else ''
    lines.append(f"FAILED: degree {bad.degree}{where} {bad.clause}: "
                 f"expected {bad.expected}, got {bad.actual}")
    return CommandResult(EXIT_FAILED, report.to_dict(), lines)


def _operator(exponents):
    parts = []
    for k, e in enumerate(exponents):
        if e == 1:
            parts.append(f"D{k + 1}")
        elif e:
            parts.append(f"D{k + 1}^{e}")
    return '*'.join(parts)


def _decompose(cfg, arr):
    target = [i - 1 for i in cfg.target]
    if any(not 0 <= i < len(arr) for i in target):
        raise ArgumentError(
            f"tuple indices must lie in 1..{len(arr)}, got {cfg.target}")
    oracle = Oracle(arr, cfg.budget)
    dec = oracle.jk_decompose(target)
    ok = (oracle.element_numerator(dec.expand(), dec.degree)
          == oracle.numerator(dec.target))

    payload = {
        'target': _one_based(dec.target),
        'terms': [{'basis': t.basis + 1, 'nbc': _one_based(t.nbc),
                   'flat': t.flat, 'exponents': list(t.exponents),
                   'coefficient': str(t.coefficient)} for t in dec.terms],
        'directions': {str(f): [[str(c) for c in v] for v in vs]
                       for f, vs in dec.directions.items() if vs},
        'residue': (None if dec.residue is None else
                    [{'nbc': _one_based(k), 'coefficient': str(c)}
                     for k, c in sorted(dec.residue.items())]),
        'reproduced': ok,
    }
    lines = [f"target {_fmt_tuple(dec.target)}"]
    for t in dec.terms:
        op = _operator(t.exponents)
        op = f"{op} " if op else ''
        lines.append(f"{t.coefficient} * {op}{_fmt_tuple(t.nbc)} "
                     f"[flat {t.flat}]")
    if dec.residue is not None:
        lines.append('residue ' + ' '.join(
            f"{_fmt_tuple(k)}:{c}" for k, c in sorted(dec.residue.items())))
    lines.append('reproduced' if ok else 'FAILED: expansion differs from '
                                         'the target')
    return CommandResult(EXIT_OK if ok else EXIT_FAILED, payload, lines)


_HANDLERS = {
    'lattice': _lattice,
    'poincare': _poincare,
    'nbc': _nbc,
    'series': _series,
    'verify': _verify,
    'decompose': _decompose,
}


def run_command(cfg):
    """Run the command described by ``cfg``."""
    if cfg.command == 'series' and (cfg.free or cfg.generic):
        arr = None
    else:
        arr = load_arrangement(cfg)
    return _HANDLERS[cfg.command](cfg, arr)
