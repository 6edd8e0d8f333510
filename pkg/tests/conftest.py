import asyncio
import gc

import pytest

from reciprocals import new_arrangement
from reciprocals.series import parse_builtin

try:
    import uvloop
except ImportError:  # pragma: no cover
    uvloop = None


# builtin spec -> highest degree the oracle checks by default
SUITE = {
    'braid:3': 4,
    'boolean:2': 4,
    'boolean:3': 4,
    'generic:4,2': 4,
    'generic:5,2': 4,
    'generic:5,3': 3,
}


def pytest_generate_tests(metafunc):
    if 'loop_type' in metafunc.fixturenames:
        loop_type = ['asyncio', 'uvloop'] if uvloop else ['asyncio']
        metafunc.parametrize("loop_type", loop_type)

    if 'suite_spec' in metafunc.fixturenames:
        specs = list(metafunc.config.getoption("builtin")) or list(SUITE)
        for spec in specs:
            assert ':' in spec, f"{spec!r} is not a builtin spec"
        assert len(specs) == len(set(specs)), \
            "builtin arrangements are not unique"
        metafunc.parametrize("suite_spec", specs, ids=specs,
                             scope="session")


@pytest.fixture(scope='session')
def suite_arrangement(suite_spec):
    return parse_builtin(suite_spec)


@pytest.fixture(scope='session')
def suite_max_degree(request, suite_spec):
    limit = request.config.getoption("max_degree")
    default = SUITE.get(suite_spec, 3)
    return default if limit is None else min(default, limit)


@pytest.fixture(scope='session')
def braid3():
    return parse_builtin('braid:3')


@pytest.fixture(scope='session')
def boolean2():
    return parse_builtin('boolean:2')


@pytest.fixture
def arrangement_creator():
    def f(dim, *forms):
        return new_arrangement(dim, forms)
    return f


@pytest.fixture
def loop(request, loop_type):
    asyncio.set_event_loop(None)

    if uvloop and loop_type == 'uvloop':
        loop = uvloop.new_event_loop()
    else:
        loop = asyncio.new_event_loop()

    yield loop

    if not loop.is_closed():
        loop.call_soon(loop.stop)
        loop.run_forever()
        loop.close()
    gc.collect()
    asyncio.set_event_loop(None)


@pytest.hookimpl(tryfirst=True)
def pytest_pycollect_makeitem(collector, name, obj):
    if collector.funcnamefilter(name):
        if not callable(obj):
            return
        item = pytest.Function.from_parent(collector, name=name)
        if 'run_loop' in item.keywords:
            return list(collector._genfunctions(name, obj))


@pytest.hookimpl(tryfirst=True)
def pytest_pyfunc_call(pyfuncitem):
    """
    Run asyncio marked test functions in an event loop instead of a normal
    function call.
    """
    if 'run_loop' in pyfuncitem.keywords:
        funcargs = pyfuncitem.funcargs
        loop = funcargs['loop']
        testargs = {arg: funcargs[arg]
                    for arg in pyfuncitem._fixtureinfo.argnames}
        loop.run_until_complete(pyfuncitem.obj(**testargs))
        return True


def pytest_runtest_setup(item):
    if 'run_loop' in item.keywords and 'loop' not in item.fixturenames:
        # inject an event loop fixture for all async tests
        item.fixturenames.append('loop')


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "run_loop"
    )
    config.addinivalue_line(
        "markers",
        "slow: oracle checks on the whole acceptance suite"
    )


def pytest_addoption(parser):
    parser.addoption(
        "--builtin",
        action="append",
        default=[],
        help="builtin arrangements to run the suite on: name:params",
    )
    parser.addoption(
        "--max-degree",
        type=int,
        default=None,
        help="lower the highest oracle degree checked on the suite",
    )
