import asyncio
import concurrent.futures
import functools
import os

from .exc import ArgumentError
from .log import logger
from .oracle import DEFAULT_BUDGET, GradedReport, degree_report
from .utils import _PoolContextManager

EXECUTORS = ('process', 'thread')


def create_pool(maxsize=None, executor='process', echo=False, loop=None):
    """Create a :class:`Pool` running at most ``maxsize`` jobs at once.

    ``executor`` is ``'process'`` for CPU bound oracle work or ``'thread'``.
    The result can be awaited or used as an async context manager.
    """
    coro = _create_pool(maxsize=maxsize, executor=executor, echo=echo,
                        loop=loop)
    return _PoolContextManager(coro)


async def _create_pool(maxsize=None, executor='process', echo=False,
                       loop=None):
    if loop is None:
        loop = asyncio.get_running_loop()
    return Pool(maxsize=maxsize, executor=executor, echo=echo, loop=loop)


class Pool:
    """Bounded pool of oracle jobs"""

    def __init__(self, maxsize, executor, echo, loop):
        if maxsize is None:
            maxsize = os.cpu_count() or 1
        if maxsize < 1:
            raise ArgumentError("maxsize should be at least 1")
        if executor not in EXECUTORS:
            raise ArgumentError(
                f"executor should be one of {', '.join(EXECUTORS)}")
        self._maxsize = maxsize
        self._kind = executor
        self._loop = loop
        self._echo = echo
        if executor == 'process':
            self._executor = concurrent.futures.ProcessPoolExecutor(maxsize)
        else:
            self._executor = concurrent.futures.ThreadPoolExecutor(maxsize)
        self._cond = asyncio.Condition()
        self._running = set()
        self._closing = False
        self._closed = False

    @property
    def echo(self):
        return self._echo

    @property
    def executor(self):
        return self._kind

    @property
    def maxsize(self):
        return self._maxsize

    @property
    def size(self):
        """Number of jobs currently running."""
        return len(self._running)

    @property
    def freesize(self):
        return self._maxsize - len(self._running)

    @property
    def closed(self):
        """
        The readonly property that returns ``True`` if the pool is closed.
        """
        return self._closed

    async def run(self, fn, *args):
        """Run ``fn(*args)`` on a worker once a slot is free."""
        if self._closing:
            raise RuntimeError("Cannot run jobs after closing pool")
        async with self._cond:
            while len(self._running) >= self._maxsize:
                await self._cond.wait()
            if self._closing:
                raise RuntimeError("Cannot run jobs after closing pool")
            fut = self._loop.run_in_executor(
                self._executor, functools.partial(fn, *args))
            self._running.add(fut)
        if self._echo:
            logger.info("job %s%r started", getattr(fn, '__name__', fn), args)
        try:
            return await fut
        finally:
            async with self._cond:
                self._running.discard(fut)
                self._cond.notify_all()

    def close(self):
        """Close pool.

        Running jobs are allowed to finish; new jobs are refused.
        """
        if self._closed:
            return
        self._closing = True

    def terminate(self):
        """Terminate pool.

        Close the pool and cancel every job that has not started yet.
        """
        self.close()
        for fut in list(self._running):
            fut.cancel()
        self._executor.shutdown(wait=False, cancel_futures=True)

    async def wait_closed(self):
        """Wait for running jobs and release the workers."""
        if self._closed:
            return
        if not self._closing:
            raise RuntimeError(".wait_closed() should be called "
                               "after .close()")
        async with self._cond:
            while self._running:
                await self._cond.wait()
        await self._loop.run_in_executor(
            None, functools.partial(self._executor.shutdown, wait=True))
        self._closed = True

    async def __aenter__(self):
        return self

    async def __aexit__(self, exc_type, exc_val, exc_tb):
        self.close()
        await self.wait_closed()


async def verify_concurrently(arr, max_degree, pool, budget=DEFAULT_BUDGET):
    """Run the full oracle suite with one pool job per degree.

    Reports are merged in degree order, so the result equals the sequential
    :func:`~reciprocals.oracle.verify_all`.
    """
    if max_degree < 0:
        raise ArgumentError("max_degree must be nonnegative")
    reports = await asyncio.gather(
        *[pool.run(degree_report, arr, p, budget)
          for p in range(max_degree + 1)])
    result = GradedReport()
    for report in reports:
        result = result.merge(report)
    return result
