class _PoolContextManager:
    """Awaitable that also works as ``async with create_pool(...) as pool``.

    Leaving the block normally drains running jobs; leaving it with an
    exception terminates the pool and drops queued work.
    """

    __slots__ = ('_coro', '_obj')

    def __init__(self, coro):
        self._coro = coro
        self._obj = None

    def __await__(self):
        return self._coro.__await__()

    async def __aenter__(self):
        self._obj = await self._coro
        return self._obj

    async def __aexit__(self, exc_type, exc, tb):
        if exc_type is not None:
            self._obj.terminate()
        else:
            self._obj.close()
        await self._obj.wait_closed()
        self._obj = None
