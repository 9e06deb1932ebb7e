"""graphon_lab Decorators."""

from __future__ import annotations

import asyncio
from collections.abc import Awaitable, Callable
from functools import wraps
from typing import Any
from weakref import WeakKeyDictionary

from ..const import DEFAULT_CONCURRENT_TASKS


def concurrent(
    concurrenttasks: int = DEFAULT_CONCURRENT_TASKS,
) -> Callable[[Callable[..., Awaitable[Any]]], Callable[..., Awaitable[Any]]]:
    """Return a modified function that runs at most concurrenttasks at a time.

    One semaphore is kept per event loop, so the decorated function can be
    driven by successive asyncio.run calls.
    """
    semaphores: WeakKeyDictionary[asyncio.AbstractEventLoop, asyncio.Semaphore] = (
        WeakKeyDictionary()
    )

    def inner_function(function):
        @wraps(function)
        async def wrapper(*args, **kwargs):
            loop = asyncio.get_running_loop()
            if (max_concurrent := semaphores.get(loop)) is None:
                max_concurrent = semaphores[loop] = asyncio.Semaphore(concurrenttasks)

            async with max_concurrent:
                return await function(*args, **kwargs)

        return wrapper

    return inner_function
