"""Work queue for trial coroutines."""

from __future__ import annotations

import asyncio
from collections.abc import Coroutine, Hashable
import time
from typing import Any

from ..exceptions import GraphonExecutionStillInProgress
from .logger import LOGGER


class QueueManager:
    """Labelled coroutines, executed together and reported per label."""

    def __init__(self) -> None:
        self.queue: list[tuple[Hashable, Coroutine]] = []
        self.running = False

    @property
    def pending_tasks(self) -> int:
        """Return a count of pending tasks in the queue."""
        return len(self.queue)

    @property
    def has_pending_tasks(self) -> bool:
        """Return True if there are pending tasks in the queue."""
        return bool(self.queue)

    def clear(self) -> None:
        """Drop every pending task without running it."""
        for _, task in self.queue:
            task.close()
        self.queue.clear()

    def add(self, label: Hashable, task: Coroutine) -> None:
        """Queue a task under a label, labels need not be unique."""
        self.queue.append((label, task))

    async def execute(self, number_of_tasks: int | None = None) -> list[tuple[Hashable, Any]]:
        """Run the first number_of_tasks tasks (all when None).

        Returns (label, result) pairs in queue order. A task that raised has
        its exception as result.
        """
        if self.running:
            LOGGER.debug("<QueueManager> Execution is already running")
            raise GraphonExecutionStillInProgress
        if not self.queue:
            LOGGER.debug("<QueueManager> The queue is empty")
            return []

        self.running = True
        batch = self.queue[:number_of_tasks] if number_of_tasks else list(self.queue)
        del self.queue[: len(batch)]
        LOGGER.debug("<QueueManager> Starting queue execution for %s tasks", len(batch))
        started = time.monotonic()
        try:
            results = await asyncio.gather(*(task for _, task in batch), return_exceptions=True)
        finally:
            self.running = False

        for (label, _), result in zip(batch, results, strict=True):
            if isinstance(result, Exception):
                LOGGER.error("<QueueManager> %s failed: %s", label, result)
        LOGGER.debug(
            "<QueueManager> %s tasks finished in %.2f seconds, %s remaining",
            len(batch),
            time.monotonic() - started,
            len(self.queue),
        )
        return [(label, result) for (label, _), result in zip(batch, results, strict=True)]
