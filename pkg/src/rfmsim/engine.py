"""Deterministic discrete-event engine on an integer-nanosecond clock.

Events at equal times run in insertion order, so a replay with the same
configuration and seed produces a byte-identical event sequence.
"""

from __future__ import annotations

import heapq
from typing import Callable


class SchedulingError(RuntimeError):
    """Raised when an event is scheduled in the past (a logic error)."""


class Simulator:
    """Single-owner event loop. All times are integer nanoseconds."""

    def __init__(self) -> None:
        self._now = 0
        self._seq = 0
        self._heap: list[tuple[int, int, Callable[[], None]]] = []

    @property
    def now(self) -> int:
        return self._now

    def schedule(self, at: int, action: Callable[[], None]) -> None:
        """Enqueue `action` to run at absolute time `at` (>= current clock)."""
        if at < self._now:
            raise SchedulingError(f"event in past: t={at} < clock={self._now}")
        heapq.heappush(self._heap, (at, self._seq, action))
        self._seq += 1

    def schedule_after(self, delay: int, action: Callable[[], None]) -> None:
        self.schedule(self._now + delay, action)

    def run_until(self, deadline: int) -> int:
        """Process every event with time <= deadline; clock ends at deadline.

        Events scheduled during processing are honored if they fall inside
        the deadline. The clock never regresses.
        """
        while self._heap and self._heap[0][0] <= deadline:
            at, _, action = heapq.heappop(self._heap)
            self._now = at
            action()
        if deadline > self._now:
            self._now = deadline
        return self._now

    def pending(self) -> int:
        """Number of queued events (diagnostic)."""
        return len(self._heap)
