"""Cooperative wall-clock limits for the exponential solvers."""

from __future__ import annotations

import time


class ComputeTimeout(Exception):
    """Raised by a solver whose :class:`Deadline` has passed."""


class Deadline:
    __slots__ = ("seconds", "expires")

    def __init__(self, seconds: float):
        self.seconds = seconds
        self.expires = time.monotonic() + seconds

    def check(self) -> None:
        if time.monotonic() > self.expires:
            raise ComputeTimeout(f"exceeded {self.seconds:g} s")


def check(deadline: Deadline | None) -> None:
    if deadline is not None:
        deadline.check()
