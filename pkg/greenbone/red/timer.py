# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import time
from types import TracebackType
from typing import ContextManager, Self

from .errors import RedError


class TimerError(RedError):
    pass


class Timer(ContextManager):
    """
    Wall clock timer based on `time.perf_counter`.

    Besides the classic start/stop usage the timer can be read while running
    via `elapsed`, which is how solvers stamp their trace records.
    """

    def __init__(self) -> None:
        self._start_time: float | None = None
        self.elapsed_time: float | None = None

    @property
    def running(self) -> bool:
        return self._start_time is not None

    @property
    def elapsed(self) -> float:
        """Seconds since `start` without stopping the timer"""

        if self._start_time is None:
            raise TimerError("Timer is not running.")

        return time.perf_counter() - self._start_time

    def start(self) -> Self:
        """Start a new timer"""

        if self._start_time is not None:
            raise TimerError("Timer is already running.")

        self._start_time = time.perf_counter()
        return self

    def stop(self) -> float:
        """Stop the timer, and report the elapsed time"""

        self.elapsed_time = self.elapsed
        self._start_time = None
        return self.elapsed_time

    def __enter__(self) -> Self:
        self.start()
        return self

    def __exit__(
        self,
        __exc_type: type[BaseException] | None,
        __exc_value: BaseException | None,
        __traceback: TracebackType | None,
    ) -> None:
        self.stop()
        return
