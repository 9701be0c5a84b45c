# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later


import asyncio
import sys
from typing import Any, Callable, Coroutine, NoReturn

from rich.console import Console

from .errors import RedError
from .timer import Timer

DEFAULT_VERBOSITY = 0
DEFAULT_BUDGET = 200


class CLIError(RedError):
    pass


runner_func = Callable[[Console, Console], Coroutine[Any, Any, int | None]]


class CLIRunner:
    @staticmethod
    def run(func: runner_func) -> NoReturn:
        console = Console(log_path=False)
        error_console = Console(file=sys.stderr, log_path=False)
        try:
            with Timer() as timer:
                exit_code = asyncio.run(func(console, error_console))

            console.log(
                f"Done. Elapsed time: {timer.elapsed_time:0.4f} seconds"
            )
            sys.exit(exit_code or 0)
        except KeyboardInterrupt:
            # just exit
            sys.exit(1)
        except RedError as e:
            error_console.print(f"Error: {e}")
            for note in getattr(e, "__notes__", ()):
                error_console.print(f"  {note}")
            sys.exit(2)
