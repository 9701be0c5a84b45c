# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from typing import Callable

import numpy as np

from ..errors import SolverError
from ..img.metrics import psnr
from ..img.models import Image, check_image
from ..problem import RedProblem
from ..timer import Timer
from .config import SolverConfig
from .trace import SolverTrace, TraceRecord, TraceStatus

RecordCallback = Callable[[TraceRecord], None]
"Called with every trace record as soon as it is available"


class TraceRecorder:
    """
    Writes the trace of a single solver run.

    Step evaluations are counted by the solver. Everything else the denoiser
    counter shows since the start of the run is reported as monitoring
    evaluations.
    """

    def __init__(
        self,
        solver: str,
        problem: RedProblem,
        *,
        reference: Image | None = None,
        on_record: RecordCallback | None = None,
    ) -> None:
        self.trace = SolverTrace(solver)
        self._problem = problem
        self._start_evals = problem.f.eval_count
        self._on_record = on_record
        self._reference: Image | None = None
        if reference is not None:
            reference = check_image(reference, "reference")
            if reference.shape != problem.shape:
                raise SolverError(
                    f"Reference shape {reference.shape} does not match the "
                    f"problem shape {problem.shape}"
                )
            self._reference = reference
        self._timer = Timer().start()

    def record(
        self,
        outer_iteration: int,
        x: Image,
        objective: float,
        step_evals: int,
        step_size: float = 1.0,
    ) -> TraceRecord:
        elapsed = self._timer.elapsed
        total = self._problem.f.eval_count - self._start_evals
        record = TraceRecord(
            outer_iteration=outer_iteration,
            denoiser_evals=step_evals,
            objective=objective,
            psnr=(
                psnr(self._reference, x)
                if self._reference is not None
                else None
            ),
            elapsed_seconds=elapsed,
            monitor_evals=total - step_evals,
            step_size=step_size,
        )
        self.trace.append(record)
        if self._on_record:
            self._on_record(record)
        return record

    def finish(
        self, converged: bool, step_evals: int, config: SolverConfig
    ) -> SolverTrace:
        if converged:
            self.trace.status = TraceStatus.CONVERGED
        elif step_evals >= config.max_denoiser_evals:
            self.trace.status = TraceStatus.BUDGET_EXHAUSTED
        else:
            self.trace.status = TraceStatus.MAX_ITERS
        self._timer.stop()
        return self.trace


def has_converged(previous: Image, current: Image, tol: float) -> bool:
    if tol <= 0:
        return False
    return float(np.linalg.norm(current - previous)) <= tol * float(
        np.linalg.norm(previous)
    )
