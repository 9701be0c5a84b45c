# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import math

from ..img.models import Image
from ..problem import RedProblem
from .base import RecordCallback, TraceRecorder, has_converged
from .config import SolverConfig
from .fp import fp_step
from .trace import SolverTrace


def next_momentum(t: float) -> float:
    """t_{k+1} = (1 + √(1 + 4t_k²)) / 2"""
    return (1.0 + math.sqrt(1.0 + 4.0 * t * t)) / 2.0


def run_apg(
    problem: RedProblem,
    x0: Image,
    config: SolverConfig | None = None,
    *,
    reference: Image | None = None,
    on_record: RecordCallback | None = None,
) -> tuple[Image, SolverTrace]:
    """
    Accelerated proximal gradient: fixed-point steps taken from the
    extrapolated point z_k.

    Each step consumes one evaluation f(z_k). The objective of x_k needs an
    extra evaluation whenever z_k differs from x_k; those are reported as
    monitoring evaluations.
    """
    config = config or SolverConfig()
    recorder = TraceRecorder(
        "apg", problem, reference=reference, on_record=on_record
    )

    current = problem.evaluate(problem.check(x0).copy())
    z = current.x
    z_denoised: Image | None = current.denoised
    t = 1.0
    steps = 0
    iteration = 0
    converged = False
    recorder.record(iteration, current.x, current.objective, steps)

    while (
        not converged
        and iteration < config.max_outer_iters
        and steps < config.max_denoiser_evals
    ):
        if z_denoised is None:
            z_denoised = problem.f.denoise(z)
        x_next = fp_step(problem, z, config, denoised=z_denoised)
        steps += 1
        iteration += 1

        t_next = next_momentum(t)
        momentum = (t - 1.0) / t_next
        converged = has_converged(current.x, x_next, config.tol)
        previous = current.x
        current = problem.evaluate(x_next)

        if momentum == 0:
            z = current.x
            z_denoised = current.denoised
        else:
            z = current.x + momentum * (current.x - previous)
            z_denoised = None
        t = t_next

        recorder.record(iteration, current.x, current.objective, steps)

    return current.x, recorder.finish(converged, steps, config)
