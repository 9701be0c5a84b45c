# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from ..img.models import Image
from ..problem import RedProblem
from .trace import SolverTrace
from .base import RecordCallback, TraceRecorder, has_converged
from .config import SolverConfig
from .linear import solve_step_system
from .weighting import scaled_identity


def fp_step(
    problem: RedProblem,
    x_in: Image,
    config: SolverConfig,
    *,
    denoised: Image | None = None,
) -> Image:
    """
    One fixed-point step lagging the denoiser:

        (1/σ²)·Hᵀ(Hx⁺ − y) + α·(x⁺ − f(x_in)) = 0

    Costs one denoiser evaluation unless f(x_in) is passed as `denoised`.
    """
    x_in = problem.check(x_in)
    if denoised is None:
        denoised = problem.f.denoise(x_in)

    rhs = problem.backprojection + problem.alpha * denoised
    return solve_step_system(
        problem, rhs, 1.0, scaled_identity(problem.alpha), x_in, config
    )


def run_fp(
    problem: RedProblem,
    x0: Image,
    config: SolverConfig | None = None,
    *,
    reference: Image | None = None,
    on_record: RecordCallback | None = None,
) -> tuple[Image, SolverTrace]:
    """
    Fixed-point iteration until the evaluation budget or the iteration limit
    is reached.

    Each step consumes one denoiser evaluation. f(x_k) is computed once and
    serves both the trace objective of x_k and the next step.
    """
    config = config or SolverConfig()
    recorder = TraceRecorder(
        "fp", problem, reference=reference, on_record=on_record
    )

    current = problem.evaluate(problem.check(x0).copy())
    steps = 0
    iteration = 0
    converged = False
    recorder.record(iteration, current.x, current.objective, steps)

    while (
        not converged
        and iteration < config.max_outer_iters
        and steps < config.max_denoiser_evals
    ):
        x_next = fp_step(problem, current.x, config, denoised=current.denoised)
        steps += 1
        iteration += 1
        converged = has_converged(current.x, x_next, config.tol)
        current = problem.evaluate(x_next)
        recorder.record(iteration, current.x, current.objective, steps)

    return current.x, recorder.finish(converged, steps, config)
