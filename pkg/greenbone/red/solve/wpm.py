# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from typing import Protocol

from ..errors import SafeguardError
from ..img.models import Image
from ..problem import RedEvaluation, RedProblem
from .base import RecordCallback, TraceRecorder, has_converged
from .config import NegativeCurvature, SolverConfig
from .linear import solve_step_system
from .trace import EventKind, SolverTrace
from .weighting import Weighting, sr1_weighting


class WeightingStrategy(Protocol):
    def __call__(
        self,
        k: int,
        x_k: Image,
        x_km1: Image | None,
        grad_g_k: Image,
        grad_g_km1: Image | None,
        alpha: float,
        gamma: float,
        delta: float,
        negative_curvature: NegativeCurvature,
    ) -> Weighting: ...


def wpm_step(
    problem: RedProblem,
    x_k: Image,
    B: Weighting,
    a_k: float,
    config: SolverConfig,
    *,
    denoised: Image | None = None,
) -> Image:
    """
    One weighted proximal step:

        (a/σ²·HᵀH + B) x⁺ = a/σ²·Hᵀy + B x_k − a·α·(x_k − f(x_k))

    Costs one denoiser evaluation unless f(x_k) is passed as `denoised`.
    """
    x_k = problem.check(x_k)
    if denoised is None:
        denoised = problem.f.denoise(x_k)

    rhs = (
        a_k * problem.backprojection
        + B.apply(x_k)
        - a_k * problem.alpha * (x_k - denoised)
    )
    return solve_step_system(problem, rhs, a_k, B, x_k, config)


def _objective_grew(
    current: RedEvaluation, trial: RedEvaluation, epsilon: float
) -> bool:
    return trial.objective - current.objective > epsilon * trial.objective


def run_wpm(
    problem: RedProblem,
    x0: Image,
    config: SolverConfig | None = None,
    *,
    reference: Image | None = None,
    on_record: RecordCallback | None = None,
    weighting: WeightingStrategy = sr1_weighting,
) -> tuple[Image, SolverTrace]:
    """
    Weighted proximal method with SR1 weightings and step-size safeguard.

    The evaluation at every trial point x⁺ yields E(x⁺) for the safeguard,
    ∇g(x⁺) for the next weighting and f(x⁺) for the next right-hand side.
    A trial whose objective grows by more than ε·E(x⁺) is rejected, the
    step-size is halved for good and the step is retaken from x_k with the
    same weighting. Rejected trials count against the evaluation budget.

    Raises:
        SafeguardError: More than `config.max_halvings` consecutive halvings.
    """
    config = config or SolverConfig()
    recorder = TraceRecorder(
        "wpm", problem, reference=reference, on_record=on_record
    )
    trace = recorder.trace

    current = problem.evaluate(problem.check(x0).copy())
    previous: RedEvaluation | None = None
    step_size = config.step_size_init
    steps = 0
    iteration = 0
    converged = False
    recorder.record(iteration, current.x, current.objective, steps, step_size)

    while (
        not converged
        and iteration < config.max_outer_iters
        and steps < config.max_denoiser_evals
    ):
        k = iteration + 1
        B = weighting(
            k,
            current.x,
            previous.x if previous else None,
            current.prior_gradient,
            previous.prior_gradient if previous else None,
            problem.alpha,
            gamma=config.gamma,
            delta=config.delta,
            negative_curvature=config.sr1_negative_curvature,
        )
        if B.fallback:
            trace.add_event(k, EventKind.SR1_FALLBACK)

        halvings = 0
        accepted: RedEvaluation | None = None
        while accepted is None:
            x_next = wpm_step(
                problem,
                current.x,
                B,
                step_size,
                config,
                denoised=current.denoised,
            )
            steps += 1
            trial = problem.evaluate(x_next)
            if not _objective_grew(current, trial, config.safeguard_epsilon):
                accepted = trial
                break

            halvings += 1
            if halvings > config.max_halvings:
                raise SafeguardError(
                    f"Objective still grows after {config.max_halvings} step "
                    f"halvings in iteration {k}"
                )
            step_size /= 2.0
            trace.add_event(
                k,
                EventKind.STEP_HALVING,
                f"E {current.objective:.6g} -> {trial.objective:.6g}, "
                f"step-size {step_size:g}",
            )
            if steps >= config.max_denoiser_evals:
                break

        if accepted is None:
            # budget spent on rejected trials, x_k stays the estimate
            recorder.record(
                iteration, current.x, current.objective, steps, step_size
            )
            break

        iteration = k
        converged = has_converged(current.x, accepted.x, config.tol)
        previous, current = current, accepted
        recorder.record(
            iteration, current.x, current.objective, steps, step_size
        )

    return current.x, recorder.finish(converged, steps, config)
