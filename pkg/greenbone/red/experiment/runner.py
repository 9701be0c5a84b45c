# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from dataclasses import dataclass

from ..denoise.registry import create_denoiser
from ..errors import ConfigError, RedError
from ..img.models import Image
from ..img.pgm import load_pgm, save_pgm
from ..problem import RedProblem
from ..solve import RecordCallback, SolverTrace, run_solver
from .config import RunConfig
from .tasks import Degradation, degrade, initial_estimate
from .trace_csv import emit_csv


@dataclass(frozen=True)
class ExperimentResult:
    trace: SolverTrace
    recovered: Image
    measurement: Image


def solve_degraded(
    config: RunConfig,
    degradation: Degradation,
    clean_reference: Image | None = None,
    *,
    on_record: RecordCallback | None = None,
) -> ExperimentResult:
    """
    Run the configured solver on an existing degradation with a fresh
    denoiser and write the configured artifacts.
    """
    problem = RedProblem(
        H=degradation.operator,
        y=degradation.measurement,
        sigma=config.sigma_model,  # type: ignore[arg-type]
        alpha=config.alpha,  # type: ignore[arg-type]
        f=create_denoiser(config.denoiser),
    )
    x0 = initial_estimate(config.task, degradation.measurement)
    try:
        recovered, trace = run_solver(
            config.solver,
            problem,
            x0,
            config.solver_config,
            reference=clean_reference,
            on_record=on_record,
        )
    except RedError as e:
        e.add_note(
            f"while running {config.solver} on {config.task.describe()}"
        )
        raise

    if config.output_image:
        save_pgm(config.output_image, recovered)
    if config.trace:
        emit_csv(trace, config.trace)

    return ExperimentResult(trace, recovered, degradation.measurement)


def run_experiment(
    config: RunConfig,
    clean_reference: Image | None = None,
    *,
    clean: Image | None = None,
    on_record: RecordCallback | None = None,
) -> ExperimentResult:
    """
    Degrade a clean image, solve and write the artifacts.

    Args:
        config: The run.
        clean_reference: Enables the PSNR column of the trace. Also degraded
            when `clean` is not given.
        clean: The image to degrade. Falls back to `clean_reference` and then
            to the PGM file `config.input`.
    """
    if clean is None:
        clean = clean_reference
    if clean is None:
        if config.input is None:
            raise ConfigError("No clean image and no input file given")
        clean = load_pgm(config.input)

    return solve_degraded(
        config,
        degrade(config.task, clean),
        clean_reference,
        on_record=on_record,
    )
