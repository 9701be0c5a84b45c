# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""
Command line arguments shared by the solve and benchmark commands
"""

from argparse import ArgumentParser, Namespace
from pathlib import Path
from typing import Any, Mapping

from greenbone.red.cli import DEFAULT_BUDGET, DEFAULT_VERBOSITY, CLIError
from greenbone.red.denoise.external import DEFAULT_RETRY_ATTEMPTS
from greenbone.red.denoise.registry import DenoiserKind, DenoiserSpec
from greenbone.red.experiment.config import (
    RunConfig,
    Settings,
    load_config_file,
)
from greenbone.red.experiment.tasks import TaskKind, TaskSpec
from greenbone.red.img.models import Image
from greenbone.red.img.pgm import load_pgm
from greenbone.red.img.samples import STANDARD_IMAGES, standard_image
from greenbone.red.solve.config import (
    InnerSolver,
    NegativeCurvature,
    SolverConfig,
)

DEFAULT_TASK = TaskKind.DEBLUR_UNIFORM
DEFAULT_IMAGE = "camera"
DEFAULT_DEBLUR_SIZE = 128
DEFAULT_SUPER_RESOLUTION_SIZE = 48


def add_experiment_arguments(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--config",
        metavar="FILE",
        type=Path,
        help="JSON file with settings. Its keys are the long options in "
        "snake_case. Command line options take precedence.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        help="Enable verbose output.",
    )

    task_group = parser.add_argument_group(
        title="Task", description="Degradation of the clean image"
    )
    task_group.add_argument(
        "--task",
        choices=[kind.value for kind in TaskKind],
        help=f"Degradation protocol. Default: {DEFAULT_TASK}",
    )
    task_group.add_argument(
        "--seed", type=int, metavar="N", help="Seed of the noise. Default: 0"
    )
    task_group.add_argument(
        "--noise-sigma",
        type=float,
        metavar="SIGMA",
        help="Override the noise level of the task.",
    )
    task_group.add_argument(
        "--kernel-size",
        type=int,
        metavar="N",
        help="Override the blur kernel size of the task.",
    )
    task_group.add_argument(
        "--kernel-std",
        type=float,
        metavar="STD",
        help="Override the Gaussian blur kernel std of the task.",
    )

    image_group = parser.add_argument_group(
        title="Image", description="Source of the clean image"
    )
    source = image_group.add_mutually_exclusive_group()
    source.add_argument(
        "--input",
        metavar="FILE",
        type=Path,
        help="Clean 8 bit PGM image.",
    )
    source.add_argument(
        "--image",
        choices=sorted(STANDARD_IMAGES),
        help=f"Bundled test image. Default: {DEFAULT_IMAGE}",
    )
    image_group.add_argument(
        "--size",
        type=int,
        metavar="N",
        help="Side length of the bundled test image. Default: "
        f"{DEFAULT_DEBLUR_SIZE} for deblurring, "
        f"{DEFAULT_SUPER_RESOLUTION_SIZE} for super-resolution",
    )

    model_group = parser.add_argument_group(
        title="Model", description="RED objective and denoiser"
    )
    model_group.add_argument(
        "--alpha",
        type=float,
        help="Weight of the RED prior. Default: 0.02 for deblurring, 0.01 for "
        "super-resolution",
    )
    model_group.add_argument(
        "--sigma-model",
        type=float,
        metavar="SIGMA",
        help="Noise level of the data term. Default: the noise level of the "
        "task",
    )
    model_group.add_argument(
        "--denoiser",
        choices=[kind.value for kind in DenoiserKind],
        help="Denoiser. Default: gaussian",
    )
    model_group.add_argument(
        "--denoiser-size",
        type=int,
        metavar="N",
        help="Filter size of the bundled denoisers. Default: 5",
    )
    model_group.add_argument(
        "--denoiser-std",
        type=float,
        metavar="STD",
        help="Std of the gaussian denoiser. Default: 1.0",
    )
    model_group.add_argument(
        "--denoiser-command",
        metavar="COMMAND",
        help="Command of the external denoiser. It reads a PGM image from "
        "stdin and writes the denoised PGM image to stdout.",
    )
    model_group.add_argument(
        "--retry-attempts",
        type=int,
        metavar="N",
        help="Up to N attempts when the external denoiser fails. "
        f"Default: {DEFAULT_RETRY_ATTEMPTS}",
    )

    solver_group = parser.add_argument_group(
        title="Solver", description="Solver settings"
    )
    solver_group.add_argument(
        "--budget",
        type=int,
        metavar="N",
        help=f"Denoiser evaluation budget. Default: {DEFAULT_BUDGET}",
    )
    solver_group.add_argument(
        "--max-iters",
        type=int,
        metavar="N",
        help="Maximum number of outer iterations.",
    )
    solver_group.add_argument(
        "--tol",
        type=float,
        help="Stop on a relative change of the estimate below TOL.",
    )
    solver_group.add_argument(
        "--inner-solver",
        choices=[kind.value for kind in InnerSolver],
        help="Solver of the linear system of each step. Default: auto",
    )
    solver_group.add_argument(
        "--sr1-negative-curvature",
        choices=[kind.value for kind in NegativeCurvature],
        help="Handling of a negative SR1 denominator. Default: downdate",
    )


def file_config(args: Namespace) -> Mapping[str, Any]:
    config_file: Path | None = args.config
    return load_config_file(config_file) if config_file else {}


def verbosity(settings: Settings) -> int:
    return settings.get(
        "verbose", DEFAULT_VERBOSITY, env="VERBOSE", convert=int
    )


def run_config_from_settings(
    settings: Settings, *, solver: str | None = None
) -> RunConfig:
    task = TaskSpec.preset(
        settings.get("task", DEFAULT_TASK, convert=TaskKind),
        seed=settings.get("seed", 0, convert=int),
        noise_sigma=settings.get("noise_sigma", None, convert=float),
        kernel_size=settings.get("kernel_size", None, convert=int),
        kernel_std=settings.get("kernel_std", None, convert=float),
    )
    denoiser = DenoiserSpec(
        kind=settings.get(
            "denoiser", DenoiserKind.GAUSSIAN, convert=DenoiserKind
        ),
        size=settings.get("denoiser_size", 5, convert=int),
        std=settings.get("denoiser_std", 1.0, convert=float),
        command=settings.get(
            "denoiser_command", None, env="RED_DENOISER_COMMAND"
        ),
        retry_attempts=settings.get(
            "retry_attempts",
            DEFAULT_RETRY_ATTEMPTS,
            env="RETRY_ATTEMPTS",
            convert=int,
        ),
    )
    defaults = SolverConfig()
    solver_config = SolverConfig(
        max_denoiser_evals=settings.get(
            "budget", DEFAULT_BUDGET, env="RED_BUDGET", convert=int
        ),
        max_outer_iters=settings.get(
            "max_iters", defaults.max_outer_iters, convert=int
        ),
        tol=settings.get("tol", defaults.tol, convert=float),
        inner_solver=settings.get(
            "inner_solver", defaults.inner_solver, convert=InnerSolver
        ),
        sr1_negative_curvature=settings.get(
            "sr1_negative_curvature",
            defaults.sr1_negative_curvature,
            convert=NegativeCurvature,
        ),
    )
    return RunConfig(
        task=task,
        solver=solver or settings.get("solver", "wpm"),
        alpha=settings.get("alpha", None, convert=float),
        sigma_model=settings.get("sigma_model", None, convert=float),
        denoiser=denoiser,
        solver_config=solver_config,
        input=settings.path("input"),
        output_image=settings.path("output_image"),
        trace=settings.path("trace"),
    )


def load_clean_image(settings: Settings, config: RunConfig) -> Image:
    if config.input:
        if not config.input.exists():
            raise CLIError(f"Input image {config.input} does not exist")
        return load_pgm(config.input)

    default_size = (
        DEFAULT_SUPER_RESOLUTION_SIZE
        if config.task.is_super_resolution
        else DEFAULT_DEBLUR_SIZE
    )
    return standard_image(
        settings.get("image", DEFAULT_IMAGE),
        settings.get("size", default_size, convert=int),
    )
