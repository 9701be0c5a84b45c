# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import asyncio
from argparse import ArgumentParser, Namespace
from typing import Sequence

import shtab
import stamina
from rich.console import Console
from rich.progress import Progress

from greenbone.red.cli import CLIRunner
from greenbone.red.experiment.cli.arguments import (
    add_experiment_arguments,
    file_config,
    load_clean_image,
    run_config_from_settings,
    verbosity,
)
from greenbone.red.experiment.config import Settings
from greenbone.red.experiment.runner import run_experiment
from greenbone.red.img.metrics import clamped_psnr
from greenbone.red.solve import SolverKind, TraceRecord

# disable stamina logging
stamina.instrumentation.set_on_retry_hooks([])


def parse_args(args: Sequence[str] | None = None) -> Namespace:
    parser = ArgumentParser(
        description="Restore a degraded image with Regularization by "
        "Denoising. Degrades a clean image according to a task, runs a "
        "solver and writes the recovered image and the solver trace."
    )
    shtab.add_argument_to(parser)

    parser.add_argument(
        "--solver",
        choices=[kind.value for kind in SolverKind],
        help="Solver to run. Default: wpm",
    )
    parser.add_argument(
        "--output-image",
        metavar="FILE",
        help="Write the recovered image as PGM to FILE.",
    )
    parser.add_argument(
        "--trace",
        metavar="FILE",
        help="Write the solver trace as CSV to FILE.",
    )
    parser.add_argument(
        "--no-psnr",
        action="store_true",
        help="Don't compute the PSNR against the clean image.",
    )
    add_experiment_arguments(parser)
    return parser.parse_args(args)


async def solve(console: Console, error_console: Console) -> None:
    args = parse_args()
    settings = Settings(args, file_config(args))
    verbose = verbosity(settings)
    config = run_config_from_settings(settings)
    clean = load_clean_image(settings, config)
    budget = config.solver_config.max_denoiser_evals

    console.log(f"Task {config.task.describe()}")
    console.log(
        f"Solver {config.solver} with alpha {config.alpha:g}, sigma "
        f"{config.sigma_model:g} and denoiser {config.denoiser.describe()}"
    )

    with Progress(console=console) as progress:
        task = progress.add_task(f"Running {config.solver}", total=budget)

        def on_record(record: TraceRecord) -> None:
            progress.update(task, completed=record.denoiser_evals)
            if verbose > 1:
                psnr = (
                    f", PSNR {record.psnr:.2f} dB"
                    if record.psnr is not None
                    else ""
                )
                console.log(
                    f"Iteration {record.outer_iteration}: "
                    f"{record.denoiser_evals} evaluations, objective "
                    f"{record.objective:.6g}{psnr}"
                )

        result = await asyncio.to_thread(
            run_experiment,
            config,
            None if args.no_psnr else clean,
            clean=clean,
            on_record=on_record,
        )

    trace = result.trace
    final = trace.final
    console.log(
        f"{config.solver} finished ({trace.status}) after "
        f"{final.outer_iteration} iterations and {final.denoiser_evals} "
        f"denoiser evaluations ({final.monitor_evals} for monitoring)."
    )
    if final.psnr is not None:
        console.log(
            f"PSNR {final.psnr:.2f} dB, clamped to 8 bit "
            f"{clamped_psnr(clean, result.recovered):.2f} dB"
        )
    if verbose:
        for event in trace.events:
            console.log(
                f"Iteration {event.outer_iteration}: {event.kind} "
                f"{event.detail}"
            )
    if config.output_image:
        console.log(f"Wrote image to {config.output_image.absolute()}.")
    if config.trace:
        console.log(f"Wrote trace to {config.trace.absolute()}.")


def main() -> None:
    CLIRunner.run(solve)


if __name__ == "__main__":
    main()
