# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from argparse import ArgumentParser, Namespace
from pathlib import Path
from typing import Sequence

import shtab
import stamina
from rich.console import Console
from rich.progress import Progress
from rich.table import Table

from greenbone.red.cli import CLIRunner
from greenbone.red.experiment.benchmark import (
    DEFAULT_EARLY_EVALS,
    DEFAULT_SLACK,
    BenchmarkResult,
    run_benchmark,
)
from greenbone.red.experiment.cli.arguments import (
    add_experiment_arguments,
    file_config,
    load_clean_image,
    run_config_from_settings,
    verbosity,
)
from greenbone.red.experiment.config import Settings
from greenbone.red.solve import SolverKind, TraceRecord

# disable stamina logging
stamina.instrumentation.set_on_retry_hooks([])


def parse_args(args: Sequence[str] | None = None) -> Namespace:
    parser = ArgumentParser(
        description="Compare the RED solvers on one degraded image. Reports "
        "the denoiser evaluations each solver needs to reach the PSNR of the "
        "fixed-point method after the full budget."
    )
    shtab.add_argument_to(parser)

    parser.add_argument(
        "--solvers",
        nargs="+",
        choices=[kind.value for kind in SolverKind],
        help="Solvers to compare. fp is always required. Default: all",
    )
    parser.add_argument(
        "--slack",
        type=float,
        metavar="DB",
        help="PSNR difference in dB still counted as a match. "
        f"Default: {DEFAULT_SLACK}",
    )
    parser.add_argument(
        "--early-evals",
        type=int,
        metavar="N",
        help="Also report the PSNR after N denoiser evaluations. "
        f"Default: {DEFAULT_EARLY_EVALS}",
    )
    parser.add_argument(
        "--workers",
        type=int,
        metavar="N",
        help="Number of solvers running in parallel. Default: one per solver",
    )
    parser.add_argument(
        "--trace-dir",
        metavar="DIR",
        help="Write the trace of every solver as <solver>.csv to DIR.",
    )
    add_experiment_arguments(parser)
    return parser.parse_args(args)


def _count(value: int | None) -> str:
    return "not reached" if value is None else str(value)


def result_table(result: BenchmarkResult) -> Table:
    table = Table(
        title=f"Target PSNR {result.target_psnr:.2f} dB "
        f"(slack {result.slack:g} dB)"
    )
    table.add_column("Solver")
    table.add_column("Evaluations to target", justify="right")
    table.add_column(f"PSNR after {result.early_evals}", justify="right")
    table.add_column("Final PSNR", justify="right")
    table.add_column("Evaluations", justify="right")
    table.add_column("Step halvings", justify="right")
    table.add_column("Time [s]", justify="right")

    for kind, entry in result.entries.items():
        final = entry.trace.final
        table.add_row(
            kind.upper(),
            _count(entry.evals_to_match),
            f"{entry.early_psnr:.2f}",
            f"{entry.final_psnr:.2f}",
            str(final.denoiser_evals),
            str(entry.trace.halvings),
            f"{final.elapsed_seconds:.2f}",
        )
    return table


async def benchmark(console: Console, error_console: Console) -> None:
    args = parse_args()
    settings = Settings(args, file_config(args))
    verbose = verbosity(settings)
    config = run_config_from_settings(settings)
    clean = load_clean_image(settings, config)
    solvers = [
        SolverKind(kind)
        for kind in settings.get("solvers", [kind.value for kind in SolverKind])
    ]
    workers = settings.get("workers", None, env="RED_WORKERS", convert=int)
    budget = config.solver_config.max_denoiser_evals

    console.log(f"Task {config.task.describe()}")
    if verbose:
        console.log(
            f"alpha {config.alpha:g}, sigma {config.sigma_model:g}, denoiser "
            f"{config.denoiser.describe()}, budget {budget}"
        )

    with Progress(console=console) as progress:
        tasks = {
            kind: progress.add_task(f"Running {kind}", total=budget)
            for kind in solvers
        }

        def on_record(kind: SolverKind, record: TraceRecord) -> None:
            progress.update(tasks[kind], completed=record.denoiser_evals)

        result = await run_benchmark(
            config,
            clean,
            solvers=solvers,
            slack=settings.get("slack", DEFAULT_SLACK, convert=float),
            early_evals=settings.get(
                "early_evals", DEFAULT_EARLY_EVALS, convert=int
            ),
            workers=workers,
            trace_dir=settings.get("trace_dir", None, convert=Path),
            on_record=on_record,
        )

    console.print(result_table(result))


def main() -> None:
    CLIRunner.run(benchmark)


if __name__ == "__main__":
    main()
