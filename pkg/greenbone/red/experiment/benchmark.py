# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import asyncio
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Callable, Iterable

from ..errors import ConfigError, TraceError
from ..img.models import Image
from ..solve import SolverKind, SolverTrace, TraceRecord
from .config import RunConfig
from .runner import ExperimentResult, solve_degraded
from .tasks import degrade

DEFAULT_SLACK = 0.1
"PSNR difference in dB still counted as a match"
DEFAULT_EARLY_EVALS = 10

BenchmarkCallback = Callable[[SolverKind, TraceRecord], None]


def _require_psnr(trace: SolverTrace) -> None:
    if not trace.has_psnr:
        raise TraceError(
            f"Trace of {trace.solver} has no PSNR column. A clean reference "
            "is required."
        )


def evals_to_match(
    trace: SolverTrace, target_psnr: float, slack: float = DEFAULT_SLACK
) -> int | None:
    """
    Smallest number of step denoiser evaluations after which the PSNR is at
    least `target_psnr − slack`. None if the trace never gets there.
    """
    _require_psnr(trace)
    threshold = target_psnr - slack
    for record in trace.records:
        if record.psnr >= threshold:  # type: ignore[operator]
            return record.denoiser_evals
    return None


def psnr_at_evals(trace: SolverTrace, evals: int) -> float:
    """PSNR of the last record reached within `evals` step evaluations"""
    _require_psnr(trace)
    psnr = trace.records[0].psnr
    for record in trace.records:
        if record.denoiser_evals > evals:
            break
        psnr = record.psnr
    return psnr  # type: ignore[return-value]


@dataclass(frozen=True)
class BenchmarkEntry:
    solver: SolverKind
    result: ExperimentResult
    evals_to_match: int | None
    early_psnr: float

    @property
    def trace(self) -> SolverTrace:
        return self.result.trace

    @property
    def final_psnr(self) -> float:
        return self.trace.final.psnr  # type: ignore[return-value]


@dataclass(frozen=True)
class BenchmarkResult:
    target_psnr: float
    slack: float
    early_evals: int
    entries: dict[SolverKind, BenchmarkEntry]


async def run_benchmark(
    config: RunConfig,
    clean: Image,
    *,
    solvers: Iterable[SolverKind | str] = tuple(SolverKind),
    slack: float = DEFAULT_SLACK,
    early_evals: int = DEFAULT_EARLY_EVALS,
    workers: int | None = None,
    trace_dir: Path | None = None,
    on_record: BenchmarkCallback | None = None,
) -> BenchmarkResult:
    """
    Run several solvers on one shared degradation and compare their
    evaluation counts.

    The solvers run concurrently in worker threads, each with its own
    denoiser. FP's final PSNR is the target every solver has to reach.
    FP's own entry reports the evaluations it consumed.
    """
    kinds = list(dict.fromkeys(SolverKind(kind) for kind in solvers))
    if SolverKind.FP not in kinds:
        raise ConfigError("The benchmark needs the fp solver for its target")
    if workers is not None and workers < 1:
        raise ConfigError(f"workers must be positive: {workers}")

    degradation = degrade(config.task, clean)
    semaphore = asyncio.Semaphore(workers or len(kinds))

    async def run(kind: SolverKind) -> ExperimentResult:
        run_config = replace(
            config,
            solver=kind,
            output_image=None,
            trace=trace_dir / f"{kind}.csv" if trace_dir else None,
        )
        callback = (
            (lambda record: on_record(kind, record)) if on_record else None
        )
        async with semaphore:
            return await asyncio.to_thread(
                solve_degraded,
                run_config,
                degradation,
                clean,
                on_record=callback,
            )

    async with asyncio.TaskGroup() as tg:
        tasks = {kind: tg.create_task(run(kind)) for kind in kinds}

    results = {kind: task.result() for kind, task in tasks.items()}
    target = results[SolverKind.FP].trace.final.psnr
    if target is None:
        raise TraceError("The fp trace has no PSNR")

    return BenchmarkResult(
        target_psnr=target,
        slack=slack,
        early_evals=early_evals,
        entries={
            kind: BenchmarkEntry(
                solver=kind,
                result=result,
                evals_to_match=(
                    result.trace.final.denoiser_evals
                    if kind == SolverKind.FP
                    else evals_to_match(result.trace, target, slack)
                ),
                early_psnr=psnr_at_evals(result.trace, early_evals),
            )
            for kind, result in results.items()
        },
    )
