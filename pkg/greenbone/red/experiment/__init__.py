# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from .benchmark import (
    DEFAULT_EARLY_EVALS,
    DEFAULT_SLACK,
    BenchmarkEntry,
    BenchmarkResult,
    evals_to_match,
    psnr_at_evals,
    run_benchmark,
)
from .config import RunConfig, Settings, load_config_file
from .runner import ExperimentResult, run_experiment, solve_degraded
from .tasks import (
    Degradation,
    TaskKind,
    TaskSpec,
    degrade,
    initial_estimate,
    make_operator,
)
from .trace_csv import CSV_HEADER, emit_csv, read_csv

__all__ = (
    "CSV_HEADER",
    "DEFAULT_EARLY_EVALS",
    "DEFAULT_SLACK",
    "BenchmarkEntry",
    "BenchmarkResult",
    "Degradation",
    "ExperimentResult",
    "RunConfig",
    "Settings",
    "TaskKind",
    "TaskSpec",
    "degrade",
    "emit_csv",
    "evals_to_match",
    "initial_estimate",
    "load_config_file",
    "make_operator",
    "psnr_at_evals",
    "read_csv",
    "run_benchmark",
    "run_experiment",
    "solve_degraded",
)
