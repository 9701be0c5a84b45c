# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from enum import StrEnum
from typing import Callable

from ..img.models import Image
from ..problem import RedProblem
from .apg import next_momentum, run_apg
from .base import RecordCallback, TraceRecorder
from .cg import CGResult, cg_solve
from .config import (
    InnerSolver,
    NegativeCurvature,
    SolverConfig,
)
from .fp import fp_step, run_fp
from .linear import solve_step_system
from .trace import (
    EventKind,
    SolverEvent,
    SolverTrace,
    TraceRecord,
    TraceStatus,
)
from .weighting import Weighting, scaled_identity, sr1_weighting
from .wpm import WeightingStrategy, run_wpm, wpm_step


class SolverKind(StrEnum):
    FP = "fp"
    APG = "apg"
    WPM = "wpm"


SolverFunction = Callable[..., tuple[Image, SolverTrace]]

SOLVERS: dict[SolverKind, SolverFunction] = {
    SolverKind.FP: run_fp,
    SolverKind.APG: run_apg,
    SolverKind.WPM: run_wpm,
}


def run_solver(
    kind: SolverKind | str,
    problem: RedProblem,
    x0: Image,
    config: SolverConfig | None = None,
    *,
    reference: Image | None = None,
    on_record: RecordCallback | None = None,
) -> tuple[Image, SolverTrace]:
    return SOLVERS[SolverKind(kind)](
        problem, x0, config, reference=reference, on_record=on_record
    )


__all__ = (
    "CGResult",
    "EventKind",
    "InnerSolver",
    "NegativeCurvature",
    "RecordCallback",
    "SOLVERS",
    "SolverConfig",
    "SolverEvent",
    "SolverKind",
    "SolverTrace",
    "TraceRecord",
    "TraceRecorder",
    "TraceStatus",
    "Weighting",
    "WeightingStrategy",
    "cg_solve",
    "fp_step",
    "next_momentum",
    "run_apg",
    "run_fp",
    "run_solver",
    "run_wpm",
    "scaled_identity",
    "solve_step_system",
    "sr1_weighting",
    "wpm_step",
)
