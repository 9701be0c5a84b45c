# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from dataclasses import dataclass, field
from enum import StrEnum

from ..errors import TraceError


class TraceStatus(StrEnum):
    CONVERGED = "converged"
    BUDGET_EXHAUSTED = "budget_exhausted"
    MAX_ITERS = "max_iters"


class EventKind(StrEnum):
    STEP_HALVING = "step-halving"
    SR1_FALLBACK = "sr1-fallback"


@dataclass(frozen=True)
class TraceRecord:
    """
    State after an outer iteration.

    Attributes:
        outer_iteration: Number of accepted iterations, 0 for the start.
        denoiser_evals: Cumulative denoiser evaluations consumed by steps.
        objective: E(x_k).
        psnr: PSNR against a clean reference, if one was given.
        elapsed_seconds: Wall time since the solver started.
        monitor_evals: Further evaluations spent on monitoring only.
        step_size: Step-size a_k in effect.
    """

    outer_iteration: int
    denoiser_evals: int
    objective: float
    psnr: float | None
    elapsed_seconds: float
    monitor_evals: int = 0
    step_size: float = 1.0

    @property
    def total_evals(self) -> int:
        return self.denoiser_evals + self.monitor_evals


@dataclass(frozen=True)
class SolverEvent:
    outer_iteration: int
    kind: EventKind
    detail: str = ""


@dataclass
class SolverTrace:
    """Per-iteration history of a solver run"""

    solver: str
    records: list[TraceRecord] = field(default_factory=list)
    events: list[SolverEvent] = field(default_factory=list)
    status: TraceStatus | None = None

    def append(self, record: TraceRecord) -> None:
        if self.records:
            last = self.records[-1]
            if record.denoiser_evals < last.denoiser_evals:
                raise TraceError(
                    "Denoiser evaluations must not decrease: "
                    f"{last.denoiser_evals} -> {record.denoiser_evals}"
                )
            if record.elapsed_seconds < last.elapsed_seconds:
                raise TraceError("Elapsed time must not decrease")
        self.records.append(record)

    def add_event(
        self, outer_iteration: int, kind: EventKind, detail: str = ""
    ) -> None:
        self.events.append(SolverEvent(outer_iteration, kind, detail))

    @property
    def final(self) -> TraceRecord:
        if not self.records:
            raise TraceError(f"Trace of {self.solver} is empty")
        return self.records[-1]

    @property
    def has_psnr(self) -> bool:
        return bool(self.records) and all(
            record.psnr is not None for record in self.records
        )

    @property
    def halvings(self) -> int:
        return sum(
            1 for event in self.events if event.kind == EventKind.STEP_HALVING
        )

    def __len__(self) -> int:
        return len(self.records)
