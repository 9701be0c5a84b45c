# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import csv
from pathlib import Path

from ..errors import TraceError
from ..solve.trace import SolverTrace, TraceRecord

CSV_HEADER = ("iter", "denoiser_evals", "elapsed_s", "objective", "psnr")


def _format(value: float) -> str:
    return format(value, ".17g")


def emit_csv(trace: SolverTrace, path: Path) -> None:
    """
    Write a trace as CSV with one row per record. The psnr field stays empty
    for traces computed without a clean reference.
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for record in trace.records:
            writer.writerow(
                (
                    record.outer_iteration,
                    record.denoiser_evals,
                    _format(record.elapsed_seconds),
                    _format(record.objective),
                    "" if record.psnr is None else _format(record.psnr),
                )
            )


def read_csv(path: Path, solver: str | None = None) -> SolverTrace:
    """Parse a trace written by `emit_csv`"""
    trace = SolverTrace(solver or path.stem)
    with path.open(newline="", encoding="utf8") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header is None or tuple(header) != CSV_HEADER:
            raise TraceError(f"{path} is not a trace file. Header: {header}")

        for line, row in enumerate(reader, start=2):
            if len(row) != len(CSV_HEADER):
                raise TraceError(f"{path}:{line}: expected 5 fields: {row}")
            try:
                trace.append(
                    TraceRecord(
                        outer_iteration=int(row[0]),
                        denoiser_evals=int(row[1]),
                        elapsed_seconds=float(row[2]),
                        objective=float(row[3]),
                        psnr=float(row[4]) if row[4] else None,
                    )
                )
            except ValueError as e:
                raise TraceError(f"{path}:{line}: {e}") from e
    return trace
