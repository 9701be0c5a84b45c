# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from typing import Callable, NamedTuple

import numpy as np

from ..errors import CGError
from ..img.models import Image

LinearMap = Callable[[Image], Image]


class CGResult(NamedTuple):
    x: Image
    iterations: int
    relative_residual: float


def cg_solve(
    A: LinearMap,
    b: Image,
    x0: Image,
    tol: float,
    max_iters: int,
) -> CGResult:
    """
    Solve A x = b for a symmetric positive definite A by conjugate gradients.

    Stops as soon as ‖b − A x‖ ≤ tol·‖b‖ or after `max_iters` iterations.

    Raises:
        CGError: On non-finite values or a non-positive curvature pᵀAp, both
            signs of an indefinite or broken A.
    """
    if x0.shape != b.shape:
        raise CGError(
            f"Initial guess shape {x0.shape} does not match {b.shape}"
        )
    b_norm = float(np.linalg.norm(b))
    if b_norm == 0:
        return CGResult(np.zeros_like(b), 0, 0.0)

    threshold = tol * b_norm
    x = np.array(x0, dtype=np.float64)
    r = b - A(x)
    p = r.copy()
    rr = float(np.vdot(r, r))
    iterations = 0

    while np.sqrt(rr) > threshold and iterations < max_iters:
        ap = A(p)
        curvature = float(np.vdot(p, ap))
        if not np.isfinite(curvature) or curvature <= 0:
            raise CGError(
                f"Conjugate gradients broke down in iteration {iterations} "
                f"(pᵀAp = {curvature:g})"
            )
        step = rr / curvature
        x += step * p
        r -= step * ap
        rr_next = float(np.vdot(r, r))
        if not np.isfinite(rr_next):
            raise CGError(
                f"Non-finite residual in conjugate gradient iteration "
                f"{iterations}"
            )
        p = r + (rr_next / rr) * p
        rr = rr_next
        iterations += 1

    return CGResult(x, iterations, float(np.sqrt(rr)) / b_norm)
