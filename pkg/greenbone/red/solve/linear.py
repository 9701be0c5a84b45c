# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import numpy as np
from scipy import fft

from ..img.models import Image
from ..ops.base import gram_apply
from ..problem import RedProblem
from .cg import cg_solve
from .config import InnerSolver, SolverConfig
from .weighting import Weighting


def solve_step_system(
    problem: RedProblem,
    rhs: Image,
    step_size: float,
    weighting: Weighting,
    x0: Image,
    config: SolverConfig,
) -> Image:
    """
    Solve (a/σ²·HᵀH + B) x = rhs.

    For a circulant H and `InnerSolver.AUTO` the identity part is inverted
    exactly in the Fourier domain and a rank-one term of B is handled with
    the Sherman–Morrison formula. Otherwise conjugate gradients run from the
    warm start x0.
    """
    scale = step_size * problem.data_weight

    if config.inner_solver == InnerSolver.AUTO and problem.H.is_circulant:
        gain = np.abs(problem.H.circulant_symbol) ** 2  # type: ignore[arg-type]
        diagonal = scale * gain + weighting.tau

        def inverse(v: Image) -> Image:
            return fft.ifft2(fft.fft2(v) / diagonal).real

        return weighting.solve(rhs, inverse)

    def system(v: Image) -> Image:
        return gram_apply(problem.H, 0.0, scale, v) + weighting.apply(v)

    return cg_solve(
        system, rhs, x0, config.cg_tol, config.cg_max_iters
    ).x
