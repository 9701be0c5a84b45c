# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from dataclasses import dataclass
from enum import StrEnum

from ..errors import SolverError

DEFAULT_MAX_OUTER_ITERS = 1000
DEFAULT_MAX_DENOISER_EVALS = 200
DEFAULT_STEP_SIZE = 1.0
DEFAULT_SAFEGUARD_EPSILON = 1e-2
DEFAULT_CG_TOL = 1e-6
DEFAULT_CG_MAX_ITERS = 50
DEFAULT_GAMMA = 1.25
DEFAULT_DELTA = 1e-8
DEFAULT_MAX_HALVINGS = 30


class InnerSolver(StrEnum):
    AUTO = "auto"
    "exact Fourier solve for circulant H, conjugate gradients otherwise"
    CG = "cg"
    "always conjugate gradients"


class NegativeCurvature(StrEnum):
    DOWNDATE = "downdate"
    "B = H₀ − wwᵀ, the SR1 update with its negative denominator"
    FALLBACK = "fallback"
    "B = αI"


@dataclass(frozen=True)
class SolverConfig:
    """
    Settings shared by all RED solvers.

    Attributes:
        max_outer_iters: Upper bound on accepted outer iterations.
        max_denoiser_evals: Budget of step denoiser evaluations.
        step_size_init: Initial step-size a of the weighted proximal method.
        safeguard_epsilon: Relative objective growth that halves the step.
        cg_tol: Relative residual tolerance of the inner CG solves.
        cg_max_iters: Iteration limit of the inner CG solves.
        gamma: Scaling of the SR1 initial Hessian H₀, must exceed one.
        delta: Threshold of the SR1 skip test.
        tol: Stop once ‖x_{k+1} − x_k‖ ≤ tol·‖x_k‖. Zero disables the test.
        inner_solver: How the linear system of each step is solved.
        sr1_negative_curvature: Handling of a negative SR1 denominator.
        max_halvings: Consecutive step halvings before giving up.
    """

    max_outer_iters: int = DEFAULT_MAX_OUTER_ITERS
    max_denoiser_evals: int = DEFAULT_MAX_DENOISER_EVALS
    step_size_init: float = DEFAULT_STEP_SIZE
    safeguard_epsilon: float = DEFAULT_SAFEGUARD_EPSILON
    cg_tol: float = DEFAULT_CG_TOL
    cg_max_iters: int = DEFAULT_CG_MAX_ITERS
    gamma: float = DEFAULT_GAMMA
    delta: float = DEFAULT_DELTA
    tol: float = 0.0
    inner_solver: InnerSolver = InnerSolver.AUTO
    sr1_negative_curvature: NegativeCurvature = NegativeCurvature.DOWNDATE
    max_halvings: int = DEFAULT_MAX_HALVINGS

    def __post_init__(self) -> None:
        object.__setattr__(self, "inner_solver", InnerSolver(self.inner_solver))
        object.__setattr__(
            self,
            "sr1_negative_curvature",
            NegativeCurvature(self.sr1_negative_curvature),
        )
        for name in (
            "max_outer_iters",
            "max_denoiser_evals",
            "cg_max_iters",
            "max_halvings",
        ):
            if getattr(self, name) < 1:
                raise SolverError(f"{name} must be positive")
        for name in (
            "step_size_init",
            "safeguard_epsilon",
            "cg_tol",
            "delta",
        ):
            if not getattr(self, name) > 0:
                raise SolverError(f"{name} must be positive")
        if not self.gamma > 1:
            raise SolverError(f"gamma must be greater than one: {self.gamma}")
        if self.tol < 0:
            raise SolverError(f"tol must not be negative: {self.tol}")
