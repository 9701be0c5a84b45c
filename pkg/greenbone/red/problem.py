# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""
The RED objective

    E(x) = 1/(2σ²)·‖Hx − y‖² + α·½·⟨x, x − f(x)⟩

together with its prior, gradient and the prior gradient α·(x − f(x)) used
as ∇g by the weighted proximal method. Every operation that needs f(x) costs
exactly one denoiser evaluation.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .denoise.base import Denoiser
from .errors import ProblemError
from .img.models import Image, check_image
from .ops.base import LinearOperator


@dataclass(frozen=True)
class RedEvaluation:
    """
    Everything derived from a single denoiser call at x.

    Attributes:
        x: The evaluation point.
        denoised: f(x).
        data_gradient: (1/σ²)·Hᵀ(Hx − y).
        prior_gradient: α·(x − f(x)).
        objective: E(x).
    """

    x: Image
    denoised: Image
    data_gradient: Image
    prior_gradient: Image
    objective: float

    @property
    def gradient(self) -> Image:
        return self.data_gradient + self.prior_gradient


@dataclass(frozen=True)
class RedProblem:
    """
    A RED inverse problem.

    Attributes:
        H: Forward operator.
        y: Measurement of shape `H.output_shape`.
        sigma: Noise standard deviation of the data term.
        alpha: Weight of the RED prior.
        f: The denoiser, owned by this problem.
    """

    H: LinearOperator
    y: Image
    sigma: float
    alpha: float
    f: Denoiser

    def __post_init__(self) -> None:
        if not self.sigma > 0:
            raise ProblemError(f"sigma must be positive: {self.sigma}")
        if not self.alpha > 0:
            raise ProblemError(f"alpha must be positive: {self.alpha}")
        y = check_image(self.y, "measurement")
        if y.shape != self.H.output_shape:
            raise ProblemError(
                f"Measurement shape {y.shape} does not match the operator "
                f"output shape {self.H.output_shape}"
            )
        object.__setattr__(self, "y", y)

    @property
    def shape(self) -> tuple[int, int]:
        return self.H.input_shape

    @property
    def data_weight(self) -> float:
        """1/σ²"""
        return 1.0 / self.sigma**2

    @cached_property
    def backprojection(self) -> Image:
        """(1/σ²)·Hᵀy, the constant part of every step right-hand side"""
        return self.data_weight * self.H.adjoint_apply(self.y)

    def check(self, x: Image) -> Image:
        x = check_image(x, "estimate")
        if x.shape != self.shape:
            raise ProblemError(
                f"Estimate shape {x.shape} does not match the problem shape "
                f"{self.shape}"
            )
        return x

    def data_residual(self, x: Image) -> Image:
        return self.H.apply(x) - self.y

    def data_gradient(self, x: Image) -> Image:
        """(1/σ²)·Hᵀ(Hx − y), no denoiser call"""
        x = self.check(x)
        return self.data_weight * self.H.adjoint_apply(self.data_residual(x))

    def evaluation(self, x: Image, denoised: Image) -> RedEvaluation:
        """
        Build a `RedEvaluation` from an already computed f(x).

        Solvers use this to share one denoiser call between the objective,
        the gradient and the next step.
        """
        x = self.check(x)
        residual = self.data_residual(x)
        data_value = 0.5 * self.data_weight * float(np.vdot(residual, residual))
        prior_residual = x - denoised
        prior_value = 0.5 * float(np.vdot(x, prior_residual))
        return RedEvaluation(
            x=x,
            denoised=denoised,
            data_gradient=self.data_weight * self.H.adjoint_apply(residual),
            prior_gradient=self.alpha * prior_residual,
            objective=data_value + self.alpha * prior_value,
        )

    def evaluate(self, x: Image) -> RedEvaluation:
        """Fused evaluation at x. Costs one denoiser evaluation."""
        x = self.check(x)
        return self.evaluation(x, self.f.denoise(x))

    def prior_value(self, x: Image) -> float:
        """½·⟨x, x − f(x)⟩"""
        x = self.check(x)
        return 0.5 * float(np.vdot(x, x - self.f.denoise(x)))

    def objective(self, x: Image) -> float:
        return self.evaluate(x).objective

    def prior_gradient(self, x: Image) -> Image:
        """α·(x − f(x)), the gradient of g(x) = α·R(x)"""
        x = self.check(x)
        return self.alpha * (x - self.f.denoise(x))

    def gradient(self, x: Image) -> Image:
        return self.evaluate(x).gradient

    def value_and_gradient(self, x: Image) -> tuple[float, Image]:
        evaluation = self.evaluate(x)
        return evaluation.objective, evaluation.gradient
