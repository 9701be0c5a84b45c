# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..errors import WeightingError
from ..img.models import Image
from .config import DEFAULT_DELTA, DEFAULT_GAMMA, NegativeCurvature


@dataclass(frozen=True)
class Weighting:
    """
    The SPD weighting B = τI + sign·uuᵀ of a weighted proximal step.

    B is never assembled. `apply` and `solve` work matrix-free, the latter via
    the Sherman–Morrison formula.

    Attributes:
        tau: Scale of the identity part.
        u: Rank-one factor, None for a scaled identity.
        sign: +1 for an update, -1 for a downdate of τI.
        fallback: True if B = αI was chosen because the SR1 update was
            rejected.
    """

    tau: float
    u: Image | None = None
    sign: int = 1
    fallback: bool = False

    def __post_init__(self) -> None:
        if not self.tau > 0 or not np.isfinite(self.tau):
            raise WeightingError(f"tau must be positive: {self.tau}")
        if self.sign not in (1, -1):
            raise WeightingError(f"sign must be +1 or -1: {self.sign}")
        if self.u is not None and not np.all(np.isfinite(self.u)):
            raise WeightingError("Rank-one factor contains non-finite values")
        if self.min_eigenvalue <= 0:
            raise WeightingError(
                "Weighting is not positive definite (smallest eigenvalue "
                f"{self.min_eigenvalue:g})"
            )

    @property
    def rank_one_norm2(self) -> float:
        """‖u‖²"""
        if self.u is None:
            return 0.0
        return float(np.vdot(self.u, self.u))

    @property
    def min_eigenvalue(self) -> float:
        if self.sign > 0:
            return self.tau
        return self.tau - self.rank_one_norm2

    @property
    def is_scaled_identity(self) -> bool:
        return self.u is None or self.rank_one_norm2 == 0

    def apply(self, v: Image) -> Image:
        """B v = τ·v + sign·u·⟨u, v⟩"""
        result = self.tau * v
        if self.u is not None:
            result = result + self.sign * float(np.vdot(self.u, v)) * self.u
        return result

    def solve(
        self, v: Image, base_inverse: Callable[[Image], Image] | None = None
    ) -> Image:
        """
        B⁻¹ v by the Sherman–Morrison formula.

        Args:
            v: Right-hand side.
            base_inverse: Solves (A + τI) w = v for an SPD A. If given, the
                result is (A + B)⁻¹ v instead.
        """
        if base_inverse is None:
            base_inverse = self._identity_inverse
        x = base_inverse(v)
        if self.is_scaled_identity:
            return x

        inverse_u = base_inverse(self.u)
        correction = float(np.vdot(self.u, x)) / (
            1.0 + self.sign * float(np.vdot(self.u, inverse_u))
        )
        return x - self.sign * correction * inverse_u

    def _identity_inverse(self, v: Image) -> Image:
        return v / self.tau


def scaled_identity(tau: float, *, fallback: bool = False) -> Weighting:
    return Weighting(tau=tau, fallback=fallback)


def sr1_weighting(
    k: int,
    x_k: Image,
    x_km1: Image | None,
    grad_g_k: Image,
    grad_g_km1: Image | None,
    alpha: float,
    gamma: float = DEFAULT_GAMMA,
    delta: float = DEFAULT_DELTA,
    negative_curvature: NegativeCurvature = NegativeCurvature.DOWNDATE,
) -> Weighting:
    """
    Zero-memory SR1 approximation of the Hessian of g = α·R.

    Each weighting is built from the scaled identity H₀ = τI with
    τ = γ·‖m‖²/⟨s, m⟩ and the latest differences s = x_k − x_{k−1},
    m = ∇g(x_k) − ∇g(x_{k−1}) rather than from the previous weighting.

    For γ > 1 the SR1 denominator ⟨m − H₀s, s⟩ is negative whenever ⟨s, m⟩
    is positive. With `NegativeCurvature.DOWNDATE` the update then becomes
    B = H₀ − wwᵀ with w = (m − H₀s)/√(−⟨m − H₀s, s⟩), which is positive
    definite and satisfies B s = m. `NegativeCurvature.FALLBACK` returns αI
    instead.

    Args:
        k: One-based index of the weighted proximal iteration. The first
            iteration has no history and uses αI.
    """
    if k <= 1 or x_km1 is None or grad_g_km1 is None:
        return scaled_identity(alpha)

    s = x_k - x_km1
    m = grad_g_k - grad_g_km1
    sm = float(np.vdot(s, m))
    if not sm > 0:
        return scaled_identity(alpha, fallback=True)

    tau = gamma * float(np.vdot(m, m)) / sm
    if not tau > 0 or not np.isfinite(tau):
        return scaled_identity(alpha, fallback=True)

    r = m - tau * s
    curvature = float(np.vdot(r, s))
    if abs(curvature) <= delta * np.linalg.norm(s) * np.linalg.norm(r):
        return Weighting(tau=tau)

    if curvature > 0:
        return Weighting(tau=tau, u=r / np.sqrt(curvature), sign=1)

    if negative_curvature == NegativeCurvature.FALLBACK:
        return scaled_identity(alpha, fallback=True)

    u = r / np.sqrt(-curvature)
    if tau - float(np.vdot(u, u)) <= delta * tau:
        # downdate would leave B (nearly) singular
        return scaled_identity(alpha, fallback=True)
    return Weighting(tau=tau, u=u, sign=-1)
