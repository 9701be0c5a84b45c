# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""
Runtime checks of the two denoiser assumptions RED relies on: local
homogeneity f(cx) = c·f(x) and a symmetric Jacobian with spectral radius at
most one.
"""

import numpy as np

from ..errors import DenoiserError
from ..img.models import Image, check_image
from .base import Denoiser

MIN_HOMOGENEITY_SCALE = 0.99
MAX_HOMOGENEITY_SCALE = 1.01


def homogeneity_residual(d: Denoiser, x: Image, c: float) -> float:
    """
    Relative violation ‖f(c·x) − c·f(x)‖ / (‖f(x)‖ + eps) of local
    homogeneity. Costs two denoiser evaluations.
    """
    if not MIN_HOMOGENEITY_SCALE <= c <= MAX_HOMOGENEITY_SCALE:
        raise DenoiserError(
            f"Homogeneity scale must be in [{MIN_HOMOGENEITY_SCALE}, "
            f"{MAX_HOMOGENEITY_SCALE}]: {c}"
        )
    x = check_image(x)
    fx = d.denoise(x)
    fcx = d.denoise(c * x)
    return float(
        np.linalg.norm(fcx - c * fx)
        / (np.linalg.norm(fx) + np.finfo(np.float64).eps)
    )


def default_fd_step(x: Image) -> float:
    return 1e-3 * (1.0 + float(np.max(np.abs(x))))


def jacobian_spectral_radius_estimate(
    d: Denoiser,
    x: Image,
    probes: int = 20,
    fd_step: float | None = None,
    *,
    seed: int = 0,
) -> float:
    """
    Estimate the spectral radius of the Jacobian of f at x.

    Runs power iteration on central finite differences
    v ↦ (f(x + h·v) − f(x − h·v)) / (2h) starting from a seeded random unit
    vector. Costs 2·probes denoiser evaluations.

    Returns:
        The magnitude of the last Rayleigh quotient.
    """
    if probes < 1:
        raise DenoiserError(f"Number of probes must be positive: {probes}")
    x = check_image(x)
    step = default_fd_step(x) if fd_step is None else fd_step
    if not step > 0:
        raise DenoiserError(f"Finite difference step must be positive: {step}")

    rng = np.random.default_rng(seed)
    v = rng.standard_normal(x.shape)
    v /= np.linalg.norm(v)

    rayleigh = 0.0
    for _ in range(probes):
        jv = (d.denoise(x + step * v) - d.denoise(x - step * v)) / (2 * step)
        rayleigh = float(np.vdot(v, jv))
        norm = np.linalg.norm(jv)
        if norm == 0:
            return 0.0
        v = jv / norm

    return abs(rayleigh)
