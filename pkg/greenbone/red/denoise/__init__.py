# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from .base import Denoiser
from .checks import (
    default_fd_step,
    homogeneity_residual,
    jacobian_spectral_radius_estimate,
)
from .external import ExternalProcessDenoiser
from .filters import BoxFilterDenoiser, FilterDenoiser, GaussianFilterDenoiser
from .registry import (
    BUNDLED_DENOISERS,
    DenoiserKind,
    DenoiserSpec,
    create_denoiser,
)

__all__ = (
    "BUNDLED_DENOISERS",
    "BoxFilterDenoiser",
    "Denoiser",
    "DenoiserKind",
    "DenoiserSpec",
    "ExternalProcessDenoiser",
    "FilterDenoiser",
    "GaussianFilterDenoiser",
    "create_denoiser",
    "default_fd_step",
    "homogeneity_residual",
    "jacobian_spectral_radius_estimate",
)
