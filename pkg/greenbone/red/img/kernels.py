# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import numpy as np

from ..errors import KernelError
from .models import Kernel


def _check_size(size: int) -> None:
    if size < 1 or size % 2 != 1:
        raise KernelError(
            f"Kernel size must be an odd positive integer: {size}"
        )


def gaussian_kernel(size: int, std: float) -> Kernel:
    """
    Sampled isotropic Gaussian normalized to unit sum.

    Args:
        size: Odd number of taps per side.
        std: Standard deviation in pixels.
    """
    _check_size(size)
    if not std > 0:
        raise KernelError(f"Kernel standard deviation must be positive: {std}")

    center = size // 2
    offsets = np.arange(size, dtype=np.float64) - center
    rows, cols = np.meshgrid(offsets, offsets, indexing="ij")
    taps = np.exp(-(rows**2 + cols**2) / (2.0 * std**2))
    return Kernel(taps / taps.sum())


def uniform_kernel(size: int) -> Kernel:
    """Box blur with all taps equal to 1/size²"""
    _check_size(size)
    return Kernel(np.full((size, size), 1.0 / size**2))
