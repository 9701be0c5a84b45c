# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from dataclasses import dataclass
from typing import Any, TypeAlias

import numpy as np
import numpy.typing as npt

from ..errors import ImageError, KernelError

Image: TypeAlias = npt.NDArray[np.float64]
"""
A grayscale image as a float64 array of numpy shape (height, width).

Intensities follow the [0, 255] convention but iterates of the solvers may
leave that range. Clamping only happens when writing files.
"""

KERNEL_SUM_TOLERANCE = 1e-12


def check_image(x: Any, name: str = "image") -> Image:
    """
    Validate an image and return it as float64 array.

    Raises:
        ImageError: If the array is not 2D, empty or contains NaN/Inf values.
    """
    array = np.asarray(x, dtype=np.float64)
    if array.ndim != 2:
        raise ImageError(
            f"{name} must be two dimensional, got {array.ndim} dimensions"
        )
    if array.shape[0] < 1 or array.shape[1] < 1:
        raise ImageError(f"{name} must not be empty, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        raise ImageError(f"{name} contains non-finite values")
    return array


def check_same_shape(a: Image, b: Image) -> None:
    if a.shape != b.shape:
        raise ImageError(
            f"Image dimensions differ: {a.shape} and {b.shape}"
        )


@dataclass(frozen=True)
class Kernel:
    """
    A normalized, centered point spread function.

    Attributes:
        taps: size×size array of filter taps summing to one.
    """

    taps: npt.NDArray[np.float64]

    def __post_init__(self) -> None:
        taps = np.array(self.taps, dtype=np.float64)
        if taps.ndim != 2 or taps.shape[0] != taps.shape[1]:
            raise KernelError(f"Kernel taps must be square, got {taps.shape}")
        if taps.shape[0] % 2 != 1:
            raise KernelError(
                f"Kernel size must be odd, got {taps.shape[0]}"
            )
        if abs(taps.sum() - 1.0) > KERNEL_SUM_TOLERANCE:
            raise KernelError(
                f"Kernel taps must sum to 1, got {taps.sum():.15g}"
            )
        taps.setflags(write=False)
        object.__setattr__(self, "taps", taps)

    @property
    def size(self) -> int:
        return self.taps.shape[0]

    @property
    def center(self) -> int:
        return self.size // 2
