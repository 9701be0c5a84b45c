# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from scipy import ndimage

from ..img.kernels import gaussian_kernel, uniform_kernel
from ..img.models import Image, Kernel
from .base import Denoiser


class FilterDenoiser(Denoiser):
    """
    Linear smoothing denoiser f(x) = W x with periodic boundaries.

    W is the circulant matrix of a symmetric, non-negative, normalized kernel.
    Hence f is linear (local homogeneity holds for every c), its Jacobian is
    the symmetric matrix W and the spectral radius of W is at most one.
    """

    name = "filter"

    def __init__(
        self, kernel: Kernel, *, noise_level_hint: float | None = None
    ) -> None:
        super().__init__(noise_level_hint=noise_level_hint)
        self.kernel = kernel

    def _denoise(self, x: Image) -> Image:
        return ndimage.convolve(x, self.kernel.taps, mode="wrap")


class GaussianFilterDenoiser(FilterDenoiser):
    name = "gaussian"

    def __init__(
        self,
        size: int = 5,
        std: float = 1.0,
        *,
        noise_level_hint: float | None = None,
    ) -> None:
        super().__init__(
            gaussian_kernel(size, std), noise_level_hint=noise_level_hint
        )
        self.size = size
        self.std = std


class BoxFilterDenoiser(FilterDenoiser):
    name = "box"

    def __init__(
        self, size: int = 3, *, noise_level_hint: float | None = None
    ) -> None:
        super().__init__(
            uniform_kernel(size), noise_level_hint=noise_level_hint
        )
        self.size = size
