# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import numpy as np
import numpy.typing as npt
from scipy import fft, ndimage

from ..errors import OperatorError
from ..img.models import Image, Kernel
from .base import LinearOperator, Shape


def kernel_symbol(kernel: Kernel, shape: Shape) -> npt.NDArray[np.complex128]:
    """
    2D DFT of the kernel zero-padded to `shape` with its center moved to the
    origin (the optical transfer function of a periodic blur).
    """
    if kernel.size > min(shape):
        raise OperatorError(
            f"Kernel of size {kernel.size} does not fit into an image of "
            f"shape {shape}"
        )
    padded = np.zeros(shape)
    padded[: kernel.size, : kernel.size] = kernel.taps
    padded = np.roll(padded, (-kernel.center, -kernel.center), axis=(0, 1))
    return fft.fft2(padded)


class BlurOperator(LinearOperator):
    """Periodic-boundary 2D convolution with a normalized kernel"""

    def __init__(self, kernel: Kernel, shape: Shape) -> None:
        super().__init__(shape, shape)
        self.kernel = kernel
        symbol = kernel_symbol(kernel, self.input_shape)
        symbol.setflags(write=False)
        self._symbol = symbol

    @property
    def circulant_symbol(self) -> npt.NDArray[np.complex128]:
        return self._symbol

    def _apply(self, x: Image) -> Image:
        return ndimage.convolve(x, self.kernel.taps, mode="wrap")

    def _adjoint_apply(self, y: Image) -> Image:
        # correlation is convolution with the 180° rotated kernel
        return ndimage.correlate(y, self.kernel.taps, mode="wrap")


def make_blur(kernel: Kernel, shape: Shape) -> BlurOperator:
    return BlurOperator(kernel, shape)
