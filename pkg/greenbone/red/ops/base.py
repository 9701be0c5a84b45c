# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from abc import ABC, abstractmethod

import numpy as np
import numpy.typing as npt
from scipy import fft

from ..errors import OperatorError
from ..img.models import Image, check_image

Shape = tuple[int, int]
"numpy shape (height, width) of an image"


class LinearOperator(ABC):
    """
    Abstract matrix-free linear map H between image spaces.

    Subclasses implement `_apply` and `_adjoint_apply` on validated arrays.
    Block-circulant operators additionally expose their 2D DFT symbol, which
    allows solving systems with HᵀH exactly in the Fourier domain.
    Operators are immutable after construction.
    """

    def __init__(self, input_shape: Shape, output_shape: Shape) -> None:
        self._input_shape: Shape = (int(input_shape[0]), int(input_shape[1]))
        self._output_shape: Shape = (
            int(output_shape[0]),
            int(output_shape[1]),
        )
        if min(self._input_shape + self._output_shape) < 1:
            raise OperatorError(
                f"Invalid operator dimensions {self._input_shape} -> "
                f"{self._output_shape}"
            )

    @property
    def input_shape(self) -> Shape:
        return self._input_shape

    @property
    def output_shape(self) -> Shape:
        return self._output_shape

    @property
    def circulant_symbol(self) -> npt.NDArray[np.complex128] | None:
        """2D DFT eigenvalues if the operator is block-circulant"""
        return None

    @property
    def is_circulant(self) -> bool:
        return self.circulant_symbol is not None

    @abstractmethod
    def _apply(self, x: Image) -> Image: ...

    @abstractmethod
    def _adjoint_apply(self, y: Image) -> Image: ...

    def _check(self, x: Image, shape: Shape, name: str) -> Image:
        x = check_image(x, name)
        if x.shape != shape:
            raise OperatorError(
                f"{type(self).__name__} expects {name} of shape {shape}, got "
                f"{x.shape}"
            )
        return x

    def apply(self, x: Image) -> Image:
        """Compute H x"""
        return self._apply(self._check(x, self._input_shape, "input"))

    def adjoint_apply(self, y: Image) -> Image:
        """Compute Hᵀ y"""
        return self._adjoint_apply(self._check(y, self._output_shape, "output"))

    def apply_fourier(self, x: Image) -> Image:
        """Compute H x as pointwise product in the 2D Fourier domain"""
        symbol = self.circulant_symbol
        if symbol is None:
            raise OperatorError(f"{type(self).__name__} is not circulant")
        x = self._check(x, self._input_shape, "input")
        return fft.ifft2(symbol * fft.fft2(x)).real

    def to_matrix(self) -> npt.NDArray[np.float64]:
        """
        Assemble the dense matrix acting on row-major flattened images.

        Only meant for small images, e.g. for oracle checks.
        """
        size = self._input_shape[0] * self._input_shape[1]
        columns = []
        for index in range(size):
            basis = np.zeros(size)
            basis[index] = 1.0
            columns.append(
                self._apply(basis.reshape(self._input_shape)).ravel()
            )
        return np.stack(columns, axis=1)

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}({self._input_shape} -> "
            f"{self._output_shape})"
        )


class IdentityOperator(LinearOperator):
    def __init__(self, shape: Shape) -> None:
        super().__init__(shape, shape)
        symbol = np.ones(self.input_shape, dtype=np.complex128)
        symbol.setflags(write=False)
        self._symbol = symbol

    @property
    def circulant_symbol(self) -> npt.NDArray[np.complex128]:
        return self._symbol

    def _apply(self, x: Image) -> Image:
        return x.copy()

    def _adjoint_apply(self, y: Image) -> Image:
        return y.copy()


def identity(shape: Shape) -> IdentityOperator:
    return IdentityOperator(shape)


def gram_apply(
    H: LinearOperator, extra_diagonal: float, scale: float, x: Image
) -> Image:
    """
    Apply the shifted Gram operator scale·HᵀH + extra_diagonal·I to x.

    This is the system matrix of the fixed-point and weighted proximal steps.
    """
    if extra_diagonal < 0:
        raise OperatorError(
            f"Diagonal shift must be non-negative: {extra_diagonal}"
        )
    if not scale > 0:
        raise OperatorError(f"Gram scale must be positive: {scale}")

    result = scale * H.adjoint_apply(H.apply(x))
    if extra_diagonal:
        result += extra_diagonal * x
    return result
