# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import numpy as np

from ..errors import OperatorError
from ..img.models import Image
from .base import LinearOperator, Shape


class DecimationOperator(LinearOperator):
    """
    Keeps every factor-th pixel in both axes starting at `offset`.

    The adjoint puts the samples back to their positions and fills the
    discarded ones with zeros.
    """

    def __init__(self, factor: int, shape: Shape, offset: int = 0) -> None:
        if factor < 1:
            raise OperatorError(f"Decimation factor must be positive: {factor}")
        if shape[0] % factor or shape[1] % factor:
            raise OperatorError(
                f"Image shape {shape} is not divisible by factor {factor}"
            )
        if not 0 <= offset < factor:
            raise OperatorError(
                f"Decimation offset must be in [0, {factor}): {offset}"
            )
        super().__init__(shape, (shape[0] // factor, shape[1] // factor))
        self.factor = factor
        self.offset = offset

    def _apply(self, x: Image) -> Image:
        return x[self.offset :: self.factor, self.offset :: self.factor].copy()

    def _adjoint_apply(self, y: Image) -> Image:
        result = np.zeros(self.input_shape)
        result[self.offset :: self.factor, self.offset :: self.factor] = y
        return result


def make_decimation(
    factor: int, shape: Shape, offset: int = 0
) -> DecimationOperator:
    return DecimationOperator(factor, shape, offset)
