# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import numpy as np
import numpy.typing as npt

from ..errors import OperatorError
from ..img.models import Image
from .base import LinearOperator


class ComposedOperator(LinearOperator):
    """The product outer ∘ inner"""

    def __init__(self, outer: LinearOperator, inner: LinearOperator) -> None:
        if inner.output_shape != outer.input_shape:
            raise OperatorError(
                f"Cannot compose {outer!r} with {inner!r}: inner output "
                f"{inner.output_shape} does not match outer input "
                f"{outer.input_shape}"
            )
        super().__init__(inner.input_shape, outer.output_shape)
        self.outer = outer
        self.inner = inner

        self._symbol: npt.NDArray[np.complex128] | None = None
        outer_symbol = outer.circulant_symbol
        inner_symbol = inner.circulant_symbol
        if (
            outer_symbol is not None
            and inner_symbol is not None
            and outer_symbol.shape == inner_symbol.shape
        ):
            symbol = outer_symbol * inner_symbol
            symbol.setflags(write=False)
            self._symbol = symbol

    @property
    def circulant_symbol(self) -> npt.NDArray[np.complex128] | None:
        return self._symbol

    def _apply(self, x: Image) -> Image:
        return self.outer.apply(self.inner.apply(x))

    def _adjoint_apply(self, y: Image) -> Image:
        return self.inner.adjoint_apply(self.outer.adjoint_apply(y))


def compose(outer: LinearOperator, inner: LinearOperator) -> ComposedOperator:
    return ComposedOperator(outer, inner)
