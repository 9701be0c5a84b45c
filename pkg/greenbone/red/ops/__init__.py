# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from .base import IdentityOperator, LinearOperator, Shape, gram_apply, identity
from .blur import BlurOperator, make_blur
from .compose import ComposedOperator, compose
from .decimation import DecimationOperator, make_decimation

__all__ = (
    "BlurOperator",
    "ComposedOperator",
    "DecimationOperator",
    "IdentityOperator",
    "LinearOperator",
    "Shape",
    "compose",
    "gram_apply",
    "identity",
    "make_blur",
    "make_decimation",
)
