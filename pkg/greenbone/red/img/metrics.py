# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import math

import numpy as np
from skimage.metrics import mean_squared_error

from .models import Image, check_image, check_same_shape

PEAK = 255.0

INFINITE_PSNR = math.inf
"PSNR reported for identical images"


def psnr(reference: Image, test: Image) -> float:
    """
    Peak signal-to-noise ratio in dB for the peak intensity 255.

    Returns:
        10·log10(255²/MSE) or `INFINITE_PSNR` if both images are equal.
    """
    reference = check_image(reference, "reference")
    test = check_image(test, "test")
    check_same_shape(reference, test)

    mse = mean_squared_error(reference, test)
    if mse == 0:
        return INFINITE_PSNR
    return 10.0 * math.log10(PEAK**2 / mse)


def clamped_psnr(reference: Image, test: Image) -> float:
    """PSNR of `test` after the clamping and rounding applied on file write"""
    return psnr(reference, np.rint(np.clip(test, 0.0, PEAK)))
