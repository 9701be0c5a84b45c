# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import numpy as np

from ..errors import ImageError
from .models import Image, check_image


def add_gaussian_noise(x: Image, sigma: float, seed: int) -> Image:
    """
    Add white Gaussian noise with standard deviation `sigma`.

    The noise is drawn from a PCG64 generator seeded with `seed`, so the same
    seed always produces the same noisy image.
    """
    x = check_image(x)
    if sigma < 0 or not np.isfinite(sigma):
        raise ImageError(f"Noise level must be non-negative: {sigma}")
    if sigma == 0:
        return x.copy()

    rng = np.random.default_rng(seed)
    return x + rng.normal(0.0, sigma, size=x.shape)
