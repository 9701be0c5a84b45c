# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from typing import Callable

import numpy as np
from skimage import data
from skimage.transform import resize

from ..errors import ImageError
from .models import Image, check_image

STANDARD_IMAGES: dict[str, Callable[[], np.ndarray]] = {
    "camera": data.camera,
    "moon": data.moon,
    "coins": data.coins,
    "text": data.text,
    "page": data.page,
}
"Grayscale test images shipped with scikit-image"


def standard_image(name: str, size: int) -> Image:
    """
    Load a bundled grayscale test image as size×size integer-valued image.

    Args:
        name: One of `STANDARD_IMAGES`.
        size: Edge length in pixels.
    """
    try:
        loader = STANDARD_IMAGES[name]
    except KeyError:
        raise ImageError(
            f"Unknown test image {name!r}. Choose one of "
            f"{', '.join(STANDARD_IMAGES)}"
        ) from None
    if size < 1:
        raise ImageError(f"Image size must be positive: {size}")

    original = np.asarray(loader(), dtype=np.float64)
    scaled = resize(
        original,
        (size, size),
        anti_aliasing=True,
        preserve_range=True,
    )
    return np.rint(np.clip(scaled, 0, 255))


def upscale_nearest(x: Image, factor: int) -> Image:
    """Nearest-neighbour upscaling by an integer factor in both axes"""
    x = check_image(x)
    if factor < 1:
        raise ImageError(f"Upscaling factor must be positive: {factor}")
    return np.repeat(np.repeat(x, factor, axis=0), factor, axis=1)
