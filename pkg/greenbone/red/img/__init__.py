# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from .kernels import gaussian_kernel, uniform_kernel
from .metrics import INFINITE_PSNR, clamped_psnr, psnr
from .models import Image, Kernel, check_image, check_same_shape
from .noise import add_gaussian_noise
from .pgm import decode_pgm, encode_pgm, load_pgm, save_pgm
from .samples import STANDARD_IMAGES, standard_image, upscale_nearest

__all__ = (
    "INFINITE_PSNR",
    "STANDARD_IMAGES",
    "Image",
    "Kernel",
    "add_gaussian_noise",
    "check_image",
    "check_same_shape",
    "clamped_psnr",
    "decode_pgm",
    "encode_pgm",
    "gaussian_kernel",
    "load_pgm",
    "psnr",
    "save_pgm",
    "standard_image",
    "uniform_kernel",
    "upscale_nearest",
)
