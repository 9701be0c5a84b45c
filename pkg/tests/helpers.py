# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import math

import numpy as np

from greenbone.red.denoise.base import Denoiser
from greenbone.red.denoise.filters import GaussianFilterDenoiser
from greenbone.red.img.kernels import gaussian_kernel, uniform_kernel
from greenbone.red.img.models import Image
from greenbone.red.img.noise import add_gaussian_noise
from greenbone.red.img.samples import standard_image
from greenbone.red.ops.base import Shape
from greenbone.red.ops.blur import make_blur
from greenbone.red.problem import RedProblem


def random_image(shape: Shape, seed: int = 0, scale: float = 255.0) -> Image:
    return scale * np.random.default_rng(seed).random(shape)


class ScalingDenoiser(Denoiser):
    """f(x) = c·x"""

    name = "scaling"

    def __init__(self, c: float = 0.5) -> None:
        super().__init__()
        self.c = c

    def _denoise(self, x: Image) -> Image:
        return self.c * x


class ShiftDenoiser(Denoiser):
    """f(x) = x + 1, neither homogeneous nor linear"""

    name = "shift"

    def _denoise(self, x: Image) -> Image:
        return x + 1.0


class BrokenDenoiser(Denoiser):
    name = "broken"

    def __init__(self, result: Image) -> None:
        super().__init__()
        self.result = result

    def _denoise(self, x: Image) -> Image:
        return self.result


def denoiser_matrix(d: Denoiser, shape: Shape) -> np.ndarray:
    """Dense matrix of a linear denoiser on row-major flattened images"""
    size = shape[0] * shape[1]
    columns = []
    for index in range(size):
        basis = np.zeros(size)
        basis[index] = 1.0
        columns.append(d.denoise(basis.reshape(shape)).ravel())
    return np.stack(columns, axis=1)


def deblur_problem(
    size: int = 32,
    *,
    seed: int = 7,
    alpha: float = 0.02,
    image: str = "camera",
) -> tuple[RedProblem, Image]:
    """
    9×9 uniform blur with noise σ = √2 and a 5×5 Gaussian filter denoiser.

    Returns the problem and the clean image.
    """
    clean = standard_image(image, size)
    H = make_blur(uniform_kernel(9), clean.shape)
    sigma = math.sqrt(2.0)
    y = add_gaussian_noise(H.apply(clean), sigma, seed)
    problem = RedProblem(
        H=H,
        y=y,
        sigma=sigma,
        alpha=alpha,
        f=GaussianFilterDenoiser(5, 1.0),
    )
    return problem, clean


def dense_problem(
    shape: Shape = (8, 8),
    *,
    sigma: float = 1.5,
    alpha: float = 0.3,
    seed: int = 0,
) -> RedProblem:
    """Small blur problem for checks against dense matrices"""
    H = make_blur(gaussian_kernel(5, 1.2), shape)
    return RedProblem(
        H=H,
        y=random_image(shape, seed + 1),
        sigma=sigma,
        alpha=alpha,
        f=GaussianFilterDenoiser(3, 0.8),
    )
