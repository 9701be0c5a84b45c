# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import math
from dataclasses import dataclass, replace
from enum import StrEnum
from typing import Any, NamedTuple, Self

from ..errors import ConfigError
from ..img.kernels import gaussian_kernel, uniform_kernel
from ..img.models import Image, Kernel, check_image
from ..img.noise import add_gaussian_noise
from ..img.samples import upscale_nearest
from ..ops.base import LinearOperator, Shape
from ..ops.blur import make_blur
from ..ops.compose import compose
from ..ops.decimation import make_decimation

DEBLUR_NOISE_SIGMA = math.sqrt(2.0)
SUPER_RESOLUTION_NOISE_SIGMA = 5.0
BLUR_KERNEL_SIZE = 9
SUPER_RESOLUTION_KERNEL_SIZE = 7
KERNEL_STD = 1.6
SUPER_RESOLUTION_FACTOR = 3

DEFAULT_DEBLUR_ALPHA = 0.02
DEFAULT_SUPER_RESOLUTION_ALPHA = 0.01


class TaskKind(StrEnum):
    DEBLUR_UNIFORM = "deblur-uniform"
    DEBLUR_GAUSSIAN = "deblur-gaussian"
    SUPER_RESOLUTION = "super-resolution"


@dataclass(frozen=True)
class TaskSpec:
    """
    A degradation protocol.

    Attributes:
        kind: The protocol.
        kernel_size: Side length of the blur kernel.
        kernel_std: Standard deviation of a Gaussian kernel. None selects a
            uniform kernel.
        noise_sigma: Standard deviation of the additive noise.
        seed: Seed of the noise generator.
        factor: Decimation factor, 1 for deblurring.
        offset: Sampling offset of the decimation.
    """

    kind: TaskKind
    kernel_size: int
    kernel_std: float | None
    noise_sigma: float
    seed: int = 0
    factor: int = 1
    offset: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", TaskKind(self.kind))
        if self.noise_sigma < 0:
            raise ConfigError(
                f"noise_sigma must not be negative: {self.noise_sigma}"
            )
        if self.factor < 1:
            raise ConfigError(f"factor must be positive: {self.factor}")
        if self.is_super_resolution == (self.factor == 1):
            raise ConfigError(
                f"Task {self.kind} does not support factor {self.factor}"
            )
        if not 0 <= self.offset < self.factor:
            raise ConfigError(
                f"offset must lie in [0, {self.factor}): {self.offset}"
            )

    @classmethod
    def preset(
        cls, kind: TaskKind | str, seed: int = 0, **overrides: Any
    ) -> Self:
        """
        One of the three standard protocols. Keyword arguments that are None
        keep the protocol value.
        """
        kind = TaskKind(kind)
        match kind:
            case TaskKind.DEBLUR_UNIFORM:
                task = cls(kind, BLUR_KERNEL_SIZE, None, DEBLUR_NOISE_SIGMA)
            case TaskKind.DEBLUR_GAUSSIAN:
                task = cls(
                    kind, BLUR_KERNEL_SIZE, KERNEL_STD, DEBLUR_NOISE_SIGMA
                )
            case TaskKind.SUPER_RESOLUTION:
                task = cls(
                    kind,
                    SUPER_RESOLUTION_KERNEL_SIZE,
                    KERNEL_STD,
                    SUPER_RESOLUTION_NOISE_SIGMA,
                    factor=SUPER_RESOLUTION_FACTOR,
                )
        return replace(
            task,
            seed=seed,
            **{
                name: value
                for name, value in overrides.items()
                if value is not None
            },
        )

    @property
    def is_super_resolution(self) -> bool:
        return self.kind == TaskKind.SUPER_RESOLUTION

    @property
    def default_alpha(self) -> float:
        if self.is_super_resolution:
            return DEFAULT_SUPER_RESOLUTION_ALPHA
        return DEFAULT_DEBLUR_ALPHA

    @property
    def default_sigma_model(self) -> float:
        return self.noise_sigma if self.noise_sigma > 0 else 1.0

    def kernel(self) -> Kernel:
        if self.kernel_std is None:
            return uniform_kernel(self.kernel_size)
        return gaussian_kernel(self.kernel_size, self.kernel_std)

    def describe(self) -> str:
        blur = (
            f"{self.kernel_size}x{self.kernel_size} uniform"
            if self.kernel_std is None
            else f"{self.kernel_size}x{self.kernel_size} gaussian std "
            f"{self.kernel_std:g}"
        )
        text = f"{self.kind}: {blur} blur"
        if self.is_super_resolution:
            text += f", decimation by {self.factor}"
        return f"{text}, noise sigma {self.noise_sigma:g}, seed {self.seed}"


def make_operator(task: TaskSpec, shape: Shape) -> LinearOperator:
    blur = make_blur(task.kernel(), shape)
    if not task.is_super_resolution:
        return blur
    return compose(make_decimation(task.factor, shape, task.offset), blur)


class Degradation(NamedTuple):
    measurement: Image
    operator: LinearOperator


def degrade(task: TaskSpec, clean: Image) -> Degradation:
    """
    y = H(clean) + noise. The result depends on the task, its seed and the
    clean image only.

    Raises:
        OperatorError: The image does not fit the protocol, e.g. its sides are
            not divisible by the decimation factor.
    """
    clean = check_image(clean, "clean image")
    operator = make_operator(task, clean.shape)
    measurement = add_gaussian_noise(
        operator.apply(clean), task.noise_sigma, task.seed
    )
    return Degradation(measurement, operator)


def initial_estimate(task: TaskSpec, measurement: Image) -> Image:
    if task.is_super_resolution:
        return upscale_nearest(measurement, task.factor)
    return measurement.copy()
