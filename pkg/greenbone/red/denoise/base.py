# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import threading
from abc import ABC, abstractmethod

import numpy as np

from ..errors import DenoiserError
from ..img.models import Image, check_image


class Denoiser(ABC):
    """
    Abstract denoiser f(·) with a mandatory evaluation counter.

    Denoiser calls dominate the cost of every RED solver, so each call of
    `denoise` is counted exactly once. The counter is guarded by a lock and
    may be read from other threads while a solver runs.
    """

    name: str = "denoiser"
    "Short name used in log messages and traces."

    def __init__(self, *, noise_level_hint: float | None = None) -> None:
        """
        Args:
            noise_level_hint: Optional noise standard deviation passed on to
                plugins that need one.
        """
        if noise_level_hint is not None and not noise_level_hint > 0:
            raise DenoiserError(
                f"Noise level hint must be positive: {noise_level_hint}"
            )
        self.noise_level_hint = noise_level_hint
        self._eval_count = 0
        self._lock = threading.Lock()

    @property
    def eval_count(self) -> int:
        with self._lock:
            return self._eval_count

    @abstractmethod
    def _denoise(self, x: Image) -> Image:
        """
        Denoise a validated image.

        Args:
            x: Finite float64 image.

        Returns:
            The denoised image of the same shape.
        """

    def denoise(self, x: Image) -> Image:
        """Evaluate f(x) and increment the evaluation counter"""
        x = check_image(x)
        with self._lock:
            self._eval_count += 1

        result = np.asarray(self._denoise(x), dtype=np.float64)
        if result.shape != x.shape:
            raise DenoiserError(
                f"{self.name} returned shape {result.shape} for input of "
                f"shape {x.shape}"
            )
        if not np.all(np.isfinite(result)):
            raise DenoiserError(f"{self.name} returned non-finite values")
        return result

    __call__ = denoise

    def __repr__(self) -> str:
        return f"{type(self).__name__}(eval_count={self.eval_count})"
