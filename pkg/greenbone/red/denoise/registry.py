# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from dataclasses import dataclass
from enum import StrEnum
from typing import Callable

from ..errors import DenoiserError
from .base import Denoiser
from .external import DEFAULT_RETRY_ATTEMPTS, ExternalProcessDenoiser
from .filters import BoxFilterDenoiser, GaussianFilterDenoiser


class DenoiserKind(StrEnum):
    GAUSSIAN = "gaussian"
    BOX = "box"
    EXTERNAL = "external"


@dataclass(frozen=True)
class DenoiserSpec:
    """
    Recipe for creating a fresh denoiser instance.

    Every solver run owns its denoiser, so runs executed in parallel never
    share an evaluation counter.
    """

    kind: DenoiserKind = DenoiserKind.GAUSSIAN
    size: int = 5
    std: float = 1.0
    command: str | None = None
    retry_attempts: int = DEFAULT_RETRY_ATTEMPTS
    noise_level_hint: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", DenoiserKind(self.kind))
        if self.kind == DenoiserKind.EXTERNAL and not self.command:
            raise DenoiserError("The external denoiser requires a command")

    def describe(self) -> str:
        if self.kind == DenoiserKind.GAUSSIAN:
            return f"gaussian {self.size}x{self.size} std {self.std:g}"
        if self.kind == DenoiserKind.BOX:
            return f"box {self.size}x{self.size}"
        return f"external '{self.command}'"


def _gaussian(spec: DenoiserSpec) -> Denoiser:
    return GaussianFilterDenoiser(
        spec.size, spec.std, noise_level_hint=spec.noise_level_hint
    )


def _box(spec: DenoiserSpec) -> Denoiser:
    return BoxFilterDenoiser(spec.size, noise_level_hint=spec.noise_level_hint)


def _external(spec: DenoiserSpec) -> Denoiser:
    return ExternalProcessDenoiser(
        spec.command or "",
        retry_attempts=spec.retry_attempts,
        noise_level_hint=spec.noise_level_hint,
    )


BUNDLED_DENOISERS: dict[DenoiserKind, Callable[[DenoiserSpec], Denoiser]] = {
    DenoiserKind.GAUSSIAN: _gaussian,
    DenoiserKind.BOX: _box,
}
"Denoisers satisfying local homogeneity and the Jacobian bound"

_FACTORIES = {**BUNDLED_DENOISERS, DenoiserKind.EXTERNAL: _external}


def create_denoiser(spec: DenoiserSpec) -> Denoiser:
    return _FACTORIES[spec.kind](spec)
