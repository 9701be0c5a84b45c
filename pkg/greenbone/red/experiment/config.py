# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Mapping, TypeVar

import fastjsonschema

from ..denoise.registry import DenoiserKind, DenoiserSpec
from ..errors import ConfigError
from ..solve import SolverKind
from ..solve.config import InnerSolver, NegativeCurvature, SolverConfig
from .tasks import TaskKind, TaskSpec

T = TypeVar("T")

_POSITIVE_NUMBER = {"type": "number", "exclusiveMinimum": 0}
_POSITIVE_INTEGER = {"type": "integer", "minimum": 1}

CONFIG_SCHEMA: dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "greenbone-red experiment configuration",
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "task": {"enum": [kind.value for kind in TaskKind]},
        "solver": {"enum": [kind.value for kind in SolverKind]},
        "solvers": {
            "type": "array",
            "items": {"enum": [kind.value for kind in SolverKind]},
            "minItems": 1,
        },
        "alpha": _POSITIVE_NUMBER,
        "sigma_model": _POSITIVE_NUMBER,
        "denoiser": {"enum": [kind.value for kind in DenoiserKind]},
        "denoiser_size": _POSITIVE_INTEGER,
        "denoiser_std": _POSITIVE_NUMBER,
        "denoiser_command": {"type": "string", "minLength": 1},
        "budget": _POSITIVE_INTEGER,
        "max_iters": _POSITIVE_INTEGER,
        "seed": {"type": "integer", "minimum": 0},
        "noise_sigma": {"type": "number", "minimum": 0},
        "kernel_size": _POSITIVE_INTEGER,
        "kernel_std": _POSITIVE_NUMBER,
        "input": {"type": "string"},
        "image": {"type": "string"},
        "size": _POSITIVE_INTEGER,
        "output_image": {"type": "string"},
        "trace": {"type": "string"},
        "trace_dir": {"type": "string"},
        "inner_solver": {"enum": [kind.value for kind in InnerSolver]},
        "sr1_negative_curvature": {
            "enum": [kind.value for kind in NegativeCurvature]
        },
        "tol": {"type": "number", "minimum": 0},
        "retry_attempts": _POSITIVE_INTEGER,
        "workers": _POSITIVE_INTEGER,
        "slack": {"type": "number", "minimum": 0},
        "early_evals": _POSITIVE_INTEGER,
        "verbose": {"type": "integer", "minimum": 0},
    },
}

validate_config = fastjsonschema.compile(CONFIG_SCHEMA)


def load_config_file(path: Path) -> dict[str, Any]:
    """
    Load and validate a JSON experiment configuration. Its keys are the
    command line flags in snake_case.
    """
    try:
        data = json.loads(path.read_text(encoding="utf8"))
    except OSError as e:
        raise ConfigError(f"Could not read config file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"Config file {path} is not valid JSON: {e}") from e

    try:
        validate_config(data)
    except fastjsonschema.JsonSchemaException as e:
        raise ConfigError(
            f"Config file {path} is invalid. Name: {e.name} Value: {e.value} "
            f"Rule: {e.rule}"
        ) from e
    return data


class Settings:
    """
    Resolves a setting from the command line, a config file and the
    environment, in this order.
    """

    def __init__(
        self,
        args: Any,
        file_config: Mapping[str, Any] | None = None,
        environ: Mapping[str, str] | None = None,
    ) -> None:
        self._args = args
        self._file_config = file_config or {}
        self._environ = os.environ if environ is None else environ

    def get(
        self,
        name: str,
        default: T,
        *,
        env: str | None = None,
        convert: Callable[[Any], T] | None = None,
    ) -> T:
        value = getattr(self._args, name, None)
        if value is None:
            value = self._file_config.get(name)
        if value is None and env:
            value = self._environ.get(env) or None
        if value is None:
            return default
        if convert is None:
            return value
        try:
            return convert(value)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid value for {name}: {value!r}") from e

    def path(self, name: str) -> Path | None:
        return self.get(name, None, convert=Path)


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a single experiment run needs.

    Attributes:
        task: Degradation protocol.
        solver: Solver to run.
        alpha: Weight of the RED prior.
        sigma_model: σ of the data term.
        denoiser: Recipe for the run's own denoiser.
        solver_config: Solver settings.
        input: PGM file with the clean image.
        output_image: Where to write the recovered image.
        trace: Where to write the trace CSV.
    """

    task: TaskSpec
    solver: SolverKind = SolverKind.WPM
    alpha: float | None = None
    sigma_model: float | None = None
    denoiser: DenoiserSpec = field(default_factory=DenoiserSpec)
    solver_config: SolverConfig = field(default_factory=SolverConfig)
    input: Path | None = None
    output_image: Path | None = None
    trace: Path | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "solver", SolverKind(self.solver))
        if self.alpha is None:
            object.__setattr__(self, "alpha", self.task.default_alpha)
        if self.sigma_model is None:
            object.__setattr__(
                self, "sigma_model", self.task.default_sigma_model
            )
        if not self.alpha > 0:  # type: ignore[operator]
            raise ConfigError(f"alpha must be positive: {self.alpha}")
        if not self.sigma_model > 0:  # type: ignore[operator]
            raise ConfigError(
                f"sigma_model must be positive: {self.sigma_model}"
            )
