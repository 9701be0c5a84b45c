# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import shlex
import subprocess
from typing import Sequence

import stamina

from ..errors import DenoiserError, ExternalDenoiserError, PgmError
from ..img.models import Image
from ..img.pgm import decode_pgm, encode_pgm
from .base import Denoiser

DEFAULT_RETRY_ATTEMPTS = 3
DEFAULT_TIMEOUT = 60.0


class ExternalProcessDenoiser(Denoiser):
    """
    Runs a denoiser as child process.

    The child reads one binary PGM from standard input and writes the denoised
    PGM to standard output. A non-zero exit code, a timeout or an unreadable
    result counts as failure and the call is retried up to `retry_attempts`
    times.

    The image is clamped and rounded to 8 bit on the way to the child, so
    the assumption checks generally do not hold for external denoisers.
    """

    name = "external"

    def __init__(
        self,
        command: Sequence[str] | str,
        *,
        retry_attempts: int = DEFAULT_RETRY_ATTEMPTS,
        timeout: float | None = DEFAULT_TIMEOUT,
        noise_level_hint: float | None = None,
    ) -> None:
        super().__init__(noise_level_hint=noise_level_hint)
        self.command: list[str] = (
            shlex.split(command) if isinstance(command, str) else list(command)
        )
        if not self.command:
            raise DenoiserError("External denoiser command is empty")
        if retry_attempts < 1:
            raise DenoiserError(
                f"Retry attempts must be positive: {retry_attempts}"
            )
        self.retry_attempts = retry_attempts
        self.timeout = timeout

    def _run_once(self, payload: bytes) -> Image:
        try:
            process = subprocess.run(
                self.command,
                input=payload,
                capture_output=True,
                timeout=self.timeout,
                check=False,
            )
        except subprocess.TimeoutExpired as e:
            raise ExternalDenoiserError(
                f"External denoiser {self.command[0]} timed out after "
                f"{self.timeout} seconds"
            ) from e
        except OSError as e:
            raise ExternalDenoiserError(
                f"Could not start external denoiser {self.command[0]}: {e}"
            ) from e

        if process.returncode != 0:
            raise ExternalDenoiserError(
                f"External denoiser {self.command[0]} exited with code "
                f"{process.returncode}: "
                f"{process.stderr.decode('utf-8', errors='replace').strip()}"
            )
        try:
            return decode_pgm(process.stdout)
        except PgmError as e:
            raise ExternalDenoiserError(
                f"External denoiser {self.command[0]} wrote an invalid PGM: "
                f"{e}"
            ) from e

    def _denoise(self, x: Image) -> Image:
        payload = encode_pgm(x)
        for attempt in stamina.retry_context(
            on=ExternalDenoiserError,
            attempts=self.retry_attempts,
            timeout=None,
        ):
            with attempt:
                return self._run_once(payload)

        # not reached, retry_context either returns or raises
        raise ExternalDenoiserError("External denoiser did not run")
