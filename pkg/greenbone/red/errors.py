# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later


class RedError(Exception):
    """Base Error class"""


class ImageError(RedError):
    """An image violates the shape or finiteness invariants"""


class KernelError(RedError):
    """Invalid kernel parameters"""


class PgmError(ImageError):
    """A PGM file could not be read"""


class PgmHeaderError(PgmError):
    """Malformed PGM header"""


class PgmMaxvalError(PgmError):
    """PGM maxval other than 255"""


class PgmTruncatedError(PgmError):
    """PGM payload shorter than announced by the header"""


class OperatorError(RedError):
    """Invalid linear operator construction or application"""


class DenoiserError(RedError):
    """A denoiser produced an invalid result"""


class ExternalDenoiserError(DenoiserError):
    """The external denoiser process failed"""


class ProblemError(RedError):
    """Invalid RED problem parameters"""


class SolverError(RedError):
    """A solver could not continue"""


class CGError(SolverError):
    """Conjugate gradients broke down"""


class WeightingError(SolverError):
    """A weighting is not symmetric positive definite"""


class SafeguardError(SolverError):
    """The step-size safeguard gave up"""


class TraceError(RedError):
    """Inconsistent or incomplete solver trace"""


class ConfigError(RedError):
    """Invalid experiment configuration"""
