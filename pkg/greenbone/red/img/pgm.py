# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

from pathlib import Path

import numpy as np

from ..errors import PgmHeaderError, PgmMaxvalError, PgmTruncatedError
from .models import Image, check_image

SUPPORTED_MAXVAL = 255
_WHITESPACE = b" \t\n\r\v\f"


class _HeaderReader:
    """Reads the whitespace separated header tokens of a netpbm file"""

    def __init__(self, data: bytes) -> None:
        self._data = data
        self.position = 0

    def _skip_whitespace_and_comments(self) -> None:
        data = self._data
        while self.position < len(data):
            char = data[self.position : self.position + 1]
            if char in _WHITESPACE:
                self.position += 1
            elif char == b"#":
                end = data.find(b"\n", self.position)
                self.position = len(data) if end < 0 else end + 1
            else:
                return

    def token(self) -> bytes:
        self._skip_whitespace_and_comments()
        start = self.position
        data = self._data
        while (
            self.position < len(data)
            and data[self.position : self.position + 1] not in _WHITESPACE
            and data[self.position : self.position + 1] != b"#"
        ):
            self.position += 1
        if start == self.position:
            raise PgmHeaderError("Unexpected end of PGM header")
        return data[start : self.position]

    def integer(self, name: str) -> int:
        token = self.token()
        if not token.isdigit():
            raise PgmHeaderError(f"Invalid PGM {name}: {token!r}")
        return int(token)


def decode_pgm(data: bytes) -> Image:
    """
    Decode a binary (P5) or ASCII (P2) PGM with maxval 255.

    Raises:
        PgmHeaderError: The magic number, width or height are invalid.
        PgmMaxvalError: The maxval is not 255.
        PgmTruncatedError: The payload holds fewer pixels than announced.
    """
    reader = _HeaderReader(data)
    magic = reader.token() if data else b""
    if magic not in (b"P5", b"P2"):
        raise PgmHeaderError(f"Unsupported PGM magic number {magic!r}")

    width = reader.integer("width")
    height = reader.integer("height")
    if width < 1 or height < 1:
        raise PgmHeaderError(f"Invalid PGM dimensions {width}x{height}")

    maxval = reader.integer("maxval")
    if maxval != SUPPORTED_MAXVAL:
        raise PgmMaxvalError(
            f"Unsupported PGM maxval {maxval}, only {SUPPORTED_MAXVAL} is "
            "supported"
        )

    count = width * height
    if magic == b"P5":
        # exactly one whitespace character separates header and payload
        payload = data[reader.position + 1 : reader.position + 1 + count]
        if reader.position >= len(data) or len(payload) < count:
            raise PgmTruncatedError(
                f"PGM payload has {len(payload)} of {count} bytes"
            )
        values = np.frombuffer(payload, dtype=np.uint8)
    else:
        tokens = data[reader.position :].split()
        if len(tokens) < count:
            raise PgmTruncatedError(
                f"PGM payload has {len(tokens)} of {count} values"
            )
        try:
            values = np.array([int(t) for t in tokens[:count]])
        except ValueError as e:
            raise PgmHeaderError(f"Invalid ASCII PGM payload: {e}") from e
        if values.min() < 0 or values.max() > maxval:
            raise PgmHeaderError("ASCII PGM value outside of [0, maxval]")

    return values.astype(np.float64).reshape(height, width)


def encode_pgm(x: Image) -> bytes:
    """
    Encode an image as binary PGM.

    Intensities are clamped to [0, 255] and rounded; the image itself is not
    modified.
    """
    x = check_image(x)
    height, width = x.shape
    payload = np.rint(np.clip(x, 0, SUPPORTED_MAXVAL)).astype(np.uint8)
    header = f"P5\n{width} {height}\n{SUPPORTED_MAXVAL}\n".encode("ascii")
    return header + payload.tobytes()


def load_pgm(path: Path | str) -> Image:
    return decode_pgm(Path(path).read_bytes())


def save_pgm(path: Path | str, x: Image) -> None:
    path = Path(path)
    # ensure directories exist
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(encode_pgm(x))
