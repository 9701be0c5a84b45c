# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import sys
import unittest

import numpy as np
import stamina
from pontos.testing import temp_directory

from greenbone.red.denoise.external import ExternalProcessDenoiser
from greenbone.red.errors import DenoiserError, ExternalDenoiserError

ECHO = "import sys; sys.stdout.buffer.write(sys.stdin.buffer.read())"
INVERT = (
    "import sys; data = sys.stdin.buffer.read(); "
    "sys.stdout.buffer.write(data[:11] + bytes(255 - b for b in data[11:]))"
)


def python(script: str) -> list[str]:
    return [sys.executable, "-c", script]


class ExternalProcessDenoiserTestCase(unittest.TestCase):
    def setUp(self):
        stamina.set_testing(True, attempts=3)

    def tearDown(self):
        stamina.set_testing(False)

    def test_round_trip(self):
        d = ExternalProcessDenoiser(python(ECHO))
        x = np.array([[0.0, 12.0, 250.0], [3.0, 4.0, 5.0]])

        np.testing.assert_array_equal(d.denoise(x), x)
        self.assertEqual(d.eval_count, 1)

    def test_uses_result(self):
        # header of a 3x2 image is 11 bytes long
        d = ExternalProcessDenoiser(python(INVERT))
        x = np.array([[0.0, 12.0, 250.0], [3.0, 4.0, 5.0]])

        np.testing.assert_array_equal(d.denoise(x), 255 - x)

    def test_command_string(self):
        d = ExternalProcessDenoiser("cat")

        self.assertEqual(d.command, ["cat"])

    def test_failure(self):
        d = ExternalProcessDenoiser(
            python("import sys; sys.stderr.write('boom'); sys.exit(3)")
        )

        with self.assertRaisesRegex(ExternalDenoiserError, "code 3: boom"):
            d.denoise(np.zeros((2, 2)))

        self.assertEqual(d.eval_count, 1)

    def test_invalid_output(self):
        d = ExternalProcessDenoiser(python("print('no image')"))

        with self.assertRaisesRegex(ExternalDenoiserError, "invalid PGM"):
            d.denoise(np.zeros((2, 2)))

    def test_missing_executable(self):
        d = ExternalProcessDenoiser(["/nonexistent/denoiser"])

        with self.assertRaisesRegex(ExternalDenoiserError, "Could not start"):
            d.denoise(np.zeros((2, 2)))

    def test_retries(self):
        with temp_directory() as temp_dir:
            marker = temp_dir / "failed-once"
            script = (
                "import pathlib, sys\n"
                f"marker = pathlib.Path({str(marker)!r})\n"
                "if not marker.exists():\n"
                "    marker.touch()\n"
                "    sys.exit(1)\n"
                "sys.stdout.buffer.write(sys.stdin.buffer.read())\n"
            )
            d = ExternalProcessDenoiser(python(script), retry_attempts=3)
            x = np.full((2, 2), 7.0)

            np.testing.assert_array_equal(d.denoise(x), x)
            self.assertTrue(marker.exists())
            self.assertEqual(d.eval_count, 1)

    def test_invalid(self):
        with self.assertRaises(DenoiserError):
            ExternalProcessDenoiser([])

        with self.assertRaises(DenoiserError):
            ExternalProcessDenoiser("cat", retry_attempts=0)
