# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import math
import unittest

import numpy as np

from greenbone.red.errors import ImageError
from greenbone.red.img.metrics import INFINITE_PSNR, clamped_psnr, psnr


class PsnrTestCase(unittest.TestCase):
    def test_identical_images(self):
        x = np.full((4, 4), 17.0)

        self.assertEqual(psnr(x, x.copy()), INFINITE_PSNR)
        self.assertTrue(math.isinf(psnr(x, x)))

    def test_known_value(self):
        reference = np.zeros((8, 8))
        test = np.full((8, 8), 255.0)

        self.assertAlmostEqual(psnr(reference, test), 0.0)

        # MSE of 1 → 20·log10(255)
        self.assertAlmostEqual(
            psnr(reference, np.ones((8, 8))), 20 * math.log10(255)
        )

    def test_symmetric(self):
        rng = np.random.default_rng(1)
        a = 255 * rng.random((5, 6))
        b = 255 * rng.random((5, 6))

        self.assertAlmostEqual(psnr(a, b), psnr(b, a))

    def test_shape_mismatch(self):
        with self.assertRaisesRegex(ImageError, "dimensions differ"):
            psnr(np.zeros((4, 4)), np.zeros((4, 5)))

    def test_non_finite(self):
        x = np.zeros((2, 2))
        y = np.zeros((2, 2))
        y[0, 0] = np.nan

        with self.assertRaises(ImageError):
            psnr(x, y)


class ClampedPsnrTestCase(unittest.TestCase):
    def test_clamps_and_rounds(self):
        reference = np.array([[0.0, 255.0], [10.0, 20.0]])
        test = np.array([[-30.0, 300.0], [10.2, 19.6]])

        self.assertEqual(clamped_psnr(reference, test), INFINITE_PSNR)
        self.assertLess(psnr(reference, test), 30.0)
