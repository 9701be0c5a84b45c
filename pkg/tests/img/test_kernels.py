# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import unittest

import numpy as np

from greenbone.red.errors import KernelError
from greenbone.red.img.kernels import gaussian_kernel, uniform_kernel
from greenbone.red.img.models import Kernel


class GaussianKernelTestCase(unittest.TestCase):
    def test_sums_to_one(self):
        kernel = gaussian_kernel(7, 1.6)

        self.assertEqual(kernel.size, 7)
        self.assertEqual(kernel.center, 3)
        self.assertAlmostEqual(kernel.taps.sum(), 1.0, places=12)

    def test_symmetric_with_peak_in_center(self):
        taps = gaussian_kernel(9, 1.6).taps

        np.testing.assert_allclose(taps, taps.T)
        np.testing.assert_allclose(taps, taps[::-1, ::-1])
        self.assertEqual(np.argmax(taps), 4 * 9 + 4)

    def test_invalid(self):
        with self.assertRaises(KernelError):
            gaussian_kernel(4, 1.0)

        with self.assertRaises(KernelError):
            gaussian_kernel(0, 1.0)

        with self.assertRaises(KernelError):
            gaussian_kernel(5, 0.0)


class UniformKernelTestCase(unittest.TestCase):
    def test_uniform(self):
        kernel = uniform_kernel(9)

        np.testing.assert_allclose(kernel.taps, np.full((9, 9), 1 / 81))

    def test_invalid(self):
        with self.assertRaises(KernelError):
            uniform_kernel(2)


class KernelTestCase(unittest.TestCase):
    def test_read_only(self):
        kernel = uniform_kernel(3)

        with self.assertRaises(ValueError):
            kernel.taps[0, 0] = 1.0

    def test_must_sum_to_one(self):
        with self.assertRaises(KernelError):
            Kernel(np.ones((3, 3)))

    def test_must_be_square_and_odd(self):
        with self.assertRaises(KernelError):
            Kernel(np.full((3, 5), 1 / 15))

        with self.assertRaises(KernelError):
            Kernel(np.full((2, 2), 0.25))
