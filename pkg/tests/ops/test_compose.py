# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import unittest

import numpy as np

from greenbone.red.errors import OperatorError
from greenbone.red.img.kernels import gaussian_kernel, uniform_kernel
from greenbone.red.ops.base import identity
from greenbone.red.ops.blur import make_blur
from greenbone.red.ops.compose import compose
from greenbone.red.ops.decimation import make_decimation
from tests.helpers import random_image


class ComposeTestCase(unittest.TestCase):
    def test_blur_then_decimate(self):
        blur = make_blur(gaussian_kernel(7, 1.6), (48, 48))
        S = make_decimation(3, (48, 48))
        H = compose(S, blur)
        x = random_image((48, 48), 1)
        y = random_image((16, 16), 2)

        self.assertEqual(H.input_shape, (48, 48))
        self.assertEqual(H.output_shape, (16, 16))
        self.assertFalse(H.is_circulant)
        np.testing.assert_allclose(H.apply(x), S.apply(blur.apply(x)))
        self.assertLessEqual(
            abs(np.vdot(H.apply(x), y) - np.vdot(x, H.adjoint_apply(y))),
            1e-8 * np.linalg.norm(x) * np.linalg.norm(y),
        )

    def test_associative(self):
        shape = (12, 12)
        a = make_blur(uniform_kernel(3), shape)
        b = make_blur(gaussian_kernel(5, 1.0), shape)
        c = make_decimation(2, shape)
        x = random_image(shape, 3)

        np.testing.assert_allclose(
            compose(c, compose(b, a)).apply(x),
            compose(compose(c, b), a).apply(x),
        )

    def test_circulant_product(self):
        shape = (16, 16)
        a = make_blur(uniform_kernel(3), shape)
        b = make_blur(gaussian_kernel(5, 1.0), shape)
        H = compose(a, b)
        x = random_image(shape, 4)

        self.assertTrue(H.is_circulant)
        self.assertLessEqual(
            np.linalg.norm(H.apply(x) - H.apply_fourier(x)),
            1e-8 * np.linalg.norm(H.apply(x)),
        )

    def test_shape_mismatch(self):
        with self.assertRaisesRegex(OperatorError, "Cannot compose"):
            compose(identity((4, 4)), make_decimation(2, (4, 4)))
