# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import unittest

import numpy as np

from greenbone.red.errors import ImageError
from greenbone.red.img.models import check_image


class CheckImageTestCase(unittest.TestCase):
    def test_converts_to_float(self):
        x = check_image(np.arange(4, dtype=np.uint8).reshape(2, 2))

        self.assertEqual(x.dtype, np.float64)

    def test_not_two_dimensional(self):
        with self.assertRaisesRegex(ImageError, "two dimensional"):
            check_image(np.zeros(4))

        with self.assertRaises(ImageError):
            check_image(np.zeros((2, 2, 3)))

    def test_empty(self):
        with self.assertRaisesRegex(ImageError, "empty"):
            check_image(np.zeros((0, 3)))

    def test_non_finite(self):
        with self.assertRaisesRegex(ImageError, "non-finite"):
            check_image(np.array([[1.0, np.inf]]))
