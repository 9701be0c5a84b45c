# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import unittest

from greenbone.red.errors import SolverError
from greenbone.red.solve.config import (
    InnerSolver,
    NegativeCurvature,
    SolverConfig,
)


class SolverConfigTestCase(unittest.TestCase):
    def test_defaults(self):
        config = SolverConfig()

        self.assertEqual(config.max_denoiser_evals, 200)
        self.assertEqual(config.step_size_init, 1.0)
        self.assertEqual(config.safeguard_epsilon, 1e-2)
        self.assertEqual(config.cg_tol, 1e-6)
        self.assertEqual(config.cg_max_iters, 50)
        self.assertEqual(config.gamma, 1.25)
        self.assertEqual(config.delta, 1e-8)
        self.assertEqual(config.tol, 0.0)
        self.assertEqual(config.max_halvings, 30)
        self.assertEqual(config.inner_solver, InnerSolver.AUTO)
        self.assertEqual(
            config.sr1_negative_curvature, NegativeCurvature.DOWNDATE
        )

    def test_strings(self):
        config = SolverConfig(
            inner_solver="cg", sr1_negative_curvature="fallback"
        )

        self.assertIs(config.inner_solver, InnerSolver.CG)
        self.assertIs(config.sr1_negative_curvature, NegativeCurvature.FALLBACK)

    def test_invalid(self):
        for kwargs in (
            {"gamma": 1.0},
            {"max_denoiser_evals": 0},
            {"cg_tol": 0.0},
            {"safeguard_epsilon": -1.0},
            {"tol": -0.1},
            {"max_halvings": 0},
        ):
            with self.subTest(**kwargs), self.assertRaises(SolverError):
                SolverConfig(**kwargs)

        with self.assertRaises(ValueError):
            SolverConfig(inner_solver="lu")
