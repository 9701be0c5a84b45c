# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import unittest

import numpy as np

from greenbone.red.denoise.filters import GaussianFilterDenoiser
from greenbone.red.img.kernels import gaussian_kernel
from greenbone.red.ops.blur import make_blur
from greenbone.red.ops.compose import compose
from greenbone.red.ops.decimation import make_decimation
from greenbone.red.problem import RedProblem
from greenbone.red.solve.config import InnerSolver, SolverConfig
from greenbone.red.solve.linear import solve_step_system
from greenbone.red.solve.weighting import Weighting, scaled_identity
from greenbone.red.solve.wpm import wpm_step
from tests.helpers import dense_problem, denoiser_matrix, random_image

EXACT_CG = SolverConfig(
    inner_solver=InnerSolver.CG, cg_tol=1e-13, cg_max_iters=500
)


def dense_weighting(weighting: Weighting, size: int) -> np.ndarray:
    B = weighting.tau * np.eye(size)
    if weighting.u is not None:
        u = weighting.u.ravel()
        B += weighting.sign * np.outer(u, u)
    return B


class SolveStepSystemTestCase(unittest.TestCase):
    def setUp(self):
        self.problem = dense_problem()
        self.H = self.problem.H.to_matrix()
        rng = np.random.default_rng(9)
        self.weightings = [
            scaled_identity(0.3),
            Weighting(tau=0.8, u=0.05 * rng.standard_normal((8, 8))),
            Weighting(tau=0.8, u=0.05 * rng.standard_normal((8, 8)), sign=-1),
        ]

    def test_matches_dense_solve(self):
        rhs = random_image((8, 8), 3)
        step_size = 0.6
        gram = step_size * self.H.T @ self.H / self.problem.sigma**2

        for weighting in self.weightings:
            expected = np.linalg.solve(
                gram + dense_weighting(weighting, 64), rhs.ravel()
            )
            for config in (SolverConfig(), EXACT_CG):
                with self.subTest(
                    sign=weighting.sign,
                    rank_one=weighting.u is not None,
                    inner=config.inner_solver,
                ):
                    x = solve_step_system(
                        self.problem,
                        rhs,
                        step_size,
                        weighting,
                        np.zeros((8, 8)),
                        config,
                    )

                    np.testing.assert_allclose(
                        x.ravel(), expected, rtol=1e-6, atol=1e-8
                    )

    def test_non_circulant_operator_uses_cg(self):
        shape = (12, 12)
        H = compose(
            make_decimation(3, shape),
            make_blur(gaussian_kernel(5, 1.0), shape),
        )
        problem = RedProblem(
            H=H,
            y=random_image((4, 4)),
            sigma=5.0,
            alpha=0.01,
            f=GaussianFilterDenoiser(),
        )
        matrix = H.to_matrix()
        rhs = random_image(shape, 1)

        x = solve_step_system(
            problem, rhs, 1.0, scaled_identity(0.01), np.zeros(shape), EXACT_CG
        )

        expected = np.linalg.solve(
            matrix.T @ matrix / 25.0 + 0.01 * np.eye(144), rhs.ravel()
        )
        np.testing.assert_allclose(x.ravel(), expected, rtol=1e-6, atol=1e-8)


class WpmStepDenseTestCase(unittest.TestCase):
    def test_dense_oracle(self):
        problem = dense_problem()
        H = problem.H.to_matrix()
        W = denoiser_matrix(GaussianFilterDenoiser(3, 0.8), (8, 8))
        rng = np.random.default_rng(4)
        B = Weighting(tau=0.5, u=0.05 * rng.standard_normal((8, 8)), sign=-1)
        x = random_image((8, 8), 5).ravel()
        y = problem.y.ravel()
        a = 0.7
        s2 = problem.sigma**2

        expected = np.linalg.solve(
            a / s2 * H.T @ H + dense_weighting(B, 64),
            a / s2 * H.T @ y
            + dense_weighting(B, 64) @ x
            - a * problem.alpha * (x - W @ x),
        )

        for config in (SolverConfig(), EXACT_CG):
            with self.subTest(inner=config.inner_solver):
                x_next = wpm_step(problem, x.reshape(8, 8), B, a, config)

                np.testing.assert_allclose(
                    x_next.ravel(), expected, rtol=1e-6, atol=1e-8
                )

    def test_costs_one_evaluation(self):
        problem = dense_problem()
        x = random_image((8, 8))

        wpm_step(problem, x, scaled_identity(0.3), 1.0, SolverConfig())

        self.assertEqual(problem.f.eval_count, 1)

        wpm_step(
            problem,
            x,
            scaled_identity(0.3),
            1.0,
            SolverConfig(),
            denoised=problem.f.denoise(x),
        )

        self.assertEqual(problem.f.eval_count, 2)
