# SPDX-FileCopyrightText: 2024 Greenbone AG
#
# SPDX-License-Identifier: GPL-3.0-or-later

import json
import unittest
from argparse import ArgumentParser
from pathlib import Path

from pontos.testing import temp_directory

from greenbone.red.cli import CLIError
from greenbone.red.denoise.registry import DenoiserKind
from greenbone.red.experiment.cli.arguments import (
    add_experiment_arguments,
    file_config,
    load_clean_image,
    run_config_from_settings,
    verbosity,
)
from greenbone.red.experiment.config import Settings
from greenbone.red.experiment.tasks import TaskKind
from greenbone.red.img.pgm import save_pgm
from greenbone.red.img.samples import standard_image
from greenbone.red.solve import SolverKind
from greenbone.red.solve.config import InnerSolver, NegativeCurvature


def parse(*args: str):
    parser = ArgumentParser()
    add_experiment_arguments(parser)
    return parser.parse_args(args)


class AddExperimentArgumentsTestCase(unittest.TestCase):
    def test_defaults(self):
        args = parse()

        for name in (
            "config",
            "verbose",
            "task",
            "seed",
            "noise_sigma",
            "kernel_size",
            "kernel_std",
            "input",
            "image",
            "size",
            "alpha",
            "sigma_model",
            "denoiser",
            "denoiser_size",
            "denoiser_std",
            "denoiser_command",
            "retry_attempts",
            "budget",
            "max_iters",
            "tol",
            "inner_solver",
            "sr1_negative_curvature",
        ):
            with self.subTest(name=name):
                self.assertIsNone(getattr(args, name))

    def test_input_or_image(self):
        self.assertEqual(parse("--input", "a.pgm").input, Path("a.pgm"))
        self.assertEqual(parse("--image", "moon").image, "moon")

        with self.assertRaises(SystemExit):
            parse("--input", "a.pgm", "--image", "moon")

    def test_verbose(self):
        self.assertEqual(parse("-vv").verbose, 2)


class RunConfigFromSettingsTestCase(unittest.TestCase):
    def test_defaults(self):
        config = run_config_from_settings(Settings(parse(), environ={}))

        self.assertEqual(config.task.kind, TaskKind.DEBLUR_UNIFORM)
        self.assertEqual(config.task.seed, 0)
        self.assertEqual(config.solver, SolverKind.WPM)
        self.assertEqual(config.alpha, 0.02)
        self.assertEqual(config.denoiser.kind, DenoiserKind.GAUSSIAN)
        self.assertEqual(config.denoiser.size, 5)
        self.assertEqual(config.solver_config.max_denoiser_evals, 200)
        self.assertEqual(config.solver_config.inner_solver, InnerSolver.AUTO)
        self.assertIsNone(config.input)

    def test_arguments(self):
        args = parse(
            "--task",
            "super-resolution",
            "--seed",
            "3",
            "--noise-sigma",
            "2.5",
            "--alpha",
            "0.1",
            "--denoiser",
            "box",
            "--denoiser-size",
            "3",
            "--budget",
            "40",
            "--inner-solver",
            "cg",
            "--sr1-negative-curvature",
            "fallback",
        )

        config = run_config_from_settings(
            Settings(args, environ={}), solver="apg"
        )

        self.assertEqual(config.task.kind, TaskKind.SUPER_RESOLUTION)
        self.assertEqual(config.task.seed, 3)
        self.assertEqual(config.task.noise_sigma, 2.5)
        self.assertEqual(config.task.factor, 3)
        self.assertEqual(config.sigma_model, 2.5)
        self.assertEqual(config.alpha, 0.1)
        self.assertEqual(config.solver, SolverKind.APG)
        self.assertEqual(config.denoiser.kind, DenoiserKind.BOX)
        self.assertEqual(config.denoiser.size, 3)
        self.assertEqual(config.solver_config.max_denoiser_evals, 40)
        self.assertEqual(config.solver_config.inner_solver, InnerSolver.CG)
        self.assertEqual(
            config.solver_config.sr1_negative_curvature,
            NegativeCurvature.FALLBACK,
        )

    def test_environment(self):
        config = run_config_from_settings(
            Settings(
                parse("--denoiser", "external"),
                environ={
                    "RED_BUDGET": "25",
                    "RED_DENOISER_COMMAND": "my-denoiser --fast",
                    "RETRY_ATTEMPTS": "5",
                },
            )
        )

        self.assertEqual(config.solver_config.max_denoiser_evals, 25)
        self.assertEqual(config.denoiser.command, "my-denoiser --fast")
        self.assertEqual(config.denoiser.retry_attempts, 5)

    def test_config_file(self):
        with temp_directory() as temp_dir:
            path = temp_dir / "config.json"
            path.write_text(
                json.dumps(
                    {
                        "task": "deblur-gaussian",
                        "budget": 30,
                        "solver": "fp",
                        "verbose": 2,
                    }
                )
            )
            args = parse("--config", str(path), "--budget", "15")
            settings = Settings(args, file_config(args), environ={})

            config = run_config_from_settings(settings)

        self.assertEqual(config.task.kind, TaskKind.DEBLUR_GAUSSIAN)
        self.assertEqual(config.solver, SolverKind.FP)
        self.assertEqual(config.solver_config.max_denoiser_evals, 15)
        self.assertEqual(verbosity(settings), 2)

    def test_no_config_file(self):
        self.assertEqual(file_config(parse()), {})


class LoadCleanImageTestCase(unittest.TestCase):
    def test_bundled_image(self):
        settings = Settings(parse("--image", "moon", "--size", "24"))
        config = run_config_from_settings(settings)

        image = load_clean_image(settings, config)

        self.assertEqual(image.shape, (24, 24))

    def test_default_super_resolution_size(self):
        settings = Settings(parse("--task", "super-resolution"), environ={})
        config = run_config_from_settings(settings)

        self.assertEqual(load_clean_image(settings, config).shape, (48, 48))

    def test_input(self):
        with temp_directory() as temp_dir:
            path = temp_dir / "clean.pgm"
            save_pgm(path, standard_image("camera", 12))
            settings = Settings(parse("--input", str(path)), environ={})
            config = run_config_from_settings(settings)

            image = load_clean_image(settings, config)

        self.assertEqual(image.shape, (12, 12))

    def test_missing_input(self):
        settings = Settings(parse("--input", "missing.pgm"), environ={})
        config = run_config_from_settings(settings)

        with self.assertRaisesRegex(CLIError, "does not exist"):
            load_clean_image(settings, config)
