import math

import numpy as np
from django.test import SimpleTestCase

from measurement.density import outcome_density
from measurement.moments import empirical_moments, sample_moments
from measurement.sampling import sample_outcomes
from measurement.types import Preparation
from states.types import StatePrep
from utils.exceptions import DomainError


class SampleOutcomesTestCase(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.vacuum_grid = outcome_density(Preparation.all_vacuum(), 0.6)

    def test_vacuum_variance(self):
        """Test that 10^6 draws reproduce variance 1/2 within the 3 sigma CLT bound."""
        n = 1_000_000
        moments = sample_moments(sample_outcomes(self.vacuum_grid, n, seed=20240611))
        bound = 3 * 0.5 * math.sqrt(2.0 / n)
        self.assertAlmostEqual(moments.var_q1, 0.5, delta=bound)
        self.assertAlmostEqual(moments.var_p2, 0.5, delta=bound)

    def test_deterministic(self):
        first = sample_outcomes(self.vacuum_grid, 1000, seed=7)
        second = sample_outcomes(self.vacuum_grid, 1000, seed=7)
        self.assertEqual(first.tobytes(), second.tobytes())
        self.assertNotEqual(first.tobytes(), sample_outcomes(self.vacuum_grid, 1000, seed=8).tobytes())

    def test_samples_inside_grid(self):
        samples = sample_outcomes(self.vacuum_grid, 10_000, seed=1)
        self.assertTrue(np.all(samples.real >= self.vacuum_grid.x_min))
        self.assertTrue(np.all(samples.real <= self.vacuum_grid.x_max))

    def test_zero_samples_rejected(self):
        with self.assertRaises(DomainError):
            sample_outcomes(self.vacuum_grid, 0, seed=1)

    def test_coherent_sample_means(self):
        """Test that sample means converge to grid means within 3 sigma."""
        grid = outcome_density(Preparation(StatePrep.coherent(1 - 1j), StatePrep.number(1), StatePrep.vacuum()), 0.6)
        grid_moments = empirical_moments(grid).measured
        n = 200_000
        moments = sample_moments(sample_outcomes(grid, n, seed=3))
        self.assertAlmostEqual(moments.mean_q1, grid_moments.mean_q1, delta=3 * math.sqrt(grid_moments.var_q1 / n))
        self.assertAlmostEqual(moments.mean_p2, grid_moments.mean_p2, delta=3 * math.sqrt(grid_moments.var_p2 / n))
