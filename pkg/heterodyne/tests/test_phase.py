import cmath
import math

import numpy as np
from django.test import SimpleTestCase

from heterodyne.phase import bin_centres, feasible_phase
from measurement.types import GridSpec, Preparation
from states.types import StatePrep
from utils.exceptions import CoverageError, DomainError

VACUUM = StatePrep.vacuum()


class BinCentresTestCase(SimpleTestCase):
    def test_bins_cover_circle(self):
        """Test that bin centres are evenly spaced inside (-pi, pi)."""
        theta = bin_centres(360)
        self.assertAlmostEqual(theta[0], -math.pi + math.pi / 360)
        self.assertAlmostEqual(theta[-1], math.pi - math.pi / 360)
        np.testing.assert_allclose(np.diff(theta), 2 * math.pi / 360)


class FeasiblePhaseTestCase(SimpleTestCase):
    def test_vacuum_is_uniform(self):
        """Test that three vacua give a uniform phase distribution within 1e-6."""
        report = feasible_phase(Preparation.all_vacuum(), 0.6)
        self.assertEqual(report.n_bins, 360)
        self.assertAlmostEqual(float(report.probability.sum()), 1.0, places=12)
        np.testing.assert_allclose(report.probability, 1.0 / 360, atol=1e-6)

    def test_coherent_circular_mean(self):
        """Test that a coherent rho1 of modulus 3 gives the circular mean of its phase."""
        for phi in (0.4, -2.0, 2.9):
            prep = Preparation(StatePrep.coherent(cmath.rect(3.0, phi)), VACUUM, VACUUM)
            report = feasible_phase(prep, 0.7)
            self.assertAlmostEqual(report.circular_mean, phi, delta=1e-3)

    def test_narrows_with_amplitude(self):
        """Test that the circular variance decreases for |alpha| in 1, 2, 4."""
        variances = [
            feasible_phase(Preparation(StatePrep.coherent(modulus * cmath.exp(0.3j)), VACUUM, VACUUM), 0.5)
            .circular_variance
            for modulus in (1.0, 2.0, 4.0)
        ]
        self.assertGreater(variances[0], variances[1])
        self.assertGreater(variances[1], variances[2])

    def test_number_state_is_uniform(self):
        """Test that a rotationally symmetric preparation gives a flat distribution."""
        prep = Preparation(StatePrep.number(2), StatePrep.number(1), VACUUM)
        report = feasible_phase(prep, 0.8, n_bins=90)
        np.testing.assert_allclose(report.probability, 1.0 / 90, atol=1e-5)

    def test_narrow_grid_propagates_coverage_error(self):
        """Test that a grid too small for the density raises CoverageError."""
        with self.assertRaises(CoverageError):
            feasible_phase(Preparation.all_vacuum(), 0.6, GridSpec(-0.5, 0.5, -0.5, 0.5, nx=64, ny=64))

    def test_bin_count_validated(self):
        """Test that fewer than two bins are rejected."""
        with self.assertRaises(DomainError):
            feasible_phase(Preparation.all_vacuum(), 0.6, n_bins=1)
