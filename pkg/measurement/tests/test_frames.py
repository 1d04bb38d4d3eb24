import numpy as np
from django.test import SimpleTestCase

from measurement.density import outcome_density
from measurement.frames import CanonicalFrame
from measurement.moments import empirical_moments, predicted_moments
from measurement.types import Preparation
from network.gamma import reduce_gamma
from states.types import StatePrep


class CanonicalFrameTestCase(SimpleTestCase):
    def setUp(self):
        """Set up coherent inputs on modes 1 and 2."""
        self.alpha = 0.7 + 0.2j
        self.beta = -0.3 + 0.5j
        self.prep = Preparation(StatePrep.coherent(self.alpha), StatePrep.coherent(self.beta), StatePrep.vacuum())

    def expected_mean(self, gamma):
        return self.alpha + gamma * np.conj(self.beta)

    def test_phase_is_absorbed(self):
        """Test that complex gamma keeps the mean alpha + gamma beta*."""
        for gamma in (1j, 0.5 * np.exp(2.0j), -0.8):
            frame = CanonicalFrame(reduce_gamma(gamma))
            report = frame.report_to_raw(predicted_moments(frame.preparation(self.prep), frame.gamma))
            self.assertAlmostEqual(abs(report.predicted.mean - self.expected_mean(gamma)), 0.0, places=13)

    def test_swapped_moments(self):
        """Test that |gamma| > 1 maps back to alpha + gamma beta*."""
        for gamma in (2.0, 3.0 * np.exp(-0.4j)):
            frame = CanonicalFrame(reduce_gamma(gamma))
            self.assertTrue(frame.swapped)
            report = frame.report_to_raw(predicted_moments(frame.preparation(self.prep), frame.gamma))
            self.assertAlmostEqual(abs(report.predicted.mean - self.expected_mean(gamma)), 0.0, places=13)
            # var Q1 = (var q1 + |gamma|^2 var q2)/2 for coherent inputs
            self.assertAlmostEqual(report.predicted.var_q1, 0.25 * (1 + abs(gamma) ** 2), places=13)

    def test_swapped_grid(self):
        """Test that the raw grid integrates to the raw mean."""
        gamma = 2.0
        frame = CanonicalFrame(reduce_gamma(gamma))
        raw_grid = frame.grid_to_raw(outcome_density(frame.preparation(self.prep), frame.gamma))
        measured = empirical_moments(raw_grid).measured
        self.assertAlmostEqual(abs(measured.mean - self.expected_mean(gamma)), 0.0, delta=1e-4)
        self.assertAlmostEqual(raw_grid.mass(), 1.0, delta=1e-6)

    def test_canonical_grid_round_trip(self):
        frame = CanonicalFrame(reduce_gamma(2.0))
        raw_grid = frame.grid_to_raw(outcome_density(frame.preparation(self.prep), frame.gamma))
        spec = frame.grid_spec_to_canonical(raw_grid.spec)
        canonical = outcome_density(frame.preparation(self.prep), frame.gamma)
        np.testing.assert_allclose(spec.bounds, canonical.spec.bounds, atol=1e-14)
