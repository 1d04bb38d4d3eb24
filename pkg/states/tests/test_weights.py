import math

import numpy as np
from django.test import SimpleTestCase

from states.parsing import parse_prep
from states.types import PrepKind, StatePrep, WeightKind, WeightRecipe
from states.weights import make_weights
from utils.exceptions import ConfigurationError, DomainError, TruncationError


class MakeWeightsTestCase(SimpleTestCase):
    def test_thermal_zero_is_vacuum(self):
        """Test that Thermal(z = 0) gives vacuum weights."""
        prep = make_weights(WeightRecipe(kind=WeightKind.THERMAL, z=0.0, cutoff=4))
        self.assertEqual(prep.weights, (1.0, 0.0, 0.0, 0.0, 0.0))

    def test_thermal_weights_follow_squared_parameter(self):
        """Test that Thermal(z) has p_n = (1 - z^2) z^(2n) and mean z^2 / (1 - z^2)."""
        z = 0.5
        prep = make_weights(WeightRecipe(kind=WeightKind.THERMAL, z=z))
        for n in range(4):
            self.assertAlmostEqual(prep.weights[n], (1 - z**2) * z**(2 * n), places=10)
        mean = sum(n * p for n, p in enumerate(prep.weights))
        self.assertAlmostEqual(mean, z**2 / (1 - z**2), places=9)

    def test_poisson_first_weight(self):
        """Test that PoissonDiagonal(alpha_sq = 1) has p_0 = 1/e."""
        prep = make_weights(WeightRecipe(kind=WeightKind.POISSON_DIAGONAL, alpha_sq=1.0))
        self.assertAlmostEqual(prep.weights[0], math.exp(-1), places=12)

    def test_phase_diagonal_weights(self):
        """Test that PhaseDiagonal(z = 0.5) gives p_m = 0.75 * 0.25^m."""
        prep = make_weights(WeightRecipe(kind=WeightKind.PHASE_DIAGONAL, z=0.5))
        expected = 0.75 * 0.25 ** np.arange(len(prep.weights))
        np.testing.assert_allclose(prep.weights, expected, rtol=1e-11)
        self.assertLess(0.25 ** len(prep.weights), 1e-12)

    def test_complex_phase_parameter(self):
        prep = make_weights(WeightRecipe(kind=WeightKind.PHASE_DIAGONAL, z=0.3 + 0.4j))
        self.assertAlmostEqual(prep.weights[1] / prep.weights[0], 0.25, places=12)

    def test_automatic_cutoff_is_normalised(self):
        for recipe in (
            WeightRecipe(kind=WeightKind.THERMAL, z=0.9),
            WeightRecipe(kind=WeightKind.POISSON_DIAGONAL, alpha_sq=9.0),
            WeightRecipe(kind=WeightKind.NUMBER, m=5),
        ):
            prep = make_weights(recipe)
            self.assertEqual(prep.kind, PrepKind.NUMBER_DIAGONAL)
            self.assertAlmostEqual(math.fsum(prep.weights), 1.0, places=14)

    def test_cutoff_too_small(self):
        """Test that an explicit cutoff below the tail bound is rejected."""
        with self.assertRaises(TruncationError):
            make_weights(WeightRecipe(kind=WeightKind.THERMAL, z=0.5, cutoff=5))
        with self.assertRaises(TruncationError):
            make_weights(WeightRecipe(kind=WeightKind.NUMBER, m=4, cutoff=2))

    def test_out_of_domain(self):
        """Test that |z| >= 1 and alpha_sq < 0 are domain errors."""
        with self.assertRaises(DomainError):
            make_weights(WeightRecipe(kind=WeightKind.PHASE_DIAGONAL, z=1.0))
        with self.assertRaises(DomainError):
            make_weights(WeightRecipe(kind=WeightKind.THERMAL, z=-0.1))
        with self.assertRaises(DomainError):
            make_weights(WeightRecipe(kind=WeightKind.POISSON_DIAGONAL, alpha_sq=-1.0))

    def test_truncation_error_is_not_domain_violation_of_parameters(self):
        self.assertTrue(issubclass(TruncationError, DomainError))


class StatePrepValidationTestCase(SimpleTestCase):
    def test_weights_must_sum_to_one(self):
        with self.assertRaises(DomainError):
            StatePrep.number_diagonal([0.5, 0.4])

    def test_negative_weights_rejected(self):
        with self.assertRaises(DomainError):
            StatePrep.number_diagonal([1.5, -0.5])

    def test_gaussian_uncertainty_bound(self):
        """Test that det V < 1/4 is rejected and det V = 1/4 accepted."""
        with self.assertRaises(DomainError):
            StatePrep.gaussian(0, 0, 0.4, 0.4)
        StatePrep.gaussian(0, 0, 0.25, 1.0)


class ParsePrepTestCase(SimpleTestCase):
    def test_vacuum(self):
        self.assertEqual(parse_prep('vacuum').kind, PrepKind.VACUUM)

    def test_coherent(self):
        self.assertEqual(parse_prep('coherent:1.5,-0.5').alpha, 1.5 - 0.5j)
        self.assertEqual(parse_prep('coherent:2').alpha, 2 + 0j)

    def test_number(self):
        self.assertEqual(parse_prep('number:2').weights, (0.0, 0.0, 1.0))

    def test_diagonal_recipes(self):
        self.assertEqual(parse_prep('thermal:0.4').label, 'thermal:0.4')
        self.assertEqual(parse_prep('phase:0.3,0.4').kind, PrepKind.NUMBER_DIAGONAL)
        self.assertAlmostEqual(parse_prep('poisson:1').weights[0], math.exp(-1), places=12)

    def test_explicit_weights(self):
        self.assertEqual(parse_prep('weights:0.25,0.75').weights, (0.25, 0.75))

    def test_gaussian(self):
        prep = parse_prep('gaussian:0,0,1,0.5,0.1')
        self.assertEqual(prep.kind, PrepKind.GAUSSIAN)
        self.assertEqual(prep.cov_qp, 0.1)

    def test_malformed(self):
        """Test that malformed strings are configuration errors."""
        for text in ('squeezed:1', 'coherent:a,b', 'number:1.5', 'vacuum:1', 'coherent:1,2,3'):
            with self.assertRaises(ConfigurationError):
                parse_prep(text)

    def test_out_of_domain_value(self):
        with self.assertRaises(DomainError):
            parse_prep('thermal:1.2')
