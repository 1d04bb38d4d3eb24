import math

import numpy as np
from django.test import SimpleTestCase
from scipy import special
from scipy.integrate import trapezoid

from states.functions import char_fn, quad_stats, rotate, wigner
from states.laguerre import laguerre_function_series, laguerre_weighted_sum
from states.types import StatePrep, WeightKind, WeightRecipe
from states.weights import make_weights
from utils.exceptions import DomainError
from utils.fourier import invert_characteristic


def catalog():
    return [
        StatePrep.vacuum(),
        StatePrep.coherent(0.7 - 0.4j),
        StatePrep.number(1),
        StatePrep.number(3),
        make_weights(WeightRecipe(kind=WeightKind.THERMAL, z=0.5)),
        make_weights(WeightRecipe(kind=WeightKind.PHASE_DIAGONAL, z=0.3 + 0.4j)),
        make_weights(WeightRecipe(kind=WeightKind.POISSON_DIAGONAL, alpha_sq=1.5)),
        StatePrep.gaussian(0.3, -0.2, 1.2, 0.4, 0.1),
    ]


class LaguerreTestCase(SimpleTestCase):
    def test_vacuum_weights(self):
        """Test that weights (1) give L_0 = 1 everywhere."""
        np.testing.assert_array_equal(laguerre_weighted_sum([1.0], np.array([0.0, 2.0, 7.5])), [1.0, 1.0, 1.0])

    def test_first_polynomial(self):
        """Test that weights (0, 1) at x = 2 give L_1(2) = -1."""
        self.assertAlmostEqual(laguerre_weighted_sum([0.0, 1.0], 2.0), -1.0, places=15)

    def test_uniform_weights_at_origin(self):
        self.assertAlmostEqual(laguerre_weighted_sum([0.25] * 4, 0.0), 1.0, places=15)

    def test_matches_explicit_polynomials(self):
        """Test the recurrence against L_2 and L_3 written out."""
        x = np.linspace(0, 10, 21)
        l2 = (x ** 2 - 4 * x + 2) / 2
        l3 = (-x ** 3 + 9 * x ** 2 - 18 * x + 6) / 6
        np.testing.assert_allclose(laguerre_weighted_sum([0, 0, 0.5, 0.5], x), 0.5 * l2 + 0.5 * l3, atol=1e-12)

    def test_rejects_non_probability(self):
        with self.assertRaises(DomainError):
            laguerre_weighted_sum([0.5, 0.6], 1.0)

    def test_laguerre_functions_match_scipy(self):
        """Test exp(-x/2) L_n(x) against scipy for arguments where L_n grows large."""
        x = np.linspace(0, 200, 81)
        for n in (0, 5, 40):
            coefficients = np.zeros(n + 1)
            coefficients[n] = 1.0
            expected = np.exp(-x / 2) * special.eval_laguerre(n, x)
            np.testing.assert_allclose(laguerre_function_series(coefficients, x), expected, rtol=1e-8, atol=1e-12)

    def test_laguerre_functions_bounded_for_wide_arguments(self):
        """Test that wide thermal sums stay finite and bounded where L_n(x) overflows."""
        weights = make_weights(WeightRecipe(kind=WeightKind.THERMAL, z=0.95)).weights
        x = np.array([0.0, 100.0, 3600.0, 14400.0, 1e5])
        values = laguerre_function_series(weights, x)
        self.assertTrue(np.all(np.isfinite(values)))
        self.assertTrue(np.all(np.abs(values) <= 1 + 1e-12))
        self.assertAlmostEqual(values[0], 1.0, places=12)
        np.testing.assert_allclose(values[2:], 0.0, atol=1e-12)


class CharacteristicFunctionTestCase(SimpleTestCase):
    def setUp(self):
        """Set up a grid of complex arguments."""
        u, v = np.meshgrid(np.linspace(-3, 3, 31), np.linspace(-3, 3, 31))
        self.lam = u + 1j * v

    def test_unit_at_origin(self):
        for prep in catalog():
            self.assertAlmostEqual(abs(char_fn(prep, 0j) - 1.0), 0.0, places=12)

    def test_number_one_zero_at_unit_modulus(self):
        """Test that chi of |1> vanishes at |lambda| = 1."""
        self.assertAlmostEqual(abs(char_fn(StatePrep.number(1), np.exp(0.3j))), 0.0, places=15)

    def test_hermiticity_and_bound(self):
        """Test chi(-lambda) = chi(lambda)* and |chi| <= 1."""
        for prep in catalog():
            values = char_fn(prep, self.lam)
            np.testing.assert_allclose(char_fn(prep, -self.lam), np.conj(values), atol=1e-13)
            self.assertTrue(np.all(np.abs(values) <= 1 + 1e-12))

    def test_thermal_closed_form(self):
        """Test the thermal Laguerre sum against exp(-(2n+1)|lambda|^2/2) over |lambda| <= 5."""
        radii = np.linspace(0, 5, 101)
        angles = np.linspace(0, 2 * np.pi, 13)
        lam = radii[:, None] * np.exp(1j * angles[None, :])
        for z in (0.0, 0.3, 0.5, 0.8):
            prep = make_weights(WeightRecipe(kind=WeightKind.THERMAL, z=z))
            mean_photons = z ** 2 / (1 - z ** 2)
            expected = np.exp(-(2 * mean_photons + 1) * np.abs(lam) ** 2 / 2)
            np.testing.assert_allclose(char_fn(prep, lam), expected, rtol=0, atol=1e-10)

    def test_wide_thermal_stays_finite(self):
        """Test that thermal z = 0.95 keeps |chi| <= 1 out to |lambda| = 60 and matches the closed form."""
        prep = make_weights(WeightRecipe(kind=WeightKind.THERMAL, z=0.95))
        mean_photons = 0.95 ** 2 / (1 - 0.95 ** 2)
        lam = np.linspace(0, 60, 241) * np.exp(0.3j)
        values = char_fn(prep, lam)
        self.assertTrue(np.all(np.isfinite(values)))
        self.assertTrue(np.all(np.abs(values) <= 1 + 1e-12))
        expected = np.exp(-(2 * mean_photons + 1) * np.abs(lam) ** 2 / 2)
        np.testing.assert_allclose(values, expected, rtol=0, atol=1e-10)
        self.assertAlmostEqual(abs(char_fn(prep, 60j)), 0.0, places=12)

    def test_coherent_matches_gaussian_form(self):
        alpha = 0.4 + 1.1j
        coherent = StatePrep.coherent(alpha)
        gaussian = StatePrep.gaussian(math.sqrt(2) * alpha.real, math.sqrt(2) * alpha.imag, 0.5, 0.5)
        np.testing.assert_allclose(char_fn(coherent, self.lam), char_fn(gaussian, self.lam), atol=1e-13)


class QuadratureStatisticsTestCase(SimpleTestCase):
    def test_vacuum(self):
        self.assertEqual(tuple(quad_stats(StatePrep.vacuum())), (0.0, 0.0, 0.5, 0.5, 0.0))

    def test_coherent(self):
        stats = quad_stats(StatePrep.coherent(1.0))
        self.assertAlmostEqual(stats.mean_q, math.sqrt(2), places=15)
        self.assertEqual(stats.mean_p, 0.0)
        self.assertEqual((stats.var_q, stats.var_p), (0.5, 0.5))

    def test_number_one(self):
        stats = quad_stats(StatePrep.number(1))
        self.assertEqual((stats.var_q, stats.var_p), (1.5, 1.5))

    def test_matches_finite_differences(self):
        """Test moments against second derivatives of chi at the origin."""
        h = 2e-4
        for prep in catalog():
            def chi(u, v):
                return char_fn(prep, complex(u, v))

            # chi(u + iv) = E exp(i sqrt2 (v q - u p))
            d_v = (chi(0, h) - chi(0, -h)) / (2 * h)
            d_u = (chi(h, 0) - chi(-h, 0)) / (2 * h)
            d_vv = (chi(0, h) - 2 * chi(0, 0) + chi(0, -h)) / h ** 2
            d_uu = (chi(h, 0) - 2 * chi(0, 0) + chi(-h, 0)) / h ** 2
            d_uv = (chi(h, h) - chi(h, -h) - chi(-h, h) + chi(-h, -h)) / (4 * h ** 2)

            mean_q = (d_v / (1j * math.sqrt(2))).real
            mean_p = (d_u / (-1j * math.sqrt(2))).real
            second_q = (-d_vv / 2).real
            second_p = (-d_uu / 2).real
            symmetric_qp = (d_uv / 2).real

            stats = quad_stats(prep)
            self.assertAlmostEqual(mean_q, stats.mean_q, delta=1e-6)
            self.assertAlmostEqual(mean_p, stats.mean_p, delta=1e-6)
            self.assertAlmostEqual(second_q - mean_q ** 2, stats.var_q, delta=1e-6)
            self.assertAlmostEqual(second_p - mean_p ** 2, stats.var_p, delta=1e-6)
            self.assertAlmostEqual(symmetric_qp - mean_q * mean_p, stats.cov_qp, delta=1e-6)


class WignerTestCase(SimpleTestCase):
    def setUp(self):
        """Set up a 256x256 grid over [-8, 8)^2."""
        self.x = np.linspace(-8, 8, 256, endpoint=False)
        self.y = np.linspace(-8, 8, 256, endpoint=False)
        self.z = self.x[:, None] + 1j * self.y[None, :]

    def test_peak_values(self):
        self.assertAlmostEqual(wigner(StatePrep.vacuum(), 0j), 2 / math.pi, places=15)
        self.assertAlmostEqual(wigner(StatePrep.number(1), 0j), -2 / math.pi, places=15)

    def test_normalisation(self):
        """Test that every catalog Wigner function integrates to one."""
        for prep in catalog():
            values = wigner(prep, self.z)
            mass = trapezoid(trapezoid(values, self.y, axis=1), self.x)
            self.assertAlmostEqual(mass, 1.0, delta=1e-6)

    def test_fourier_consistency(self):
        """Test that inverting chi reproduces W for vacuum, coherent and |1>."""
        for prep in (StatePrep.vacuum(), StatePrep.coherent(0.5 + 0.5j), StatePrep.number(1)):
            inverted, residue = invert_characteristic(lambda lam: char_fn(prep, lam), self.x, self.y)
            np.testing.assert_allclose(inverted, wigner(prep, self.z), atol=1e-6)
            self.assertLess(residue, 1e-9)

    def test_wide_thermal_is_finite(self):
        """Test that the thermal z = 0.95 Wigner function is finite and Gaussian out to |z| = 30."""
        prep = make_weights(WeightRecipe(kind=WeightKind.THERMAL, z=0.95))
        width = 2 * 0.95 ** 2 / (1 - 0.95 ** 2) + 1
        z = np.linspace(0, 30, 121) * np.exp(-1.1j)
        values = wigner(prep, z)
        self.assertTrue(np.all(np.isfinite(values)))
        expected = 2 / (math.pi * width) * np.exp(-2 * np.abs(z) ** 2 / width)
        np.testing.assert_allclose(values, expected, rtol=0, atol=1e-10)
        self.assertAlmostEqual(wigner(prep, 30.0), 0.0, places=12)


class RotationTestCase(SimpleTestCase):
    def test_coherent_rotation(self):
        rotated = rotate(StatePrep.coherent(1.0), math.pi / 2)
        self.assertAlmostEqual(abs(rotated.alpha - 1j), 0.0, places=15)

    def test_gaussian_rotation_preserves_wigner(self):
        """Test that W'(z e^{i angle}) = W(z)."""
        prep = StatePrep.gaussian(0.5, 0.1, 1.5, 0.4, 0.2)
        angle = 0.7
        z = np.array([0.3 + 0.2j, -1.0 + 0.5j, 0.9j])
        np.testing.assert_allclose(wigner(rotate(prep, angle), z * np.exp(1j * angle)), wigner(prep, z), atol=1e-14)

    def test_number_state_unchanged(self):
        prep = StatePrep.number(2)
        self.assertIs(rotate(prep, 1.0), prep)
