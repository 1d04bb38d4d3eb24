import math

import numpy as np
from django.test import SimpleTestCase
from scipy.integrate import trapezoid

from fock_oracle.density import hermite_functions, joint_density_oracle
from fock_oracle.displacement import coherent_amplitudes, displacement_element, fock_density_matrix
from fock_oracle.types import TruncationSpec
from measurement.density import outcome_density
from measurement.moments import empirical_moments
from measurement.types import GridSpec, Preparation
from states.types import StatePrep, WeightKind, WeightRecipe
from states.weights import make_weights
from utils.exceptions import RepresentabilityError

VACUUM = StatePrep.vacuum()
TRUNC = TruncationSpec(n_max=12, buffer=3)
GRID = GridSpec(-4.0, 4.0, -4.0, 4.0, nx=64, ny=64)


def thermal(z):
    return make_weights(WeightRecipe(kind=WeightKind.THERMAL, z=z))


class DisplacementTestCase(SimpleTestCase):
    def test_displaced_vacuum_is_coherent(self):
        """Test that D(beta)|0> has the coherent amplitudes."""
        beta = 0.8 - 0.5j
        column = np.array([displacement_element(m, 0, beta) for m in range(10)])
        np.testing.assert_allclose(column, coherent_amplitudes(beta, 9), atol=1e-14)

    def test_unitary_rows(self):
        """Test that a row of D(beta) has unit norm when summed far enough."""
        beta = np.array(0.6 + 0.2j)
        row = np.array([displacement_element(2, n, beta) for n in range(40)])
        self.assertAlmostEqual(float(np.sum(np.abs(row) ** 2)), 1.0, places=12)

    def test_gaussian_coherent_matches_closed_form(self):
        """Test that a Gaussian with vacuum variances expands to the coherent projector."""
        alpha = 0.7 + 0.4j
        gaussian = StatePrep.gaussian(math.sqrt(2) * alpha.real, math.sqrt(2) * alpha.imag, 0.5, 0.5)
        amplitudes = coherent_amplitudes(alpha, 8)
        np.testing.assert_allclose(fock_density_matrix(gaussian, 8), np.outer(amplitudes, amplitudes.conj()),
                                   atol=1e-8)

    def test_gaussian_thermal_matches_geometric_weights(self):
        """Test that a centred Gaussian with variance n + 1/2 expands to thermal weights."""
        mean = 0.25
        gaussian = StatePrep.gaussian(0.0, 0.0, mean + 0.5, mean + 0.5)
        expected = np.diag([mean ** n / (1 + mean) ** (n + 1) for n in range(9)])
        np.testing.assert_allclose(fock_density_matrix(gaussian, 8), expected, atol=1e-8)


class HermiteFunctionsTestCase(SimpleTestCase):
    def test_orthonormal(self):
        """Test that the Hermite functions are orthonormal on a fine grid."""
        x = np.linspace(-12.0, 12.0, 4001)
        values = hermite_functions(12, x)
        gram = trapezoid(values[:, :, None] * values[:, None, :], x, axis=0)
        np.testing.assert_allclose(gram, np.eye(13), atol=1e-10)

    def test_ground_state(self):
        """Test that psi_0 is pi^(-1/4) exp(-x^2/2)."""
        x = np.array([-1.0, 0.0, 2.0])
        np.testing.assert_allclose(hermite_functions(3, x)[:, 0], math.pi ** -0.25 * np.exp(-x ** 2 / 2))


class JointDensityOracleTestCase(SimpleTestCase):
    def test_all_vacuum(self):
        """Test that three vacua at gamma = 0.6 give exp(-|tau|^2)/pi within 1e-4."""
        grid = joint_density_oracle(Preparation.all_vacuum(), 0.6, GRID, TRUNC)
        tau = GRID.points()
        np.testing.assert_allclose(grid.density, np.exp(-np.abs(tau) ** 2) / np.pi, atol=1e-4)
        self.assertEqual(grid.source, 'fock-oracle')

    def test_vacuum_density_is_isotropic(self):
        """Test that the momentum phase convention leaves the vacuum density symmetric in x and y."""
        grid = joint_density_oracle(Preparation.all_vacuum(), 0.6, GRID, TRUNC)
        np.testing.assert_allclose(grid.density, grid.density.T, atol=1e-12)

    def test_number_one_gives_husimi(self):
        """Test that rho1 = |1><1| with vacuum ancillas gives the Husimi function of |1>."""
        prep = Preparation(StatePrep.number(1), VACUUM, VACUUM)
        grid = joint_density_oracle(prep, 0.6, GRID, TRUNC)
        tau = GRID.points()
        expected = np.abs(tau) ** 2 * np.exp(-np.abs(tau) ** 2) / np.pi
        np.testing.assert_allclose(grid.density, expected, atol=1e-4)

    def test_gamma_independence(self):
        """Test that rho1 = Coherent(1) with vacuum ancillas gives the same density at gamma 0.3 and 0.9."""
        prep = Preparation(StatePrep.coherent(1.0), VACUUM, VACUUM)
        low = joint_density_oracle(prep, 0.3, GRID, TRUNC)
        high = joint_density_oracle(prep, 0.9, GRID, TRUNC)
        np.testing.assert_allclose(low.density, high.density, atol=1e-8)

    def test_agrees_with_fft_density(self):
        """Test that the oracle and FFT densities agree in L1 within 1e-2 on 64x64 grids."""
        preps = [
            Preparation.all_vacuum(),
            Preparation(StatePrep.coherent(0.8 - 0.4j), VACUUM, VACUUM),
            Preparation(StatePrep.number(1), StatePrep.number(1), VACUUM),
            Preparation(thermal(0.3), VACUUM, thermal(0.4)),
            Preparation(StatePrep.coherent(0.5), StatePrep.coherent(0.5j), StatePrep.number(1)),
            Preparation(StatePrep.number(2), thermal(0.3), StatePrep.gaussian(0.0, 0.0, 0.4, 0.9)),
        ]
        for prep in preps:
            for gamma in (0.4, 0.8):
                with self.subTest(prep=str(prep.to_dict()), gamma=gamma):
                    oracle = joint_density_oracle(prep, gamma, trunc=TRUNC)
                    reference = outcome_density(prep, gamma, oracle.spec)
                    self.assertLessEqual(oracle.l1_distance(reference), 1e-2)

    def test_all_vacuum_variance_is_one_half(self):
        """
        Test that the oracle variance of Q1 for three vacua is 1/2.

        The closed form var Q1 = (dq1^2 + gamma^2 dq2^2)/2 + kappa^2 dq3^2/2
        gives 1/2 for vacua, while the literal expression (dq1^2 + 1)/2 would
        give 3/4. The oracle arbitrates in favour of 1/2.
        """
        oracle = joint_density_oracle(Preparation.all_vacuum(), 0.6, trunc=TRUNC)
        measured = empirical_moments(oracle).measured
        self.assertAlmostEqual(measured.var_q1, 0.5, places=3)
        self.assertAlmostEqual(measured.var_p2, 0.5, places=3)
        self.assertGreater(abs(measured.var_q1 - 0.75), 0.2)


class RepresentabilityTestCase(SimpleTestCase):
    def test_single_mode_tail_names_prep(self):
        """Test that a coherent amplitude beyond the cutoff names rho1."""
        prep = Preparation(StatePrep.coherent(5.0), VACUUM, VACUUM)
        with self.assertRaises(RepresentabilityError) as ctx:
            joint_density_oracle(prep, 0.6, GRID, TRUNC)
        self.assertEqual(ctx.exception.prep_name, 'rho1')

    def test_joint_tail_names_product(self):
        """Test that modes fitting individually but not jointly are rejected as a product."""
        prep = Preparation(StatePrep.coherent(1.4), StatePrep.coherent(1.4), VACUUM)
        with self.assertRaises(RepresentabilityError) as ctx:
            joint_density_oracle(prep, 0.6, GRID, TRUNC)
        self.assertEqual(ctx.exception.prep_name, 'product')
