import tempfile
from pathlib import Path

from django.test import SimpleTestCase, override_settings

from cli.config import RunConfig, parse_gamma, parse_grid, read_config_file
from states.types import PrepKind
from utils.exceptions import ConfigurationError, DomainError


class ParseValuesTestCase(SimpleTestCase):
    def test_gamma_forms(self):
        """Test that real, imaginary and complex gammas parse."""
        self.assertEqual(parse_gamma('0.6'), 0.6 + 0j)
        self.assertEqual(parse_gamma('2j'), 2j)
        self.assertEqual(parse_gamma(' 0.3 + 0.4i '), 0.3 + 0.4j)
        with self.assertRaises(ConfigurationError):
            parse_gamma('half')

    def test_grid_forms(self):
        """Test that 'auto', four bounds and bounds plus sizes parse."""
        self.assertIsNone(parse_grid('auto'))
        grid = parse_grid('-4,4,-3,3')
        self.assertEqual(grid.bounds, (-4.0, 4.0, -3.0, 3.0))
        self.assertEqual((parse_grid('-4,4,-3,3,64,128').nx, parse_grid('-4,4,-3,3,64,128').ny), (64, 128))

    def test_bad_grids(self):
        """Test that malformed grids are configuration errors and bad sizes domain errors."""
        with self.assertRaises(ConfigurationError):
            parse_grid('-4,4,-3')
        with self.assertRaises(ConfigurationError):
            parse_grid('-4,4,a,3')
        with self.assertRaises(DomainError):
            parse_grid('-4,4,-3,3,100,100')


class RunConfigTestCase(SimpleTestCase):
    def setUp(self):
        """Set up a temporary directory for config files."""
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write(self, text):
        path = Path(self.tmp.name) / 'run.cfg'
        path.write_text(text, encoding='utf-8')
        return path

    def test_reads_file_with_comments(self):
        """Test that comments and blank lines are ignored."""
        path = self.write("# coherent run\n\ngamma = 0.6\nrho1 = coherent:1.5,-0.5  # signal\nseed = 7\n")
        self.assertEqual(read_config_file(path), {'gamma': '0.6', 'rho1': 'coherent:1.5,-0.5', 'seed': '7'})

    def test_unknown_key_rejected(self):
        """Test that an unknown key is a configuration error."""
        with self.assertRaises(ConfigurationError):
            read_config_file(self.write("gama = 0.6\n"))

    def test_malformed_line_rejected(self):
        """Test that a line without '=' is a configuration error."""
        with self.assertRaises(ConfigurationError):
            read_config_file(self.write("gamma 0.6\n"))

    def test_missing_file(self):
        """Test that a missing config file is a configuration error."""
        with self.assertRaises(ConfigurationError):
            read_config_file(Path(self.tmp.name) / 'absent.cfg')

    def test_overrides_win(self):
        """Test that command-line values override file values."""
        path = self.write("gamma = 0.6\nrho1 = vacuum\n")
        config = RunConfig.load(path, {'gamma': '0.3', 'rho1': None, 'sigma': 'thermal:0.4'})
        self.assertEqual(config.gamma, 0.3 + 0j)
        self.assertEqual(config.rho1.kind, PrepKind.VACUUM)
        self.assertEqual(config.sigma.kind, PrepKind.NUMBER_DIAGONAL)

    def test_seed_required_with_samples(self):
        """Test that samples > 0 without a seed is a configuration error."""
        with self.assertRaises(ConfigurationError):
            RunConfig.from_values({'gamma': '0.6', 'samples': '10'})
        self.assertEqual(RunConfig.from_values({'samples': '10', 'seed': '3'}).seed, 3)

    def test_truncation_and_heterodyne(self):
        """Test that nmax/buffer and omega keys build their specs."""
        config = RunConfig.from_values({'nmax': '16', 'buffer': '4', 'omega1': '11', 'omega_i': '1'})
        self.assertEqual((config.truncation.n_max, config.truncation.buffer), (16, 4))
        self.assertEqual(config.heterodyne.omega_intermediate, 1.0)
        with self.assertRaises(ConfigurationError):
            RunConfig.from_values({'omega_i': '1'})

    @override_settings(ZGAMMA_OUTPUT_DIR='/tmp/zgamma-default')
    def test_output_dir_default(self):
        """Test that the output directory falls back to ZGAMMA_OUTPUT_DIR."""
        self.assertEqual(RunConfig().output_dir, Path('/tmp/zgamma-default'))
        self.assertEqual(RunConfig(out=Path('x')).output_dir, Path('x'))

    def test_required_values(self):
        """Test that missing gamma or omega1 raise configuration errors."""
        with self.assertRaises(ConfigurationError):
            RunConfig().require_gamma()
        with self.assertRaises(ConfigurationError):
            RunConfig().require_heterodyne()
