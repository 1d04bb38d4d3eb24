"""
Django management command to run the truncated Fock-space verification suite.
"""

from cli.management.base import RunOutcome, ZGammaCommand
from fock_oracle.suite import run_verification
from fock_oracle.types import TruncationSpec
from network.gamma import reduce_gamma
from utils.exceptions import DomainError
from utils.serialization import write_json


class Command(ZGammaCommand):
    help = 'Check the network unitary, operator identities and the density against a truncated Fock oracle'

    config_options = {
        'gamma': 'gamma', 'nmax': 'nmax', 'buffer': 'buffer', 'out': 'out',
        'rho1': 'rho1', 'rho2': 'rho2', 'sigma': 'sigma',
    }

    def add_run_arguments(self, parser):
        parser.add_argument('--gamma', type=str, help='Real gamma in (0, 1]')
        parser.add_argument('--nmax', type=str, help='Per-mode Fock cutoff (default ZGAMMA_ORACLE_NMAX)')
        parser.add_argument('--buffer', type=str, help='Safe-subspace margin (default ZGAMMA_ORACLE_BUFFER)')
        parser.add_argument('--rho1', type=str, help='Signal preparation for the density comparison')
        parser.add_argument('--rho2', type=str, help='Idler preparation for the density comparison')
        parser.add_argument('--sigma', type=str, help='Ancilla preparation for the density comparison')
        parser.add_argument('--out', type=str, help='Output directory for verify.json')

    def run(self, config, options):
        param = reduce_gamma(config.require_gamma())
        if param.swapped or param.phase != 0.0:
            raise DomainError(f"verify needs a real gamma in (0, 1], got {config.gamma}")
        trunc = config.truncation or TruncationSpec.default()
        if not trunc.margin_ok:
            self.stdout.write(self.style.WARNING(
                f"n_max={trunc.n_max}, buffer={trunc.buffer} is below the recommended margin "
                "(n_max >= 4*buffer, buffer >= 2)"
            ))

        report = run_verification(param.reduced, trunc, config.preparation)
        for check in report.checks:
            if check.passed is None:
                status = self.style.WARNING('SKIP')
            elif check.passed:
                status = self.style.SUCCESS('PASS')
            else:
                status = self.style.ERROR('FAIL') if check.required else self.style.WARNING('NOTE')
            deviation = f"{check.max_deviation:.3e}" if check.max_deviation is not None else '-'
            line = f"{status} {check.name:<24} deviation {deviation:<10} tolerance {check.tolerance}"
            self.stdout.write(f"{line}  {check.notice}".rstrip())

        path = write_json(config.output_dir / 'verify.json', report.to_dict())
        self.stdout.write(f"Wrote {path}")

        summary = {
            'passed': report.passed,
            'failed': [check.name for check in report.checks if check.failed],
        }
        if report.passed:
            self.stdout.write(self.style.SUCCESS('All required checks passed'))
            return RunOutcome(summary=summary)
        return RunOutcome(
            summary=summary,
            exit_code=3,
            message=f"Verification failed: {', '.join(summary['failed'])}",
        )
