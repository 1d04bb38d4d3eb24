"""
Django management command for the Caves heterodyne application.
"""

from cli.management.base import RunOutcome, ZGammaCommand
from heterodyne.budget import noise_budget
from heterodyne.phase import feasible_phase
from utils.serialization import write_csv, write_json


class Command(ZGammaCommand):
    help = 'Report gamma_C, the Caves vs standard noise budget and the feasible-phase distribution'

    config_options = {
        'omega1': 'omega1', 'omegaI': 'omega_i', 'rho1': 'rho1', 'rho2': 'rho2', 'sigma': 'sigma',
        'grid': 'grid', 'bins': 'bins', 'out': 'out',
    }

    def add_run_arguments(self, parser):
        parser.add_argument('--omega1', type=str, help='Signal frequency omega_1')
        parser.add_argument('--omegaI', type=str, help='Intermediate frequency omega_I (default 0)')
        parser.add_argument('--rho1', type=str, help='Signal preparation')
        parser.add_argument('--rho2', type=str, help='Image-band preparation (default vacuum)')
        parser.add_argument('--sigma', type=str, help='Naimark ancilla preparation (default vacuum)')
        parser.add_argument('--grid', type=str, help="'auto' or xmin,xmax,ymin,ymax[,nx,ny] for the phase")
        parser.add_argument('--bins', type=str, help='Number of phase bins (default ZGAMMA_PHASE_BINS)')
        parser.add_argument('--out', type=str, help='Output directory for heterodyne.json and phase.csv')

    def run(self, config, options):
        spec = config.require_heterodyne()
        prep = config.preparation
        budget = noise_budget(spec, prep)

        self.stdout.write(f"gamma_C = {budget.gamma_c!r}")
        self.stdout.write(f"[y_C, y_C^dagger] = {budget.commutator!r}, y_C = {budget.scale!r} Z")
        for name, branch in (('Caves', budget.caves), ('standard', budget.standard)):
            self.stdout.write(
                f"{name:>8} (gamma={branch.gamma:.12g}): added noise {branch.added_q:.12g} (Q1), "
                f"{branch.added_p:.12g} (P2)"
            )
        self.stdout.write(f"Ancilla noise over standard: {budget.added_excess_q:.12g} (Q1), "
                          f"{budget.added_excess_p:.12g} (P2)")
        style = self.style.SUCCESS if budget.identical else self.style.WARNING
        self.stdout.write(style(budget.verdict))

        phase = feasible_phase(prep, budget.gamma_c, config.grid, config.bins)
        self.stdout.write(
            f"Feasible phase: circular mean {phase.circular_mean:.6f}, "
            f"circular variance {phase.circular_variance:.6f}"
        )

        out = config.output_dir
        write_csv(out / 'phase.csv', ('theta', 'prob'), phase.rows())
        write_json(out / 'heterodyne.json', {
            'config': config.to_dict(),
            'budget': budget.to_dict(),
            'phase': phase.to_dict(),
        })
        self.stdout.write(self.style.SUCCESS(f"Wrote phase.csv and heterodyne.json to {out}"))

        return RunOutcome(summary={
            'gamma_c': budget.gamma_c,
            'verdict': budget.verdict,
            'excess_vs_standard': [budget.gap_q, budget.gap_p],
            'circular_mean': phase.circular_mean,
        })
