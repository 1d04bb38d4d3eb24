"""
Django management command to decompose the Z-gamma network for one gamma.
"""

import json

from cli.management.base import RunOutcome, ZGammaCommand
from network.gamma import quadrature_commutator, reduce_gamma
from network.mixing import build_mixing_matrix, compose_plan, decompose
from network.types import Stage
from utils.serialization import to_jsonable, write_json


class Command(ZGammaCommand):
    help = 'Reduce gamma and print the mixing matrix, the two-mode rotation plan and its recomposition residual'

    config_options = {'gamma': 'gamma', 'out': 'out'}

    def add_run_arguments(self, parser):
        parser.add_argument(
            '--gamma',
            type=str,
            help='Complex gamma, e.g. 0.6 or 0.3+0.4j',
        )
        parser.add_argument(
            '--out',
            type=str,
            help='Directory for network.json (printed only when omitted)',
        )

    def run(self, config, options):
        param = reduce_gamma(config.require_gamma())
        gamma = param.reduced
        mixing = build_mixing_matrix(gamma)
        plan = decompose(gamma)
        residual = compose_plan(plan).deviation_from(mixing)
        decoupled = mixing.kappa == 0.0

        self.stdout.write(f"gamma = {param.raw} -> canonical {gamma!r} (phase {param.phase!r}, swapped {param.swapped})")
        self.stdout.write("Mixing matrix M:")
        for row in mixing.entries.real:
            self.stdout.write('  ' + '  '.join(f"{value: .12f}" for value in row))
        self.stdout.write(f"Plan ({' . '.join(plan.ordering)}):")
        for label in plan.ordering:
            if label == Stage.PI_ROTATION:
                self.stdout.write(f"  R2: pi rotation of mode {plan.pi_rotation_mode}")
            else:
                self.stdout.write(f"  {label}: theta = {plan.angle(label)!r}")
        self.stdout.write(f"Recomposition residual: {residual:.3e}")
        if decoupled:
            self.stdout.write(self.style.WARNING("gamma = 1: ancilla mode a3 decouples from the network"))

        payload = {
            'gamma': param.to_dict(),
            'mixing': mixing.to_dict(),
            'plan': plan.to_dict(),
            'residual': residual,
            'commutator': quadrature_commutator(gamma),
            'ancilla_decoupled': decoupled,
        }
        if config.out is not None:
            path = write_json(config.out / 'network.json', payload)
            self.stdout.write(self.style.SUCCESS(f"Wrote {path}"))
        self.stdout.write(json.dumps(to_jsonable(payload), indent=2, sort_keys=True))

        return RunOutcome(summary={'gamma': gamma, 'residual': residual, 'ancilla_decoupled': decoupled})
