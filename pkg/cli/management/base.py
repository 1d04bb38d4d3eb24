"""
Shared base for the numerical management commands.

Subclasses implement run(config, options) and return a RunOutcome. Library
errors become CommandError with the exit code of the error class: 2 for
configuration and domain errors, 3 for numerical failures.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict

from django.core.management.base import BaseCommand, CommandError

from cli.config import RunConfig
from utils.exceptions import ZGammaError
from utils.serialization import to_jsonable

logger = logging.getLogger(__name__)

PROJECT_LOGGERS = ('network', 'states', 'measurement', 'fock_oracle', 'heterodyne', 'cli')


@dataclass
class RunOutcome:
    """Result of a command run; a non-zero exit code fails the command after recording."""
    summary: Dict[str, Any] = field(default_factory=dict)
    exit_code: int = 0
    message: str = ''


class ZGammaCommand(BaseCommand):
    """Base command with run-config loading, error mapping and the run ledger."""

    # Option dest -> run-config key
    config_options = {}

    def add_arguments(self, parser):
        self.add_run_arguments(parser)
        parser.add_argument(
            '--config',
            type=str,
            help='Flat key = value run-config file; command-line options override it',
        )
        parser.add_argument(
            '--record',
            action='store_true',
            help='Store the run in the run ledger',
        )

    def add_run_arguments(self, parser):
        """Add the command's own options."""

    def run(self, config: RunConfig, options) -> RunOutcome:
        raise NotImplementedError

    def handle(self, *args, **options):
        self._configure_logging(options.get('verbosity', 1))
        command = self.__module__.rsplit('.', 1)[-1]
        parameters: Dict[str, Any] = {}
        config = None

        try:
            overrides = {key: options.get(dest) for dest, key in self.config_options.items()}
            config = RunConfig.load(options.get('config'), overrides)
            parameters = config.to_dict()
            outcome = self.run(config, options)
        except ZGammaError as exc:
            logger.warning(f"{command} failed: {exc}")
            self._record(options, command, exc.exit_code, parameters, {}, str(exc), config)
            raise CommandError(str(exc), returncode=exc.exit_code)

        self._record(options, command, outcome.exit_code, parameters, outcome.summary, outcome.message, config)
        if outcome.exit_code:
            raise CommandError(outcome.message, returncode=outcome.exit_code)

    def _configure_logging(self, verbosity: int) -> None:
        if verbosity >= 2:
            for name in PROJECT_LOGGERS:
                logging.getLogger(name).setLevel(logging.DEBUG if verbosity >= 3 else logging.INFO)

    def _record(self, options, command, exit_code, parameters, summary, message, config) -> None:
        if not options.get('record'):
            return
        from reports.models import RunRecord

        RunRecord.record(
            command=command,
            exit_code=exit_code,
            parameters=to_jsonable(parameters),
            summary=to_jsonable(summary),
            message=message,
            output_dir=str(config.output_dir) if config is not None else '',
        )
        self.stdout.write(f"Recorded {command} run in the run ledger")
