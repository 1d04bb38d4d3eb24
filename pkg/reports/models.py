"""
Run ledger: one row per CLI run stored with --record.
"""

from typing import Any, Dict, Optional

from django.db import models
from django.utils import timezone


class RunRecord(models.Model):
    """A single decompose, simulate, verify or heterodyne run."""

    class Status(models.TextChoices):
        SUCCESS = 'success', 'Success'
        ERROR = 'error', 'Error'
        CONFIG_ERROR = 'config_error', 'Configuration error'
        NUMERICAL_FAILURE = 'numerical_failure', 'Numerical failure'

    STATUS_BY_EXIT_CODE = {
        0: Status.SUCCESS,
        2: Status.CONFIG_ERROR,
        3: Status.NUMERICAL_FAILURE,
    }

    command = models.CharField(max_length=50, db_index=True)
    status = models.CharField(max_length=20, choices=Status.choices, default=Status.SUCCESS)
    exit_code = models.PositiveSmallIntegerField(default=0)

    parameters = models.JSONField(default=dict, help_text="Resolved run configuration")
    summary = models.JSONField(default=dict, blank=True, help_text="Headline results of the run")
    message = models.TextField(blank=True)
    output_dir = models.CharField(max_length=500, blank=True)

    created_at = models.DateTimeField(default=timezone.now)

    class Meta:
        db_table = 'run_records'
        ordering = ['-created_at', '-id']
        indexes = [
            models.Index(fields=['command', 'status'], name='run_records_cmd_status_idx'),
        ]

    def __str__(self):
        return f"{self.command} ({self.get_status_display()}) at {self.created_at:%Y-%m-%d %H:%M:%S}"

    @property
    def succeeded(self) -> bool:
        return self.exit_code == 0

    @classmethod
    def record(cls, command: str, exit_code: int, parameters: Dict[str, Any],
               summary: Optional[Dict[str, Any]] = None, message: str = '', output_dir: str = '') -> 'RunRecord':
        """Store a finished run."""
        return cls.objects.create(
            command=command,
            status=cls.STATUS_BY_EXIT_CODE.get(exit_code, cls.Status.ERROR),
            exit_code=exit_code,
            parameters=parameters,
            summary=summary or {},
            message=message,
            output_dir=output_dir,
        )
