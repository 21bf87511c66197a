"""
Models for the verifier app.

Every management command run can be stored with its configuration, its
report rows and the resulting exit code.
"""
from django.db import models


class VerificationRun(models.Model):
    """
    One run of a verification command.

    Fields:
        command: the management command name, e.g. hecke_poincare
        config: JSON of the validated run configuration
        passed_count: number of passing report rows
        failed_count: number of failing report rows
        exit_code: 0 pass, 1 operational failure, 2 mathematical failure
        report: JSON list of the report rows
        created_at: Timestamp of the run
    """
    command = models.CharField(max_length=64)
    config = models.JSONField(default=dict, blank=True)

    passed_count = models.PositiveIntegerField(default=0)
    failed_count = models.PositiveIntegerField(default=0)
    exit_code = models.PositiveSmallIntegerField(default=0)

    report = models.JSONField(default=list, blank=True)

    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ['-created_at']
        verbose_name = 'Verification Run'
        verbose_name_plural = 'Verification Runs'

    def __str__(self):
        return f"Run #{self.pk} {self.command}: {self.status_label} ({self.passed_count}/{self.total_count})"

    @property
    def total_count(self):
        return self.passed_count + self.failed_count

    @property
    def status_label(self):
        """Human-readable label for the exit code."""
        if self.exit_code == 0:
            return 'Passed'
        elif self.exit_code == 2:
            return 'Identity Failed'
        return 'Error'
