"""
Shared plumbing for the verification management commands.

A command validates its flags through RunConfigForm, runs one verification
family, prints the report rows and a summary line, and records the run.
Exit codes: 0 when every row passes, 2 for a mathematical failure and 1 for
an operational one.
"""
import json
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from django.db import DatabaseError

from ..algebra.io import load_operator
from ..algebra.reports import FAIL, json_lines, render_table, summary_row
from ..exceptions import MathematicalError, OperationalError, OperatorFileError
from ..forms import RunConfigForm
from ..models import VerificationRun

logger = logging.getLogger(__name__)

FORM_KEYS = (
    'op', 'S', 'R', 'T', 'paths', 'q', 'max_degree', 'format', 'seed',
    'family', 'kind', 'sigma', 'degree', 'version', 'probe', 'dS', 'dR', 'k',
)


class VerificationCommand(BaseCommand):
    """
    Base class for hecke_* commands.

    Subclasses set ``command_name`` and ``required_operators`` and implement
    ``run(config)``, which returns a CheckResult.
    """

    command_name = 'hecke'
    required_operators = ()

    def create_parser(self, prog_name, subcommand, **kwargs):
        # hecke_mu takes its own --version
        kwargs.setdefault('conflict_handler', 'resolve')
        return super().create_parser(prog_name, subcommand, **kwargs)

    def add_arguments(self, parser):
        for name in ('op', 'S', 'R', 'T'):
            parser.add_argument(f'--{name}', dest=name, help=f'Operator file for {name}.')
        parser.add_argument('--q', dest='q', help='Rational Hecke eigenvalue, or "sym" for the symbolic backend.')
        parser.add_argument('--max-degree', dest='max_degree', type=int)
        parser.add_argument('--format', dest='format', choices=['table', 'json'], default='json')
        parser.add_argument('--seed', dest='seed', type=int)
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def run(self, config):
        raise NotImplementedError

    # --- Helpers for subclasses ---

    def operator(self, config, name):
        """Load the operator named by flag ``name``, honoring ``--q``."""
        path = config.get(name)
        if not path:
            raise OperatorFileError(f'The --{name} operator file is required.')
        return load_operator(path, config.get('q'))

    def samples(self):
        return settings.VERIFIER['PROPERTY_SAMPLES']

    # --- Main flow ---

    def handle(self, *args, **options):
        data = {key: options[key] for key in FORM_KEYS if options.get(key) is not None}
        form = RunConfigForm(data, required_operators=self.required_operators)
        if not form.is_valid():
            message = '; '.join(
                f'{field}: {" ".join(errors)}' for field, errors in form.errors.items()
            )
            self._record(data, [], 1)
            raise CommandError(f'Invalid configuration: {message}', returncode=1)

        config = form.cleaned_data
        logger.info('Running %s with %s', self.command_name, form.as_config())
        try:
            result = self.run(config)
        except OperationalError as exc:
            self._record(form.as_config(), [], 1)
            raise CommandError(str(exc), returncode=1)
        except MathematicalError as exc:
            rows = [{'check': self.command_name, 'error': str(exc), 'status': FAIL}]
            self._emit(rows, config['format'])
            self._record(form.as_config(), rows, 2)
            raise CommandError(str(exc), returncode=2)

        self._emit(result.rows, config['format'])
        exit_code = 0 if result.passed else 2
        self._record(form.as_config(), result.rows, exit_code)
        if exit_code:
            raise CommandError(str(result.failure or f'{self.command_name} failed.'), returncode=2)

    def _emit(self, rows, output_format):
        passed = sum(1 for row in rows if row['status'] != FAIL)
        summary = json.dumps(summary_row(passed, len(rows) - passed), sort_keys=True)
        body = json_lines(rows) if output_format == 'json' else render_table(rows)
        if body:
            self.stdout.write(body)
        self.stdout.write(summary)

    def _record(self, config, rows, exit_code):
        if not settings.VERIFIER['RECORD_RUNS']:
            return
        failed = sum(1 for row in rows if row['status'] == FAIL)
        try:
            VerificationRun.objects.create(
                command=self.command_name,
                config=json.loads(json.dumps(config, default=str)),
                passed_count=len(rows) - failed,
                failed_count=failed,
                exit_code=exit_code,
                report=json.loads(json.dumps(rows, default=str)),
            )
        except DatabaseError as exc:
            logger.warning('Could not record the %s run: %s', self.command_name, exc)
