"""
Tests for the hecke_* management commands: output, exit codes and recorded runs.
"""
import json
import tempfile
from io import StringIO
from pathlib import Path

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import TestCase, override_settings

from verifier.models import VerificationRun

FAST = {**settings.VERIFIER, 'PROPERTY_SAMPLES': 2}


def run(command, *args, **options):
    out = StringIO()
    call_command(command, *args, stdout=out, **options)
    return out.getvalue()


def rows_of(output):
    """Report rows and the summary from JSON-lines output."""
    documents = [json.loads(line) for line in output.splitlines() if line.strip()]
    return documents[:-1], documents[-1]['summary']


@override_settings(VERIFIER=FAST)
class HeckeCheckCommandTest(TestCase):
    """Tests for hecke_check."""

    def test_bundled_operators_pass(self):
        rows, summary = rows_of(run('hecke_check', 'std2', 'superflip11'))
        self.assertEqual(summary, {'passed': 8, 'failed': 0})
        self.assertEqual(
            [row['identity'] for row in rows[:4]],
            ['yang_baxter', 'hecke', 'prime_hecke', 'closure'],
        )

    def test_run_is_recorded(self):
        run('hecke_check', 'std2')
        recorded = VerificationRun.objects.get()
        self.assertEqual(recorded.command, 'hecke_check')
        self.assertEqual(recorded.exit_code, 0)
        self.assertEqual(recorded.passed_count, 4)

    def test_reparametrized_operator(self):
        _rows, summary = rows_of(run('hecke_check', 'std2', q='9'))
        self.assertEqual(summary['failed'], 0)

    def test_missing_file_is_operational(self):
        with self.assertRaises(CommandError) as ctx:
            run('hecke_check', 'no-such-operator')
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertEqual(VerificationRun.objects.get().exit_code, 1)

    def test_bad_q_is_operational(self):
        with self.assertRaises(CommandError) as ctx:
            run('hecke_check', 'std2', q='abc')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_corrupted_operator_is_mathematical(self):
        source = Path(settings.VERIFIER['OPERATOR_DIR']) / 'std2.json'
        data = json.loads(source.read_text(encoding='utf-8'))
        for entry in data['entries']:
            if entry[:4] == [1, 0, 1, 0]:
                entry[4] = '5'
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'corrupt.json'
            path.write_text(json.dumps(data), encoding='utf-8')
            out = StringIO()
            with self.assertRaises(CommandError) as ctx:
                call_command('hecke_check', str(path), stdout=out)
        self.assertEqual(ctx.exception.returncode, 2)
        _rows, summary = rows_of(out.getvalue())
        self.assertEqual(summary['failed'], 1)
        self.assertEqual(VerificationRun.objects.get().exit_code, 2)

    def test_zero_q_file(self):
        data = {'dim': 1, 'q': '0', 'entries': [[0, 0, 0, 0, '-1']]}
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'zero.json'
            path.write_text(json.dumps(data), encoding='utf-8')
            out = StringIO()
            with self.assertRaises(CommandError) as ctx:
                call_command('hecke_check', str(path), stdout=out)
        self.assertEqual(ctx.exception.returncode, 2)
        rows, summary = rows_of(out.getvalue())
        self.assertEqual(summary, {'passed': 0, 'failed': 1})
        self.assertIn('q is zero', rows[0]['error'])

    def test_table_format(self):
        output = run('hecke_check', 'std2', format='table')
        header = output.splitlines()[0]
        self.assertTrue(header.startswith('check'))
        self.assertTrue(header.rstrip().endswith('status'))


@override_settings(VERIFIER=FAST)
class PoincareCommandTest(TestCase):
    """Tests for hecke_poincare."""

    def test_matrix_bialgebra_series(self):
        rows, summary = rows_of(run('hecke_poincare', family='E', op='std2', max_degree=3))
        self.assertEqual(summary['failed'], 0)
        dims = [row['lhs'] for row in rows if row['check'] == 'poincare_E']
        self.assertEqual(dims, [1, 4, 10, 20])

    def test_output_is_deterministic(self):
        first = run('hecke_poincare', family='S', op='std2', max_degree=3)
        second = run('hecke_poincare', family='S', op='std2', max_degree=3)
        self.assertEqual(first, second)

    def test_two_operator_family_needs_s(self):
        with self.assertRaises(CommandError) as ctx:
            run('hecke_poincare', family='M', R='std2', max_degree=2)
        self.assertEqual(ctx.exception.returncode, 1)

    def test_mismatched_parameters(self):
        with self.assertRaises(CommandError) as ctx:
            run('hecke_poincare', family='M', S='flip2', R='std2', max_degree=2)
        self.assertEqual(ctx.exception.returncode, 2)


@override_settings(VERIFIER=FAST)
class AlgebraCommandTest(TestCase):
    """Tests for hecke_blocks, hecke_realize and hecke_birank."""

    def test_blocks(self):
        _rows, summary = rows_of(run('hecke_blocks', max_degree=3))
        self.assertEqual(summary['failed'], 0)

    def test_realize(self):
        rows, summary = rows_of(run('hecke_realize', kind='E', op='std2', max_degree=2))
        self.assertEqual(summary['failed'], 0)
        self.assertIn('coproduct', {row['check'] for row in rows})

    def test_birank(self):
        rows, summary = rows_of(run('hecke_birank', op='std2', probe=3))
        self.assertEqual(summary['failed'], 0)
        self.assertEqual(rows[-1]['birank'], [2, 0])


@override_settings(VERIFIER=FAST)
class IdealCommandTest(TestCase):
    """Tests for hecke_ideal and hecke_minors."""

    def test_column_ideal(self):
        rows, summary = rows_of(run('hecke_ideal', sigma='1,1', degree=3, S='std2', R='std2'))
        self.assertEqual(summary['failed'], 0)
        component = next(row for row in rows if row['check'] == 'ideal_component')
        self.assertEqual((component['computed'], component['predicted']), (4, 4))

    def test_missing_operator(self):
        with self.assertRaises(CommandError) as ctx:
            run('hecke_ideal', sigma='1,1', R='std2')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_minors(self):
        rows, summary = rows_of(run('hecke_minors'))
        self.assertEqual(summary, {'passed': 1, 'failed': 0})
        self.assertEqual(rows[0]['computed'], rows[0]['predicted'])


@override_settings(VERIFIER=FAST)
class MuCommandTest(TestCase):
    """Tests for hecke_mu."""

    def test_scalar_middle_operator(self):
        rows, summary = rows_of(run('hecke_mu', T='std2', R='scalar', S='std2', degree=2))
        self.assertEqual(summary['failed'], 0)
        kernel = next(row for row in rows if row['check'] == 'mu_kernel' and row['degree'] == 2)
        self.assertEqual(kernel['kernel_dim'], 1)
        self.assertEqual(kernel['rectangle'], '1,1')
