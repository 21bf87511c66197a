"""
Validate operator files: Yang-Baxter, Hecke equation, R′ and closure.
"""
from django.conf import settings

from ...algebra import exact
from ...algebra.io import load_operator
from ...algebra.operators import hecke_equation_holds, yang_baxter_holds
from ...algebra.reports import CheckResult
from ...exceptions import DegenerateParameter, HeckeEquationViolation, NotClosed, YangBaxterViolation
from ..base import VerificationCommand


class Command(VerificationCommand):
    help = 'Check that operator files define Hecke operators (and Hecke symmetries).'
    command_name = 'hecke_check'

    def add_command_arguments(self, parser):
        parser.add_argument('paths', nargs='+', help='Operator files, or names of bundled operators.')

    def run(self, config):
        result = CheckResult('operator')
        for path in config['paths']:
            op = load_operator(path, config.get('q'), settings.VERIFIER['OPERATOR_DIR'], validate=False)
            name = op.label
            try:
                exact.field_check_parameter(op.field, op.q, 2)
            except DegenerateParameter as exc:
                result.fail(exc, operator=name, identity='parameter')
                continue
            ybe = yang_baxter_holds(op)
            if not ybe:
                result.fail(YangBaxterViolation(f'{name}: R1R2R1 != R2R1R2.'), operator=name, identity='yang_baxter')
                continue
            result.add(operator=name, identity='yang_baxter')
            if not hecke_equation_holds(op):
                result.fail(HeckeEquationViolation(f'{name}: (R+1)(R-q) != 0.'), operator=name, identity='hecke')
                continue
            result.add(operator=name, identity='hecke')
            result.add(hecke_equation_holds(op.prime()), operator=name, identity='prime_hecke')
            closed = exact.rank(op.closure_matrix()) == op.dim ** 2
            if closed:
                result.add(operator=name, identity='closure')
            else:
                result.fail(NotClosed(f'{name}: the closure operator R# is singular.'), operator=name, identity='closure')
        return result
