"""
Graded dimensions of S, Λ, E, F, M and N against the rank-sum prediction.
"""
from ...algebra.quadratic import eq9_check, koszul_numeric_check, plethysm_rank_identity, relation_space
from ...algebra.reports import CheckResult
from ..base import VerificationCommand


class Command(VerificationCommand):
    help = 'Compare Poincaré series with Σ l_λ products, and check the Koszul identity.'
    command_name = 'hecke_poincare'

    def add_command_arguments(self, parser):
        parser.add_argument('--family', dest='family', default='E', choices=['S', 'L', 'E', 'F', 'M', 'N'])

    def run(self, config):
        family = config['family'] or 'E'
        N = config['max_degree']
        if family in ('M', 'N'):
            opS, opR = self.operator(config, 'S'), self.operator(config, 'R')
        else:
            opS, opR = None, self.operator(config, 'op' if config.get('op') else 'R')
        result = CheckResult('poincare')
        result.extend(plethysm_rank_identity(opS, opR, family, N))
        result.extend(koszul_numeric_check(relation_space(family, opR, opS), N=N))
        if family in ('S', 'L'):
            for n in range(2, N + 1):
                result.extend(eq9_check(opR, n))
        return result
