"""
Detect the birank (r, s) from the vanishing pattern of the multiplicities l_λ.
"""
from ...algebra.partitions import partitions_up_to
from ...algebra.projectors import birank, birank_candidates, multiplicity
from ...algebra.reports import CheckResult
from ..base import VerificationCommand


class Command(VerificationCommand):
    help = 'Report l_λ for |λ| ≤ probe and the birank they determine.'
    command_name = 'hecke_birank'
    required_operators = ('op',)

    def add_command_arguments(self, parser):
        parser.add_argument('--probe', dest='probe', type=int)

    def run(self, config):
        op = self.operator(config, 'op')
        probe = config.get('probe') or op.dim + 1
        result = CheckResult('birank')
        for lam in partitions_up_to(probe):
            if lam.weight:
                result.add(operator=op.label, partition=str(lam), multiplicity=multiplicity(op, lam))
        r, s = birank(op, probe)
        result.add(operator=op.label, probe=probe, candidates=[list(c) for c in birank_candidates(op, probe)],
                   birank=[r, s])
        return result
