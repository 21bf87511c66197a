"""
The map μ*: M_{TS} → M_{TR}⊗M_{RS}, its kernel and its blocks.
"""
from ...algebra.invariants import (
    PLAIN,
    MuStarInstance,
    algebra_map_check,
    block_injectivity_check,
    kernel_vs_rectangle,
    relation_check,
)
from ...algebra.reports import CheckResult
from ..base import VerificationCommand


class Command(VerificationCommand):
    help = 'Compare Ker μ* with the rectangle ideal given by the birank of R.'
    command_name = 'hecke_mu'
    required_operators = ('T', 'R', 'S')

    def add_command_arguments(self, parser):
        parser.add_argument('--degree', dest='degree', type=int)
        parser.add_argument('--version', dest='version', default=PLAIN, choices=['plain', 'twisted'])
        parser.add_argument('--probe', dest='probe', type=int)

    def run(self, config):
        n = config.get('degree') or config['max_degree']
        inst = MuStarInstance(
            self.operator(config, 'T'), self.operator(config, 'R'), self.operator(config, 'S'),
            config['version'] or PLAIN, n,
        )
        result = CheckResult('mu')
        for k in range(1, n + 1):
            result.extend(kernel_vs_rectangle(inst, k, config.get('probe')))
            result.extend(block_injectivity_check(inst, k))
        if n >= 2:
            result.extend(relation_check(inst))
            result.extend(algebra_map_check(inst, self.samples(), config['seed']))
        return result
