"""
The invariant ideal I_σ of M_{SR}, the key lemma and the ideal-product rule.
"""
import logging

from ...algebra.bialgebra import RealizedAlgebra
from ...algebra.ideals import dideal_check, ideal_component_check, ideal_product_check, key_lemma_check
from ...algebra.partitions import Partition
from ...algebra.reports import CheckResult
from ...exceptions import EmptyGenerator, ScalarParseError
from ..base import VerificationCommand

logger = logging.getLogger(__name__)


class Command(VerificationCommand):
    help = 'Compare I_σ with the sum of blocks M_τ, τ ⊇ σ, in one degree.'
    command_name = 'hecke_ideal'
    required_operators = ('S', 'R')

    def add_command_arguments(self, parser):
        parser.add_argument('--sigma', dest='sigma', required=True, help='Partition, e.g. 1,1')
        parser.add_argument('--degree', dest='degree', type=int)

    def run(self, config):
        sigma = config['sigma']
        if not sigma:
            raise ScalarParseError('--sigma must be a nonempty partition.')
        n = config.get('degree') or config['max_degree']
        A = RealizedAlgebra(self.operator(config, 'S'), self.operator(config, 'R'), 'M', n)

        result = CheckResult('ideal')
        result.extend(ideal_component_check(A, sigma, n))
        result.extend(ideal_product_check(A, sigma, n))
        for k in range(1, n - sigma.weight + 1):
            try:
                result.extend(key_lemma_check(A, sigma, Partition((1,) * k)))
            except EmptyGenerator as exc:
                logger.info('Skipping the key lemma for %s and (1^%d): %s', sigma, k, exc)
        if n >= sigma.weight + 1:
            result.extend(dideal_check(A, {sigma}, n))
        return result
