"""
The second realization of E, F, M or N: kernels, images, blocks and the product.
"""
from ...algebra.bialgebra import (
    associativity_check,
    block_split_check,
    coproduct_check,
    dimension_transfer_check,
    kernel_equality_check,
    phi_image_check,
    realize,
)
from ...algebra.projectors import check_bundle
from ...algebra.reports import CheckResult
from ...exceptions import IdentityViolation
from ..base import VerificationCommand


class Command(VerificationCommand):
    help = 'Check the projector realization of a quadratic algebra degree by degree.'
    command_name = 'hecke_realize'

    def add_command_arguments(self, parser):
        parser.add_argument('--kind', dest='kind', default='E', choices=['E', 'F', 'M', 'N'])

    def run(self, config):
        kind = config['kind'] or 'E'
        N = config['max_degree']
        opS = self.operator(config, 'S') if kind in ('M', 'N') else None
        opR = self.operator(config, 'op' if config.get('op') else 'R')
        A = realize(opS, opR, kind, N)

        result = CheckResult('realize')
        for n in range(1, N + 1):
            bundle = CheckResult('projectors')
            for name, ok in check_bundle(A.bundle(n)):
                if ok:
                    bundle.add(kind=kind, degree=n, identity=name)
                else:
                    bundle.fail(IdentityViolation(n, name, 'holds', what=name), kind=kind, degree=n, identity=name)
            result.extend(bundle)
            for check in (kernel_equality_check, phi_image_check, dimension_transfer_check, block_split_check):
                result.extend(check(A, n))
        if N >= 3:
            result.extend(associativity_check(A, self.samples(), config['seed']))
        if kind == 'E' and N >= 2:
            result.extend(coproduct_check(A.quadratic))
        return result
