"""
The Hecke-algebra suite: relations, bilinear form, symmetrizers and block constants.
"""
from ...algebra.hecke_algebra import algebra_suite
from ...algebra.io import parse_q
from ..base import VerificationCommand


class Command(VerificationCommand):
    help = 'Check H_n for n ≤ max-degree at the given q (default 4).'
    command_name = 'hecke_blocks'

    def run(self, config):
        field, q = parse_q(config.get('q') or '4')
        if field.symbolic:
            q = field.generator
        return algebra_suite(field, q, config['max_degree'])
