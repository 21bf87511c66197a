"""
Quantum minors span the (1^k) block of M_{SR} for standard operators.
"""
from ...algebra.io import parse_q, square_root
from ...algebra.ideals import minor_span_check
from ..base import VerificationCommand


class Command(VerificationCommand):
    help = 'Compare the span of all k×k quantum minors with M_(1^k).'
    command_name = 'hecke_minors'

    def add_command_arguments(self, parser):
        parser.add_argument('--dS', dest='dS', type=int, default=2)
        parser.add_argument('--dR', dest='dR', type=int, default=2)
        parser.add_argument('--k', dest='k', type=int, default=2)

    def run(self, config):
        field, q = parse_q(config.get('q') or '4')
        p = field.generator if field.symbolic else square_root(field, q)
        return minor_span_check(config['dS'], config['dR'], p, config['k'], field)
