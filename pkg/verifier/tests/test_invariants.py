"""
Tests for μ*: M_{TS} → M_{TR}⊗M_{RS} and the kernel-equals-rectangle identity.
"""
from django.test import TestCase

from verifier.algebra import exact
from verifier.algebra.exact import RATIONAL
from verifier.algebra.invariants import (
    PLAIN,
    TWISTED,
    MuStarInstance,
    algebra_map_check,
    block_injectivity_check,
    kernel_vs_rectangle,
    relation_check,
    restricted_kernel,
    theta_matrix,
    twisted_relation_check,
)
from verifier.algebra.operators import make_flip, make_standard, make_superflip
from verifier.exceptions import ParameterMismatch

TWO = RATIONAL(2)


class ScalarMiddleTest(TestCase):
    """T = S = standard(2) with a one-dimensional R of birank (1, 0)."""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        std = make_standard(2, TWO, RATIONAL)
        cls.inst = MuStarInstance(std, make_standard(1, TWO, RATIONAL), std, PLAIN, 2)

    def test_theta_in_degree_one(self):
        theta = theta_matrix(self.inst, 1)
        self.assertEqual(theta.shape, (4, 4))
        self.assertEqual(exact.rank(theta), 4)

    def test_injective_in_degree_one(self):
        self.assertEqual(restricted_kernel(self.inst, 1).dim, 0)

    def test_kernel_is_the_column_block(self):
        result = kernel_vs_rectangle(self.inst, 2)
        self.assertTrue(result.passed)
        row = result.rows[0]
        self.assertEqual(row['birank'], [1, 0])
        self.assertEqual(row['rectangle'], '1,1')
        self.assertEqual(row['kernel_dim'], 1)
        self.assertEqual(row['rank'], 9)
        self.assertIn('R', row['attribution'])
        # cross-check with the rectangle ideal of M_TS
        self.assertEqual(result.rows[1]['lhs'], result.rows[1]['rhs'])

    def test_blocks(self):
        result = block_injectivity_check(self.inst, 2)
        self.assertTrue(result.passed)
        ranks = {row['partition']: row['rank'] for row in result.rows}
        self.assertEqual(ranks, {'2': 9, '1,1': 0})

    def test_relations_are_killed(self):
        self.assertTrue(relation_check(self.inst).passed)

    def test_algebra_map(self):
        self.assertTrue(algebra_map_check(self.inst, samples=3, seed=0).passed)


class StandardTripleTest(TestCase):
    """All three operators standard(2): μ* is injective in degree 2."""

    def test_kernel_vanishes(self):
        std = make_standard(2, TWO, RATIONAL)
        result = kernel_vs_rectangle(MuStarInstance(std, std, std, PLAIN, 2), 2, probe_degree=3)
        self.assertTrue(result.passed)
        self.assertEqual(result.rows[0]['kernel_dim'], 0)
        self.assertEqual(result.rows[0]['rectangle'], '1,1,1')


class TwistedTest(TestCase):
    """The twisted insertion."""

    def test_flip_insertion_is_plain(self):
        flip = make_flip(2, RATIONAL)
        inst = MuStarInstance(flip, flip, flip, TWISTED, 2)
        self.assertTrue(exact.matrices_equal(inst.mid(2), exact.identity(4, RATIONAL)))
        result = twisted_relation_check(inst)
        self.assertTrue(result.passed)
        self.assertTrue(result.rows[1]['hat_equals_r'])

    def test_plain_insertion_is_identity(self):
        std = make_standard(2, TWO, RATIONAL)
        inst = MuStarInstance(std, std, std, PLAIN, 2)
        self.assertTrue(exact.matrices_equal(inst.mid(2), exact.identity(4, RATIONAL)))



class TwistedTripleTest(TestCase):
    """Twisted runs with standard, scalar and superflip operators."""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.std = make_standard(2, TWO, RATIONAL)
        cls.scalar = make_standard(1, TWO, RATIONAL)

    def test_scalar_middle(self):
        inst = MuStarInstance(self.std, self.scalar, self.std, TWISTED, 2)
        result = kernel_vs_rectangle(inst, 2)
        self.assertTrue(result.passed)
        self.assertEqual(result.rows[0]['kernel_dim'], 1)
        self.assertEqual(result.rows[0]['predicted_kernel_dim'], 1)
        self.assertTrue(relation_check(inst).passed)
        self.assertTrue(algebra_map_check(inst, samples=2, seed=0).passed)

    def test_standard_middle_uses_hat(self):
        inst = MuStarInstance(self.std, self.std, self.std, TWISTED, 2)
        self.assertFalse(exact.matrices_equal(inst.middle.matrix, self.std.matrix))
        result = kernel_vs_rectangle(inst, 2, probe_degree=3)
        self.assertTrue(result.passed)
        self.assertEqual(result.rows[0]['kernel_dim'], 0)
        relations = twisted_relation_check(inst)
        self.assertTrue(relations.passed)
        self.assertFalse(relations.rows[1]['hat_equals_r'])
        self.assertTrue(algebra_map_check(inst, samples=2, seed=0).passed)

    def test_superflip(self):
        superflip = make_superflip(1, 1, RATIONAL)
        inst = MuStarInstance(superflip, superflip, superflip, TWISTED, 2)
        relations = twisted_relation_check(inst)
        self.assertTrue(relations.passed)
        self.assertTrue(relations.rows[1]['hat_equals_r'])
        self.assertTrue(kernel_vs_rectangle(inst, 2, probe_degree=3).passed)
        self.assertTrue(algebra_map_check(inst, samples=2, seed=0).passed)

class InstanceValidationTest(TestCase):
    """Bad triples are rejected up front."""

    def test_parameters_must_agree(self):
        std = make_standard(2, TWO, RATIONAL)
        with self.assertRaises(ParameterMismatch):
            MuStarInstance(std, make_flip(2, RATIONAL), std)

    def test_unknown_version(self):
        std = make_standard(2, TWO, RATIONAL)
        with self.assertRaises(ValueError):
            MuStarInstance(std, std, std, 'sideways')
