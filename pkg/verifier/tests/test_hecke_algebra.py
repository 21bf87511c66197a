"""
Tests for the Hecke algebra, its bilinear form and its block decomposition.
"""
from django.test import TestCase

from verifier.algebra.exact import RATIONAL, SYMBOLIC
from verifier.algebra.hecke_algebra import (
    algebra_suite,
    bilinear_form,
    block_check,
    block_decomposition,
    casimir,
    casimir_check,
    embed,
    embedding_check,
    form_check,
    murphy_element,
    pair_multiply,
    pi_element,
    primitive_idempotents,
    q_antisymmetrizer,
    q_symmetrizer,
    reduced_word,
    registry,
    relations_check,
    symmetrizer_check,
)
from verifier.algebra.partitions import Partition, content_vector
from verifier.exceptions import DegenerateParameter, RankMismatch

Q = RATIONAL(4)


class HeckeAlgebraTest(TestCase):
    """Relations, the form and the q-symmetrizers."""

    def setUp(self):
        self.algebra = registry.algebra(RATIONAL, Q, 3)

    def test_relations(self):
        self.assertTrue(relations_check(self.algebra).passed)

    def test_quadratic_relation_by_hand(self):
        T0 = self.algebra.generator(0)
        one = self.algebra.one()
        self.assertEqual(T0 * T0, T0.scaled(Q - 1) + one.scaled(Q))

    def test_longest_element_length(self):
        w0 = (2, 1, 0)
        self.assertEqual(self.algebra.lengths[w0], 3)
        self.assertEqual(len(reduced_word(w0)), 3)

    def test_form(self):
        self.assertTrue(form_check(self.algebra).passed)
        w = (1, 2, 0)
        inverse = (2, 0, 1)
        value = bilinear_form(self.algebra.basis(w), self.algebra.basis(inverse))
        self.assertEqual(value, Q ** 2)
        self.assertEqual(bilinear_form(self.algebra.basis(w), self.algebra.basis(w)), RATIONAL(0))

    def test_casimir_is_central(self):
        self.assertEqual(len(casimir(self.algebra)), 6)
        result = casimir_check(self.algebra)
        self.assertTrue(result.passed)
        self.assertEqual([row['generator'] for row in result.rows], ['T0', 'T1'])

    def test_symmetrizers(self):
        self.assertTrue(symmetrizer_check(self.algebra).passed)
        X, Y = q_symmetrizer(self.algebra), q_antisymmetrizer(self.algebra)
        self.assertTrue((X * Y).is_zero())

    def test_elements_of_different_degree_do_not_mix(self):
        other = registry.algebra(RATIONAL, Q, 2)
        with self.assertRaises(RankMismatch):
            self.algebra.one() + other.one()

    def test_embedding(self):
        self.assertTrue(embedding_check(RATIONAL, Q, 1, 2).passed)
        left = registry.algebra(RATIONAL, Q, 1)
        right = registry.algebra(RATIONAL, Q, 2)
        self.assertEqual(embed(left.one(), right.generator(0)), self.algebra.generator(1))


class BlockTest(TestCase):
    """Central idempotents and their constants."""

    def test_block_identities(self):
        for n in (1, 2, 3):
            self.assertTrue(block_check(RATIONAL, Q, n).passed, msg=f'n = {n}')

    def test_z_eigenvalues_in_degree_two(self):
        blocks = {b.partition: b for b in block_decomposition(RATIONAL, Q, 2)}
        self.assertEqual(blocks[Partition((2,))].z_eigenvalue, 1 + Q)
        self.assertEqual(blocks[Partition((1, 1))].z_eigenvalue, 1 + 1 / Q)

    def test_pi_normalization(self):
        algebra = registry.algebra(RATIONAL, Q, 2)
        for block in block_decomposition(RATIONAL, Q, 2):
            pi = pi_element(block)
            expected = {key: c * block.z_eigenvalue for key, c in pi.items()}
            self.assertEqual(pair_multiply(pi, pi, algebra), expected)

    def test_z_eigenvalues_at_q_one(self):
        for block in block_decomposition(RATIONAL, RATIONAL(1), 3):
            self.assertEqual(block.z_eigenvalue, RATIONAL(6))

    def test_block_dimensions(self):
        dims = {b.partition: b.dim for b in block_decomposition(RATIONAL, Q, 3)}
        self.assertEqual(dims, {Partition((3,)): 1, Partition((2, 1)): 2, Partition((1, 1, 1)): 1})

    def test_form_constant(self):
        one = registry.algebra(RATIONAL, Q, 3).one()
        for block in block_decomposition(RATIONAL, Q, 3):
            self.assertEqual(bilinear_form(block.idempotent, one), RATIONAL(block.dim) * block.k)

    def test_murphy_elements_act_by_contents(self):
        algebra = registry.algebra(RATIONAL, Q, 3)
        for tableau, E in primitive_idempotents(algebra).items():
            contents = content_vector(tableau)
            for k in range(3):
                expected = E.scaled(RATIONAL.quantum_number(contents[k], Q))
                self.assertEqual(murphy_element(algebra, k) * E, expected)

    def test_symbolic_blocks(self):
        q = SYMBOLIC.generator
        self.assertTrue(block_check(SYMBOLIC, q, 2).passed)
        blocks = {b.partition: b for b in block_decomposition(SYMBOLIC, q, 2)}
        self.assertEqual(blocks[Partition((2,))].z_eigenvalue, 1 + q)

    def test_degenerate_parameter(self):
        with self.assertRaises(DegenerateParameter):
            block_decomposition(RATIONAL, RATIONAL(-1), 2)

    def test_full_suite(self):
        result = algebra_suite(RATIONAL, Q, 3)
        self.assertTrue(result.passed)
        self.assertEqual(result.counts[1], 0)
        self.assertIn('casimir', {row['check'] for row in result.rows})


class SymbolicTest(TestCase):
    """The structural suite over QQ(q)."""

    def test_suite_in_degree_three(self):
        q = SYMBOLIC.generator
        result = algebra_suite(SYMBOLIC, q, 3)
        self.assertTrue(result.passed)
        self.assertEqual(result.counts[1], 0)

    def test_casimir_in_degree_three(self):
        algebra = registry.algebra(SYMBOLIC, SYMBOLIC.generator, 3)
        self.assertTrue(casimir_check(algebra).passed)
