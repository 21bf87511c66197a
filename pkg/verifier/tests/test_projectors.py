"""
Tests for the Casimir projectors, multiplicities and birank detection.
"""
from django.test import TestCase

from verifier.algebra import exact
from verifier.algebra.exact import RATIONAL, SYMBOLIC
from verifier.algebra.operators import make_flip, make_standard, make_super, make_superflip
from verifier.algebra.partitions import Partition
from verifier.algebra.projectors import (
    birank,
    birank_candidates,
    build_projectors,
    check_bundle,
    multiplicities,
    multiplicity,
)
from verifier.exceptions import BirankUndetermined, ParameterMismatch

TWO = RATIONAL(2)


class ProjectorBundleTest(TestCase):
    """Block identities of Φ and Ψ."""

    def setUp(self):
        self.op = make_standard(2, TWO, RATIONAL)

    def test_degree_one_is_identity(self):
        bundle = build_projectors(self.op, self.op, 1)
        self.assertTrue(exact.matrices_equal(bundle.psi_bar, exact.identity(4, RATIONAL)))
        self.assertEqual(bundle.component.dim, 4)

    def test_block_identities_in_degree_two(self):
        bundle = build_projectors(self.op, self.op, 2)
        failed = [name for name, ok in check_bundle(bundle) if not ok]
        self.assertEqual(failed, [])

    def test_minimal_polynomial_in_degree_three(self):
        bundle = build_projectors(self.op, self.op, 3)
        self.assertIn(('phi minimal polynomial', True), check_bundle(bundle))
        # only (2,1) survives for d = 2, so the minimal polynomial is x(x - d/k)
        for lam in ((3,), (1, 1, 1)):
            self.assertTrue(exact.is_zero_matrix(bundle.phi_blocks[Partition(lam)]))
        self.assertFalse(exact.is_zero_matrix(bundle.phi_blocks[Partition((2, 1))]))
        self.assertEqual(len(exact.minimal_polynomial(bundle.phi)), 3)

    def test_component_dimension(self):
        bundle = build_projectors(self.op, self.op, 2)
        self.assertEqual(bundle.component.dim, 10)
        self.assertEqual(bundle.psi_images[Partition((2,))].dim, 9)
        self.assertEqual(bundle.psi_images[Partition((1, 1))].dim, 1)

    def test_block_projectors_are_idempotent(self):
        bundle = build_projectors(self.op, self.op, 2)
        for lam in ((2,), (1, 1)):
            self.assertTrue(exact.is_idempotent(bundle.block_projector(lam)))

    def test_bundles_are_shared(self):
        self.assertIs(build_projectors(self.op, self.op, 2), build_projectors(self.op, self.op, 2))

    def test_mixed_operators(self):
        bundle = build_projectors(make_super(1, 1, TWO, RATIONAL), self.op, 2)
        failed = [name for name, ok in check_bundle(bundle) if not ok]
        self.assertEqual(failed, [])

    def test_parameters_must_agree(self):
        with self.assertRaises(ParameterMismatch):
            build_projectors(make_standard(2, RATIONAL(3), RATIONAL), self.op, 2)

    def test_symbolic_component(self):
        op = make_standard(2, SYMBOLIC.generator, SYMBOLIC)
        self.assertEqual(build_projectors(op, op, 2).component.dim, 10)



class SymbolicTest(TestCase):
    """Projector identities over QQ(q)."""

    def setUp(self):
        self.op = make_standard(2, SYMBOLIC.generator, SYMBOLIC)

    def test_block_identities_in_degree_two(self):
        bundle = build_projectors(self.op, self.op, 2)
        failed = [name for name, ok in check_bundle(bundle) if not ok]
        self.assertEqual(failed, [])

    def test_modified_projectors_are_idempotent(self):
        bundle = build_projectors(self.op, self.op, 2)
        self.assertTrue(exact.is_idempotent(bundle.phi_bar))
        self.assertTrue(exact.is_idempotent(bundle.psi_bar))
        self.assertEqual(exact.image_basis(bundle.phi_bar).dim, 6)

class MultiplicityTest(TestCase):
    """l_λ = rank ρ(F_λ)/d_λ."""

    def test_standard_two(self):
        op = make_standard(2, TWO, RATIONAL)
        self.assertEqual(multiplicity(op, (1,)), 2)
        self.assertEqual(multiplicity(op, (2,)), 3)
        self.assertEqual(multiplicity(op, (1, 1)), 1)
        self.assertEqual(multiplicity(op, (2, 1)), 2)
        self.assertEqual(multiplicity(op, (1, 1, 1)), 0)

    def test_standard_three(self):
        op = make_standard(3, TWO, RATIONAL)
        self.assertEqual(multiplicity(op, (1, 1, 1)), 1)
        self.assertEqual(multiplicities(op, 2), {Partition((2,)): 6, Partition((1, 1)): 3})

    def test_flip_at_q_one(self):
        op = make_flip(2, RATIONAL)
        self.assertEqual(multiplicities(op, 2), {Partition((2,)): 3, Partition((1, 1)): 1})


class BirankTest(TestCase):
    """Birank from the vanishing pattern of the multiplicities."""

    def test_standard(self):
        self.assertEqual(birank(make_standard(2, TWO, RATIONAL), 3), (2, 0))

    def test_one_dimensional(self):
        self.assertEqual(birank(make_standard(1, TWO, RATIONAL)), (1, 0))

    def test_superflip_candidates(self):
        op = make_superflip(1, 1, RATIONAL)
        self.assertEqual(birank_candidates(op, 3), [(0, 3), (1, 1), (3, 0)])
        self.assertEqual(birank(op, 3), (1, 1))

    def test_super_with_parameter(self):
        self.assertEqual(birank(make_super(1, 1, TWO, RATIONAL), 3), (1, 1))

    def test_probe_too_small(self):
        # degree 1 cannot tell (0,1) from (1,0)
        with self.assertRaises(BirankUndetermined):
            birank(make_standard(2, TWO, RATIONAL), 1)
