"""
Tests for the quadratic algebras S, Λ, E, F, M, N and their Poincaré series.
"""
from django.test import TestCase

from verifier.algebra.exact import RATIONAL, SYMBOLIC
from verifier.algebra.operators import make_standard, make_super
from verifier.algebra.quadratic import (
    HilbertSeries,
    dual_hilbert_series,
    eq9_check,
    hilbert_series,
    koszul_numeric_check,
    plethysm_rank_identity,
    predicted_dimension,
    relation_space,
)

TWO = RATIONAL(2)


class HilbertSeriesTest(TestCase):
    """Graded dimensions of the standard quantum algebras."""

    def setUp(self):
        self.op = make_standard(2, TWO, RATIONAL)

    def test_symmetric_algebra(self):
        A = relation_space('S', self.op)
        self.assertEqual(hilbert_series(A, 3).coefficients, (1, 2, 3, 4))

    def test_exterior_algebra(self):
        A = relation_space('L', self.op)
        self.assertEqual(hilbert_series(A, 3).coefficients, (1, 2, 1, 0))

    def test_matrix_bialgebra(self):
        A = relation_space('E', self.op)
        self.assertEqual(hilbert_series(A, 3).coefficients, (1, 4, 10, 20))
        self.assertEqual(dual_hilbert_series(A, 3).coefficients, (1, 4, 6, 4))

    def test_series_rendering(self):
        self.assertEqual(str(HilbertSeries((1, 4, 10))), '1 + 4t + 10t^2')
        with self.assertRaises(ValueError):
            HilbertSeries((2, 1))

    def test_unknown_kind(self):
        with self.assertRaises(ValueError):
            relation_space('Q', self.op, self.op)
        with self.assertRaises(ValueError):
            relation_space('M', self.op)


class KoszulTest(TestCase):
    """P_A(t)·P_{A!}(-t) = 1."""

    def test_matrix_bialgebra(self):
        op = make_standard(2, TWO, RATIONAL)
        result = koszul_numeric_check(relation_space('E', op), N=3)
        self.assertTrue(result.passed)

    def test_symmetric_algebra(self):
        op = make_standard(3, TWO, RATIONAL)
        self.assertTrue(koszul_numeric_check(relation_space('S', op), N=3).passed)

    def test_wrong_dual_series_is_a_defect(self):
        op = make_standard(2, TWO, RATIONAL)
        result = koszul_numeric_check(relation_space('S', op), dual_dims=(1, 2, 0, 0), N=3)
        self.assertFalse(result.passed)
        self.assertEqual(result.failure.n, 2)


class RankSumTest(TestCase):
    """Graded dimensions match the Σ l_λ products."""

    def test_families_in_low_degree(self):
        op = make_standard(2, TWO, RATIONAL)
        for family in ('S', 'L', 'E', 'F'):
            result = plethysm_rank_identity(None, op, family, 3)
            self.assertTrue(result.passed, msg=family)

    def test_two_operator_families(self):
        opR = make_standard(2, TWO, RATIONAL)
        opS = make_super(1, 1, TWO, RATIONAL)
        for family in ('M', 'N'):
            self.assertTrue(plethysm_rank_identity(opS, opR, family, 2).passed, msg=family)

    def test_prediction_values(self):
        op = make_standard(2, TWO, RATIONAL)
        self.assertEqual(predicted_dimension('E', None, op, 2), 10)
        self.assertEqual(predicted_dimension('F', None, op, 2), 6)
        self.assertEqual(predicted_dimension('M', op, op, 3), 20)


class SymmetrizerImageTest(TestCase):
    """Im ρ(X_n) and Im ρ(Y_n) as intersections of placed relations."""

    def test_standard_two(self):
        op = make_standard(2, TWO, RATIONAL)
        for n in (2, 3):
            self.assertTrue(eq9_check(op, n).passed, msg=f'n = {n}')

    def test_standard_three(self):
        self.assertTrue(eq9_check(make_standard(3, TWO, RATIONAL), 2).passed)


class SymbolicTest(TestCase):
    """Poincaré series and symmetrizer images over QQ(q)."""

    def setUp(self):
        self.op = make_standard(2, SYMBOLIC.generator, SYMBOLIC)

    def test_series(self):
        self.assertEqual(hilbert_series(relation_space('S', self.op), 3).coefficients, (1, 2, 3, 4))
        self.assertEqual(hilbert_series(relation_space('L', self.op), 3).coefficients, (1, 2, 1, 0))
        self.assertEqual(hilbert_series(relation_space('E', self.op), 2).coefficients, (1, 4, 10))

    def test_rank_sums(self):
        for family, N in (('S', 3), ('L', 3), ('E', 2), ('F', 2)):
            self.assertTrue(plethysm_rank_identity(None, self.op, family, N).passed, msg=family)

    def test_koszul(self):
        self.assertTrue(koszul_numeric_check(relation_space('S', self.op), N=3).passed)

    def test_symmetrizer_images(self):
        for n in (2, 3):
            self.assertTrue(eq9_check(self.op, n).passed, msg=f'n = {n}')
