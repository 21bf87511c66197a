"""
Tests for exact scalars and exact linear algebra.
"""
import random

from django.test import TestCase

from verifier.algebra import exact
from verifier.algebra.exact import RATIONAL, SYMBOLIC, Subspace
from verifier.exceptions import DegenerateParameter, MixedFieldBackends, ScalarParseError


def rational_matrix(rows):
    entries = {i: {j: RATIONAL(v) for j, v in enumerate(row)} for i, row in enumerate(rows)}
    return exact.matrix(entries, (len(rows), len(rows[0])), RATIONAL)


class ScalarFieldTest(TestCase):
    """Parsing, formatting and quantum numbers."""

    def test_rational_parse_and_format(self):
        self.assertEqual(RATIONAL.format(RATIONAL.parse('6/4')), '3/2')
        self.assertEqual(RATIONAL.format(RATIONAL.parse('-5')), '-5')

    def test_rational_rejects_garbage(self):
        with self.assertRaises(ScalarParseError):
            RATIONAL.parse('two')
        with self.assertRaises(ScalarParseError):
            RATIONAL.parse('')

    def test_symbolic_parse_and_format(self):
        x = SYMBOLIC.parse('(q^2 - 1)/(q - 1)')
        self.assertEqual(SYMBOLIC.format(x), '1 + q')
        self.assertEqual(SYMBOLIC.format(SYMBOLIC.parse('1/(2*q)')), '(1/2)/(q)')

    def test_symbolic_rejects_unknown_symbols(self):
        with self.assertRaises(ScalarParseError):
            SYMBOLIC.parse('q + t')

    def test_quantum_numbers(self):
        q = RATIONAL(4)
        self.assertEqual(RATIONAL.quantum_number(3, q), RATIONAL(21))
        self.assertEqual(RATIONAL.quantum_number(0, q), RATIONAL(0))
        self.assertEqual(RATIONAL.quantum_number(-1, q), RATIONAL(-1) / q)
        self.assertEqual(RATIONAL.quantum_factorial(3, q), RATIONAL(5 * 21))

    def test_quantum_number_at_one_is_integer(self):
        self.assertEqual(RATIONAL.quantum_number(5, RATIONAL(1)), RATIONAL(5))

    def test_rational_backend_has_no_generator(self):
        with self.assertRaises(MixedFieldBackends):
            RATIONAL.generator

    def test_degenerate_parameters(self):
        with self.assertRaises(DegenerateParameter) as ctx:
            exact.field_check_parameter(RATIONAL, RATIONAL(-1), 3)
        self.assertEqual(ctx.exception.n, 2)
        with self.assertRaises(DegenerateParameter) as ctx:
            exact.field_check_parameter(RATIONAL, RATIONAL(0), 3)
        self.assertEqual(ctx.exception.n, 0)
        exact.field_check_parameter(RATIONAL, RATIONAL(4), 6)
        exact.field_check_parameter(SYMBOLIC, SYMBOLIC.generator, 6)


class LinearAlgebraTest(TestCase):
    """Rank, kernel, image and minimal polynomials over both backends."""

    def test_rank_and_kernel(self):
        M = rational_matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
        self.assertEqual(exact.rank(M), 2)
        kernel = exact.kernel_basis(M)
        self.assertEqual(kernel.dim, 1)
        for v in kernel.vectors():
            self.assertEqual(exact.apply(M, v), {})

    def test_rank_nullity(self):
        rng = random.Random(7)
        for _ in range(5):
            rows = [[rng.randint(-2, 2) for _ in range(5)] for _ in range(4)]
            M = rational_matrix(rows)
            self.assertEqual(exact.rank(M) + exact.kernel_basis(M).dim, 5)
            self.assertEqual(exact.image_basis(M).dim, exact.rank(M))

    def test_symbolic_rank_one(self):
        q = SYMBOLIC.generator
        M = exact.matrix({0: {0: q, 1: q * q}, 1: {0: SYMBOLIC.one, 1: q}}, (2, 2), SYMBOLIC)
        self.assertEqual(exact.rank(M), 1)

    def test_mixed_backends_rejected(self):
        A = exact.identity(2, RATIONAL)
        B = exact.identity(2, SYMBOLIC)
        with self.assertRaises(MixedFieldBackends):
            exact.matmul(A, B)

    def test_kron_indexing(self):
        A = rational_matrix([[1, 2], [3, 4]])
        B = rational_matrix([[0, 1], [1, 0]])
        K = exact.entries(exact.kron(A, B))
        # entry (i*2 + k, j*2 + l) = A[i][j]·B[k][l]
        self.assertEqual(K[1 * 2 + 0][0 * 2 + 1], RATIONAL(3))
        self.assertEqual(K[0 * 2 + 1][1 * 2 + 0], RATIONAL(2))

    def test_minimal_polynomial_of_projection(self):
        P = rational_matrix([[1, 0], [0, 0]])
        self.assertEqual(exact.minimal_polynomial(P), [RATIONAL(0), RATIONAL(-1), RATIONAL(1)])
        zero = exact.polynomial_at(exact.minimal_polynomial(P), P)
        self.assertTrue(exact.is_zero_matrix(zero))

    def test_minimal_polynomial_of_identity(self):
        coefficients = exact.minimal_polynomial(exact.identity(3, RATIONAL))
        self.assertEqual(coefficients, [RATIONAL(-1), RATIONAL(1)])


class SubspaceTest(TestCase):
    """Spans, sums, intersections and containment."""

    def setUp(self):
        one = RATIONAL.one
        self.xy = Subspace.span([{0: one}, {1: one}], 3, RATIONAL)
        self.yz = Subspace.span([{1: one}, {2: one}], 3, RATIONAL)
        self.diagonal = Subspace.span([{0: one, 1: one}], 3, RATIONAL)

    def test_sum_and_intersection(self):
        self.assertEqual((self.xy + self.yz).dim, 3)
        meet = self.xy.intersection(self.yz)
        self.assertEqual(meet.dim, 1)
        self.assertTrue(meet.contains_vector({1: RATIONAL(5)}))

    def test_dimension_formula(self):
        rng = random.Random(3)
        for _ in range(5):
            vectors = [
                {i: RATIONAL(rng.randint(-1, 1)) for i in range(4)} for _ in range(4)
            ]
            vectors = [{i: x for i, x in v.items() if x} for v in vectors]
            A = Subspace.span(vectors[:2], 4, RATIONAL)
            B = Subspace.span(vectors[2:], 4, RATIONAL)
            total = exact.subspace_sum(A, B)
            meet = exact.subspace_intersection(A, B)
            self.assertEqual(total.dim + meet.dim, A.dim + B.dim)

    def test_containment(self):
        self.assertTrue(self.xy.contains(self.diagonal))
        self.assertFalse(self.yz.contains(self.diagonal))

    def test_equality_is_basis_independent(self):
        one = RATIONAL.one
        other = Subspace.span([{0: one, 1: one}, {0: one, 1: -one}], 3, RATIONAL)
        self.assertEqual(other, self.xy)

    def test_zero_and_full(self):
        self.assertEqual(Subspace.zero(3, RATIONAL).dim, 0)
        self.assertEqual(Subspace.full(3, RATIONAL).intersection(self.yz), self.yz)
