"""
Exact field arithmetic and exact linear algebra.

Scalars live in a sympy domain: ``QQ`` for the rational backend or
``QQ(q)`` for the symbolic backend. Matrices are sympy ``DomainMatrix``
objects kept in sparse (SDM) format, and vectors are plain dicts mapping
an index to a nonzero scalar. Subspaces are stored by their reduced
row-echelon basis, so equality of subspaces is equality of bases.
"""
import logging
from dataclasses import dataclass

import sympy
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from ..exceptions import (
    DegenerateParameter,
    DimensionMismatch,
    MixedFieldBackends,
    NotSquare,
    ScalarParseError,
)

logger = logging.getLogger(__name__)

SYMBOL = sympy.Symbol('q')


@dataclass(frozen=True)
class ScalarField:
    """
    One of the two scalar backends.

    Fields:
        domain: the sympy domain (QQ or QQ(q))
        symbolic: True for the rational-function backend
    """
    domain: object
    symbolic: bool = False

    @property
    def name(self):
        return 'ratfunc' if self.symbolic else 'rat'

    @property
    def one(self):
        return self.domain.one

    @property
    def zero(self):
        return self.domain.zero

    @property
    def generator(self):
        """The transcendental q of the symbolic backend."""
        if not self.symbolic:
            raise MixedFieldBackends('The rational backend has no generator.')
        return self.domain.gens[0]

    def __call__(self, value):
        if isinstance(value, str):
            return self.parse(value)
        return self.domain.convert(value)

    def is_zero(self, x):
        return self.domain.is_zero(x)

    def owns(self, x):
        return self.domain.of_type(x)

    def power(self, x, n):
        if n >= 0:
            return x ** n
        return self.one / (x ** (-n))

    def quantum_number(self, c, q):
        """[c]_q = (q^c - 1)/(q - 1), read as c when q = 1; c may be negative."""
        if c >= 0:
            return sum((self.power(q, i) for i in range(c)), self.zero)
        return -sum((self.power(q, i) for i in range(c, 0)), self.zero)

    def quantum_factorial(self, n, q):
        result = self.one
        for k in range(2, n + 1):
            result = result * self.quantum_number(k, q)
        return result

    # --- Text format ---

    def format(self, x):
        """Canonical string: "a/b" for rationals, "(poly)/(poly)" with monic denominator otherwise."""
        if not self.symbolic:
            return _format_rational(x)
        expr = sympy.cancel(self.domain.to_sympy(x))
        numer, denom = sympy.fraction(expr)
        numer = sympy.Poly(numer, SYMBOL, domain='QQ')
        denom = sympy.Poly(denom, SYMBOL, domain='QQ')
        lead = denom.LC()
        numer = numer.mul_ground(sympy.Rational(1) / lead) if lead != 1 else numer
        denom = denom.monic()
        if denom.degree() == 0:
            return _format_poly(numer)
        return f'({_format_poly(numer)})/({_format_poly(denom)})'

    def parse(self, text):
        text = str(text).strip()
        if not text:
            raise ScalarParseError('Empty scalar string.')
        try:
            if self.symbolic:
                expr = sympy.sympify(text.replace('^', '**'), locals={'q': SYMBOL})
                if expr.free_symbols - {SYMBOL}:
                    raise ScalarParseError(f'Unknown symbols in scalar "{text}".')
                return self.domain.from_sympy(expr)
            return QQ.from_sympy(sympy.Rational(text))
        except ScalarParseError:
            raise
        except (TypeError, ValueError, ZeroDivisionError, sympy.SympifyError) as exc:
            raise ScalarParseError(f'Cannot parse scalar "{text}" for the {self.name} backend: {exc}') from exc


RATIONAL = ScalarField(QQ, False)
SYMBOLIC = ScalarField(QQ.frac_field(SYMBOL), True)


def _format_rational(x):
    numer, denom = int(x.numerator), int(x.denominator)
    return str(numer) if denom == 1 else f'{numer}/{denom}'


def _format_coefficient(c):
    c = sympy.Rational(c)
    return str(c.p) if c.q == 1 else f'{c.p}/{c.q}'


def _format_poly(poly):
    coeffs = list(reversed(poly.all_coeffs()))
    terms = []
    for power, c in enumerate(coeffs):
        if c == 0:
            continue
        c = sympy.Rational(c)
        magnitude = _format_coefficient(abs(c))
        if power == 0:
            body = magnitude
        else:
            monomial = 'q' if power == 1 else f'q^{power}'
            body = monomial if magnitude == '1' else f'{magnitude}*{monomial}'
        if not terms:
            terms.append(f'-{body}' if c < 0 else body)
        else:
            terms.append(f'- {body}' if c < 0 else f'+ {body}')
    return ' '.join(terms) if terms else '0'


def field_check_parameter(field, q, max_degree):
    """
    Check that q is usable as a Hecke parameter up to ``max_degree``.

    Raises:
        DegenerateParameter: for q = 0 (reported as degree 0) or for the
            first n in 2..max_degree with [n]_q = 0.
    """
    if field.is_zero(q):
        raise DegenerateParameter(0)
    for n in range(2, max_degree + 1):
        if field.is_zero(field.quantum_number(n, q)):
            raise DegenerateParameter(n)


# --- Matrices ---

def field_for_matrix(M):
    if M.domain == RATIONAL.domain:
        return RATIONAL
    if M.domain == SYMBOLIC.domain:
        return SYMBOLIC
    raise MixedFieldBackends(f'Unsupported matrix domain {M.domain}.')


def matrix(entries, shape, field):
    """Build a sparse matrix from ``{row: {col: value}}``, dropping zeros."""
    clean = {}
    for i, row in entries.items():
        kept = {j: v for j, v in row.items() if not field.is_zero(v)}
        if kept:
            clean[i] = kept
    return DomainMatrix(clean, shape, field.domain)


def identity(n, field):
    return DomainMatrix({i: {i: field.one} for i in range(n)}, (n, n), field.domain)


def zeros(rows, cols, field):
    return DomainMatrix({}, (rows, cols), field.domain)


def entries(M):
    """Nonzero entries of M as ``{row: {col: value}}``."""
    rep = M.to_sparse().rep
    return {i: row for i, row in rep.items() if row}


def _same_domain(A, B):
    if A.domain != B.domain:
        raise MixedFieldBackends(f'Cannot combine matrices over {A.domain} and {B.domain}.')


def matmul(A, B):
    _same_domain(A, B)
    if A.shape[1] != B.shape[0]:
        raise DimensionMismatch(f'Cannot multiply {A.shape} by {B.shape}.')
    return A.to_sparse().matmul(B.to_sparse())


def add(A, B):
    _same_domain(A, B)
    if A.shape != B.shape:
        raise DimensionMismatch(f'Cannot add {A.shape} and {B.shape}.')
    return A.to_sparse() + B.to_sparse()


def sub(A, B):
    _same_domain(A, B)
    if A.shape != B.shape:
        raise DimensionMismatch(f'Cannot subtract {B.shape} from {A.shape}.')
    return A.to_sparse() - B.to_sparse()


def scale(A, c):
    field = field_for_matrix(A)
    if field.is_zero(c):
        return zeros(*A.shape, field)
    return DomainMatrix(
        {i: {j: v * c for j, v in row.items()} for i, row in entries(A).items()},
        A.shape, A.domain,
    )


def transpose(A):
    return A.to_sparse().transpose()


def kron(A, B):
    """Kronecker product; entry (i*rb + k, j*cb + l) = A[i][j]·B[k][l]."""
    _same_domain(A, B)
    ra, ca = A.shape
    rb, cb = B.shape
    a_rows, b_rows = entries(A), entries(B)
    result = {}
    for i, a_row in a_rows.items():
        for k, b_row in b_rows.items():
            out = result.setdefault(i * rb + k, {})
            for j, a in a_row.items():
                base = j * cb
                for l, b in b_row.items():
                    out[base + l] = a * b
    return DomainMatrix(result, (ra * rb, ca * cb), A.domain)


def inverse(A):
    if A.shape[0] != A.shape[1]:
        raise NotSquare(f'Matrix of shape {A.shape} has no inverse.')
    return A.to_dense().inv().to_sparse()


def is_zero_matrix(A):
    field = field_for_matrix(A)
    return all(field.is_zero(v) for row in entries(A).values() for v in row.values())


def matrices_equal(A, B):
    return A.shape == B.shape and is_zero_matrix(sub(A, B))


def is_idempotent(A):
    return matrices_equal(matmul(A, A), A)


def apply(M, v):
    """M·v for a sparse column vector ``v`` given as a dict."""
    field = field_for_matrix(M)
    out = {}
    for i, row in entries(M).items():
        acc = field.zero
        for j, a in row.items():
            x = v.get(j)
            if x is not None:
                acc += a * x
        if not field.is_zero(acc):
            out[i] = acc
    return out


def vector_add(u, v, field, c=None):
    """u + c·v as a new dict."""
    out = dict(u)
    for i, x in v.items():
        y = out.get(i, field.zero) + (x if c is None else c * x)
        if field.is_zero(y):
            out.pop(i, None)
        else:
            out[i] = y
    return out


def vector_scale(v, c, field):
    if field.is_zero(c):
        return {}
    return {i: x * c for i, x in v.items()}


def rows_matrix(vectors, ambient_dim, field):
    return matrix({i: v for i, v in enumerate(vectors)}, (len(vectors), ambient_dim), field)


def rref_rows(M):
    """Nonzero rows of the reduced row-echelon form of M, sorted by pivot column."""
    rows, cols = M.shape
    if rows == 0 or cols == 0 or is_zero_matrix(M):
        return []
    field = field_for_matrix(M)
    reduced, _pivots = M.to_sparse().rref()
    found = []
    for row in entries(reduced).values():
        kept = {j: v for j, v in row.items() if not field.is_zero(v)}
        if kept:
            found.append(kept)
    found.sort(key=min)
    return found


def rank(M):
    return len(rref_rows(M))


def kernel_basis(M):
    """Subspace of column vectors x with M·x = 0."""
    field = field_for_matrix(M)
    cols = M.shape[1]
    reduced = rref_rows(M)
    pivots = {min(row): row for row in reduced}
    basis = []
    for free in range(cols):
        if free in pivots:
            continue
        v = {free: field.one}
        for p, row in pivots.items():
            x = row.get(free)
            if x is not None:
                v[p] = -x
        basis.append(v)
    return Subspace.span(basis, cols, field)


def image_basis(M):
    """Column space of M as a Subspace of the codomain."""
    return Subspace(M.shape[0], field_for_matrix(M), tuple(rref_rows(transpose(M))))


def minimal_polynomial(M):
    """
    Least-degree monic polynomial annihilating M, by Krylov iteration.

    Returns:
        list: coefficients c_0, ..., c_k with c_k = 1.
    """
    n, m = M.shape
    if n != m:
        raise NotSquare(f'Minimal polynomial needs a square matrix, got {M.shape}.')
    field = field_for_matrix(M)
    powers = []
    current = identity(n, field)
    for _degree in range(n + 2):
        flat = {i * n + j: v for i, row in entries(current).items() for j, v in row.items()}
        powers.append(flat)
        stacked = rows_matrix(powers, n * n, field)
        if rank(stacked) < len(powers):
            relation = kernel_basis(transpose(stacked)).vectors()[0]
            lead = relation[len(powers) - 1]
            return [relation.get(i, field.zero) / lead for i in range(len(powers))]
        current = matmul(current, M)
    raise NotSquare('Krylov iteration did not terminate.')


def polynomial_at(coefficients, M):
    """Evaluate the polynomial with low-to-high ``coefficients`` at M (Horner)."""
    field = field_for_matrix(M)
    n = M.shape[0]
    result = zeros(n, n, field)
    for c in reversed(coefficients):
        result = add(matmul(result, M), scale(identity(n, field), c))
    return result


class Subspace:
    """
    A subspace of field^ambient_dim held as its rref basis.

    The basis rows are dicts with pivot entry 1, ordered by pivot column.
    """

    __slots__ = ('ambient_dim', 'field', 'rows')

    def __init__(self, ambient_dim, field, rows):
        self.ambient_dim = ambient_dim
        self.field = field
        self.rows = tuple(rows)

    @classmethod
    def span(cls, vectors, ambient_dim, field):
        vectors = [v for v in vectors if v]
        if not vectors:
            return cls(ambient_dim, field, ())
        return cls(ambient_dim, field, rref_rows(rows_matrix(vectors, ambient_dim, field)))

    @classmethod
    def zero(cls, ambient_dim, field):
        return cls(ambient_dim, field, ())

    @classmethod
    def full(cls, ambient_dim, field):
        return cls(ambient_dim, field, tuple({i: field.one} for i in range(ambient_dim)))

    @property
    def dim(self):
        return len(self.rows)

    def vectors(self):
        return [dict(row) for row in self.rows]

    def basis_matrix(self):
        return rows_matrix(list(self.rows), self.ambient_dim, self.field)

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(
                f'Subspaces live in dimensions {self.ambient_dim} and {other.ambient_dim}.'
            )
        if self.field != other.field:
            raise MixedFieldBackends('Subspaces use different scalar backends.')

    def __add__(self, other):
        self._check(other)
        if not other.rows:
            return self
        if not self.rows:
            return other
        return Subspace.span(list(self.rows) + list(other.rows), self.ambient_dim, self.field)

    def intersection(self, other):
        """Zassenhaus intersection: reduce [[A, A], [B, 0]] and keep rows with zero left half."""
        self._check(other)
        if not self.rows or not other.rows:
            return Subspace.zero(self.ambient_dim, self.field)
        n = self.ambient_dim
        stacked = [
            {**row, **{n + j: v for j, v in row.items()}} for row in self.rows
        ] + [dict(row) for row in other.rows]
        reduced = rref_rows(rows_matrix(stacked, 2 * n, self.field))
        kept = [
            {j - n: v for j, v in row.items()}
            for row in reduced if min(row) >= n
        ]
        return Subspace.span(kept, n, self.field)

    def contains_vector(self, v):
        if not v:
            return True
        return Subspace.span(list(self.rows) + [v], self.ambient_dim, self.field).dim == self.dim

    def contains(self, other):
        self._check(other)
        return (self + other).dim == self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.dim))

    def __repr__(self):
        return f'Subspace(dim={self.dim}, ambient={self.ambient_dim}, field={self.field.name})'


def subspace_sum(A, B):
    return A + B


def subspace_intersection(A, B):
    return A.intersection(B)


def sum_of_subspaces(subspaces, ambient_dim, field):
    vectors = [row for s in subspaces for row in s.rows]
    return Subspace.span(vectors, ambient_dim, field)


def intersection_of_subspaces(subspaces):
    subspaces = list(subspaces)
    result = subspaces[0]
    for other in subspaces[1:]:
        result = result.intersection(other)
        if not result.dim:
            break
    return result
