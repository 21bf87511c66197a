"""
Quadratic algebras T(X)/(relations) given by a relation subspace of X⊗X.

Graded pieces are never built as quotient bases: A_n is measured through
the relation sum Σ_i R(A)ⁿᵢ and the Koszul dual through ⋂_i R(A)ⁿᵢ.
"""
import logging
from dataclasses import dataclass

from . import exact, tensors
from .hecke_algebra import q_antisymmetrizer, q_symmetrizer
from .operators import RHO, same_parameter
from .partitions import conjugate, partitions_of
from .projectors import multiplicities
from .reports import CheckResult
from ..exceptions import IdentityViolation, KoszulDefect

logger = logging.getLogger(__name__)

KINDS = ('S', 'L', 'E', 'F', 'M', 'N')


class QuadraticAlgebra:
    """
    A quadratic algebra with generator space of the given layout.

    Fields:
        layout: factor dimensions of one generator, (d,) for T(V) and
            (dW, dV) for T(W*⊗V)
        relations: Subspace of the degree-2 component
        label: S, L, E, F, M, N or custom
    """

    def __init__(self, layout, relations, label='custom'):
        self.layout = tuple(layout)
        self.relations = relations
        self.label = label
        self._sums = {}
        self._duals = {}
        if relations.ambient_dim != self.generator_dim ** 2:
            raise ValueError(
                f'Relations live in dimension {relations.ambient_dim}, '
                f'expected {self.generator_dim ** 2}.'
            )

    @property
    def generator_dim(self):
        return tensors.degree_dim(self.layout, 1)

    @property
    def field(self):
        return self.relations.field

    def ambient_dim(self, n):
        return tensors.degree_dim(self.layout, n)

    def placed(self, n, i):
        """R(A)ⁿᵢ: the relations on tensor positions i, i+1 of degree n."""
        vectors = []
        for v in self.relations.rows:
            vectors.extend(tensors.place_relation(v, self.layout, n, i))
        return exact.Subspace.span(vectors, self.ambient_dim(n), self.field)

    def __repr__(self):
        return f'QuadraticAlgebra({self.label}, generators={self.generator_dim})'


def relation_space(kind, opR, opS=None):
    """
    The quadratic algebra of the given kind.

    S and L (Λ) use Im(R - q) and Im(R + 1) on V⊗V. E, F, M and N are
    M_{SR} = T(W*⊗V)/(Im(tS⁻¹⊗R - id)) with S = R, R′, S and S′.

    Raises:
        ParameterMismatch: if the operators use different parameters.
    """
    field = opR.field
    if kind in ('S', 'L'):
        I = exact.identity(opR.dim ** 2, field)
        shifted = exact.sub(opR.matrix, exact.scale(I, opR.q)) if kind == 'S' else exact.add(opR.matrix, I)
        return QuadraticAlgebra((opR.dim,), exact.image_basis(shifted), kind)
    left = effective_dual_operator(kind, opR, opS)
    same_parameter(left, opR)
    twisted = exact.kron(exact.transpose(left.inverse_matrix), opR.matrix)
    relations = exact.image_basis(exact.sub(twisted, exact.identity(twisted.shape[0], field)))
    return QuadraticAlgebra((left.dim, opR.dim), relations, kind)


def effective_dual_operator(kind, opR, opS=None):
    """The operator acting on W for E, F, M and N."""
    if kind == 'E':
        return opR
    if kind == 'F':
        return opR.prime()
    if opS is None:
        raise ValueError(f'Kind {kind} needs an S operator.')
    if kind == 'M':
        return opS
    if kind == 'N':
        return opS.prime()
    raise ValueError(f'Unknown algebra kind "{kind}".')


def relation_sum(A, n):
    """Σ_i R(A)ⁿᵢ."""
    if n in A._sums:
        return A._sums[n]
    if n < 2:
        result = exact.Subspace.zero(A.ambient_dim(n), A.field)
    else:
        result = exact.sum_of_subspaces(
            [A.placed(n, i) for i in range(n - 1)], A.ambient_dim(n), A.field
        )
    A._sums[n] = result
    return result


def graded_dimension(A, n):
    return A.ambient_dim(n) - relation_sum(A, n).dim


def dual_component(A, n):
    """⋂_i R(A)ⁿᵢ, the dual of the degree-n part of the Koszul dual; full below degree 2."""
    if n in A._duals:
        return A._duals[n]
    if n < 2:
        result = exact.Subspace.full(A.ambient_dim(n), A.field)
    else:
        result = exact.intersection_of_subspaces(A.placed(n, i) for i in range(n - 1))
    A._duals[n] = result
    return result


def dual_graded_dimension(A, n):
    return dual_component(A, n).dim


@dataclass(frozen=True)
class HilbertSeries:
    """
    Truncated Hilbert series Σ a_n tⁿ.

    Fields:
        coefficients: a_0, ..., a_N
    """
    coefficients: tuple

    def __post_init__(self):
        if self.coefficients and self.coefficients[0] != 1:
            raise ValueError('A Hilbert series of a connected graded algebra starts with 1.')

    @property
    def truncation_degree(self):
        return len(self.coefficients) - 1

    def __getitem__(self, n):
        return self.coefficients[n]

    def __str__(self):
        return ' + '.join(
            str(c) if n == 0 else f'{c}t' if n == 1 else f'{c}t^{n}'
            for n, c in enumerate(self.coefficients)
        )


def hilbert_series(A, N):
    return HilbertSeries(tuple(graded_dimension(A, n) for n in range(N + 1)))


def dual_hilbert_series(A, N):
    return HilbertSeries(tuple(dual_graded_dimension(A, n) for n in range(N + 1)))


def koszul_numeric_check(A, dual_dims=None, N=4):
    """
    P_A(t)·P_{A!}(-t) = 1 up to degree N.

    Raises nothing; a failure is stored as KoszulDefect(n) for the first
    failing degree.
    """
    a = hilbert_series(A, N)
    b = dual_dims if dual_dims is not None else dual_hilbert_series(A, N)
    result = CheckResult(f'koszul_{A.label}')
    for n in range(1, N + 1):
        value = sum((-1) ** j * a[n - j] * b[j] for j in range(n + 1))
        if value == 0:
            result.add(family=A.label, degree=n, lhs=value, rhs=0)
        else:
            result.fail(KoszulDefect(n), family=A.label, degree=n, lhs=value, rhs=0)
    return result


def predicted_dimension(family, opS, opR, n):
    """
    Rank-sum prediction for the degree-n piece.

    S: l_(n); L: l_(1ⁿ); E: Σ l_λ²; F: Σ l_λ l_λ′; M: Σ l^S_λ l^R_λ;
    N: Σ l^S_λ′ l^R_λ.
    """
    lR = multiplicities(opR, n)
    if family == 'S':
        return lR[partitions_of(n)[0]]
    if family == 'L':
        return lR[partitions_of(n)[-1]]
    if family == 'E':
        return sum(l * l for l in lR.values())
    if family == 'F':
        return sum(l * lR[conjugate(lam)] for lam, l in lR.items())
    lS = multiplicities(opS, n)
    if family == 'M':
        return sum(lS[lam] * l for lam, l in lR.items())
    if family == 'N':
        return sum(lS[conjugate(lam)] * l for lam, l in lR.items())
    raise ValueError(f'Unknown family "{family}".')


def plethysm_rank_identity(opS, opR, family, N):
    """
    Compare graded dimensions with the rank-sum prediction for n ≤ N.

    Failures are stored as IdentityViolation(n, lhs, rhs).
    """
    A = relation_space(family, opR, opS)
    result = CheckResult(f'poincare_{family}')
    for n in range(N + 1):
        lhs = graded_dimension(A, n)
        rhs = predicted_dimension(family, opS, opR, n)
        if lhs == rhs:
            result.add(family=family, degree=n, lhs=lhs, rhs=rhs)
        else:
            result.fail(IdentityViolation(n, lhs, rhs, what=f'dim {family}_n'),
                        family=family, degree=n, lhs=lhs, rhs=rhs)
    return result


def eq9_check(op, n):
    """Im ρ(X_n) = ⋂ R(Λ)ⁿᵢ and Im ρ(Y_n) = ⋂ R(S)ⁿᵢ as subspaces."""
    algebra = op.hecke_algebra(n)
    result = CheckResult('symmetrizer_images')
    for name, element, kind in (
        ('X', q_symmetrizer(algebra), 'L'),
        ('Y', q_antisymmetrizer(algebra), 'S'),
    ):
        image = exact.image_basis(op.represent(element, RHO))
        meet = dual_component(relation_space(kind, op), n)
        values = dict(element=f'{name}_{n}', degree=n, lhs=image.dim, rhs=meet.dim)
        if image == meet:
            result.add(**values)
        else:
            result.fail(IdentityViolation(n, image.dim, meet.dim, what=f'Im rho({name}_{n})'), **values)
    return result
