"""
The second realization of E, F, M and N.

Degree n of M_{SR} is realized as Im Ψ̄ⁿ inside W*^{⊗n}⊗V^{⊗n}, with product
a·b = Ψ̄^{m+n}(a⊗b) after regrouping the dual factors in front.
"""
import logging
import random
from dataclasses import dataclass

from . import exact, tensors
from .partitions import Partition, partitions_of
from .projectors import build_projectors, multiplicity
from .quadratic import dual_component, effective_dual_operator, relation_space, relation_sum
from .reports import CheckResult
from ..exceptions import BiidealViolation, IdentityViolation, NotInComponent

logger = logging.getLogger(__name__)


class RealizedAlgebra:
    """
    E, F, M or N realized through projector images.

    Fields:
        opS: the operator as given (None for E and F)
        opR: the operator on V
        kind: E, F, M or N
        dual_op: the operator actually acting on W (R, R′, S or S′)
        max_degree: the degree up to which checks run
    """

    def __init__(self, opS, opR, kind, max_degree):
        self.opS = opS
        self.opR = opR
        self.kind = kind
        self.max_degree = max_degree
        self.dual_op = effective_dual_operator(kind, opR, opS)
        self.quadratic = relation_space(kind, opR, opS)

    @property
    def field(self):
        return self.opR.field

    @property
    def layout(self):
        return (self.dual_op.dim, self.opR.dim)

    def ambient_dim(self, n):
        return tensors.degree_dim(self.layout, n)

    def bundle(self, n):
        return build_projectors(self.dual_op, self.opR, n)

    def component(self, n):
        """Im Ψ̄ⁿ."""
        return self.bundle(n).component

    def project(self, vector, n):
        return exact.apply(self.bundle(n).psi_bar, vector)

    def unit(self):
        return {0: self.field.one}

    def __repr__(self):
        return f'RealizedAlgebra({self.kind}, {self.dual_op.label}, {self.opR.label})'


def realize(opS, opR, kind, max_degree):
    """
    Build the realized algebra and its components up to max_degree.

    Raises:
        ParameterMismatch: if the operators use different parameters.
        DegenerateParameter: if [n]_q vanishes for some n ≤ max_degree.
    """
    algebra = RealizedAlgebra(opS, opR, kind, max_degree)
    for n in range(max_degree + 1):
        logger.info('Realized %s component %d: dim %d', kind, n, algebra.component(n).dim)
    return algebra


def realized_product(A, a, m, b, n):
    """
    a·b = Ψ̄^{m+n}(a⊗b) for a in degree m and b in degree n.

    Raises:
        NotInComponent: if a or b lies outside its component.
    """
    for vector, degree, name in ((a, m, 'left'), (b, n, 'right')):
        if not A.component(degree).contains_vector(vector):
            raise NotInComponent(f'The {name} factor is not in component {degree} of {A.kind}.')
    dW, dV = A.layout
    product = tensors.shuffled_tensor(a, b, m, n, dW, dV, A.field)
    return A.project(product, m + n)


def multiply(A, a, m, b, n):
    dW, dV = A.layout
    return A.project(tensors.shuffled_tensor(a, b, m, n, dW, dV, A.field), m + n)


# --- Checks ---

def kernel_equality_check(A, n):
    """Ker Ψ̄ⁿ = Σ_i R(A)ⁿᵢ."""
    result = CheckResult('kernel_equality')
    kernel = exact.kernel_basis(A.bundle(n).psi_bar)
    relations = relation_sum(A.quadratic, n)
    values = dict(kind=A.kind, degree=n, lhs=kernel.dim, rhs=relations.dim)
    if kernel == relations:
        result.add(**values)
    else:
        result.fail(IdentityViolation(n, kernel.dim, relations.dim, what='Ker psi_bar'), **values)
    return result


def phi_image_check(A, n):
    """Im Φⁿ = ⋂_i R(A)ⁿᵢ."""
    result = CheckResult('phi_image')
    image = exact.image_basis(A.bundle(n).phi)
    meet = dual_component(A.quadratic, n)
    values = dict(kind=A.kind, degree=n, lhs=image.dim, rhs=meet.dim)
    if image == meet:
        result.add(**values)
    else:
        result.fail(IdentityViolation(n, image.dim, meet.dim, what='Im phi'), **values)
    return result


def dimension_transfer_check(A, n):
    """dim Im Ψ̄ⁿ equals the quotient dimension of the quadratic algebra."""
    result = CheckResult('dimension_transfer')
    lhs = A.component(n).dim
    rhs = A.ambient_dim(n) - relation_sum(A.quadratic, n).dim
    values = dict(kind=A.kind, degree=n, lhs=lhs, rhs=rhs)
    if lhs == rhs:
        result.add(**values)
    else:
        result.fail(IdentityViolation(n, lhs, rhs, what='dim component'), **values)
    return result


def _random_vector(rng, dim, field, spread=3):
    v = {}
    for i in range(dim):
        c = rng.randint(-spread, spread)
        if c:
            v[i] = field(c)
    return v


def associativity_check(A, samples, seed):
    """
    (a·b)·c = a·(b·c) and 1·a = a·1 = a for random degree-1 triples.
    """
    rng = random.Random(seed)
    result = CheckResult('associativity')
    dim = A.ambient_dim(1)
    bad = 0
    for _ in range(samples):
        a, b, c = (_random_vector(rng, dim, A.field) for _ in range(3))
        left = multiply(A, multiply(A, a, 1, b, 1), 2, c, 1)
        right = multiply(A, a, 1, multiply(A, b, 1, c, 1), 2)
        unit_ok = multiply(A, A.unit(), 0, a, 1) == A.project(a, 1) == multiply(A, a, 1, A.unit(), 0)
        if exact.vector_add(left, right, A.field, -A.field.one) or not unit_ok:
            bad += 1
    values = dict(kind=A.kind, samples=samples, seed=seed, failures=bad)
    if bad:
        result.fail(IdentityViolation(3, bad, 0, what='associativity of the realized product'), **values)
    else:
        result.add(**values)
    return result


@dataclass(frozen=True)
class BlockComponent:
    """
    M_λ = Im Ψ_λ inside degree |λ|.

    Fields:
        partition: λ
        degree: |λ|
        subspace: the image
        dim: k^S_λ·l^R_λ
    """
    partition: Partition
    degree: int
    subspace: exact.Subspace

    @property
    def dim(self):
        return self.subspace.dim


def block_split(A, n):
    """The nonzero blocks M_λ, λ ⊢ n, in partition order."""
    images = A.bundle(n).psi_images
    return [
        BlockComponent(lam, n, images[lam])
        for lam in partitions_of(n) if images[lam].dim
    ]


def block_component(A, lam):
    lam = Partition(lam)
    return BlockComponent(lam, lam.weight, A.bundle(lam.weight).psi_images[lam])


def block_split_check(A, n):
    """Block dims are k^S_λ l^R_λ, add up to the component, and Ψ̄ⁿ fixes each block."""
    result = CheckResult('block_split')
    psi_bar = A.bundle(n).psi_bar
    blocks = block_split(A, n)
    for lam in partitions_of(n):
        found = next((b for b in blocks if b.partition == lam), None)
        dim = found.dim if found else 0
        expected = multiplicity(A.dual_op, lam) * multiplicity(A.opR, lam)
        fixed = found is None or all(
            exact.apply(psi_bar, v) == v for v in found.subspace.vectors()
        )
        values = dict(kind=A.kind, degree=n, partition=str(lam), lhs=dim, rhs=expected)
        if dim == expected and fixed:
            result.add(**values)
        else:
            result.fail(IdentityViolation(n, dim, expected, what=f'block {lam}'), **values)
    total = exact.sum_of_subspaces([b.subspace for b in blocks], A.ambient_dim(n), A.field)
    values = dict(kind=A.kind, degree=n, partition='all', lhs=total.dim, rhs=A.component(n).dim)
    if total == A.component(n) and sum(b.dim for b in blocks) == total.dim:
        result.add(**values)
    else:
        result.fail(IdentityViolation(n, total.dim, A.component(n).dim, what='sum of blocks'), **values)
    return result


# --- Coalgebra ---

def coproduct(vector, d, n):
    """
    Δ on degree n of T(V*⊗V): ξ^I x_J ↦ Σ_K (ξ^I x_K) ⊗ (ξ^K x_J).

    The result is indexed by left·d^{2n} + right.
    """
    size = d ** n
    out = {}
    for index, c in vector.items():
        I, J = divmod(index, size)
        for K in range(size):
            out[(I * size + K) * size * size + K * size + J] = c
    return out


def coproduct_check(Q, n=2):
    """
    The ideal generated by the relations of Q is a bi-ideal, and Δ is coassociative.

    Q must be an E-type algebra (layout (d, d)). Δ of every relation must lie
    in R⊗T_n + T_n⊗R.
    """
    d = Q.layout[0]
    field = Q.field
    size = Q.ambient_dim(n)
    relations = Q.relations if n == 2 else relation_sum(Q, n)
    spanning = []
    for r in relations.rows:
        for e in range(size):
            spanning.append(_outer(r, {e: field.one}, size))
            spanning.append(_outer({e: field.one}, r, size))
    target = exact.Subspace.span(spanning, size * size, field)
    result = CheckResult('coproduct')
    bad = sum(1 for r in relations.rows if not target.contains_vector(coproduct(r, d, n)))
    values = dict(algebra=Q.label, degree=n, relations=relations.dim, outside=bad)
    if bad:
        result.fail(BiidealViolation(f'{bad} relation(s) leave R⊗T + T⊗R under the coproduct.'), **values)
    else:
        result.add(**values)

    generators = d * d
    coassociative = True
    for g in range(generators):
        i, j = divmod(g, d)
        left, right = {}, {}
        for k in range(d):
            for l in range(d):
                # (Δ⊗id)Δ and (id⊗Δ)Δ on e^i_j
                left[((i * d + l) * generators + l * d + k) * generators + k * d + j] = field.one
                right[((i * d + k) * generators + k * d + l) * generators + l * d + j] = field.one
        left_set = set(left)
        right_set = set(right)
        coassociative &= left_set == right_set
    result.add(coassociative, algebra=Q.label, degree=1, coassociative=coassociative)
    if not coassociative and result.failure is None:
        result.failure = BiidealViolation('The coproduct is not coassociative.')
    return result


def _outer(u, v, size):
    return {i * size + j: x * y for i, x in u.items() for j, y in v.items()}
