"""
Invariant ideals of M_{SR} and quantum minors.

Ideal components are grown degree by degree from the generating block:
J_{k+1} = span(A_1·J_k + J_k·A_1), starting at J_{|σ|} = M_σ.
"""
import itertools
import logging
from dataclasses import dataclass

from . import exact, tensors
from .bialgebra import RealizedAlgebra, block_component, multiply
from .hecke_algebra import all_permutations, length
from .operators import make_standard
from .partitions import Partition, beta_geq, conjugate, lr_support, partitions_of
from .reports import CheckResult
from ..exceptions import BadIndexLists, EmptyGenerator, IdentityViolation, MultiplicityTooHigh

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdealComponent:
    """
    Degree n of the ideal I_σ generated by M_σ.

    Fields:
        sigma: the generating partition
        degree: n
        subspace: the component inside W*^{⊗n}⊗V^{⊗n}
    """
    sigma: Partition
    degree: int
    subspace: exact.Subspace

    @property
    def dim(self):
        return self.subspace.dim


def _grow(A, subspace, k):
    """span(A_1·J + J·A_1) for J in degree k."""
    generators = A.component(1).vectors()
    vectors = []
    for j in subspace.rows:
        for g in generators:
            vectors.append(multiply(A, g, 1, j, k))
            vectors.append(multiply(A, j, k, g, 1))
    return exact.Subspace.span(vectors, A.ambient_dim(k + 1), A.field)


def ideal_component(A, sigma, n):
    """
    Degree n of I_σ.

    Raises:
        EmptyGenerator: if M_σ = 0 for this pair of operators.
    """
    sigma = Partition(sigma)
    generator = block_component(A, sigma).subspace
    if not generator.dim:
        raise EmptyGenerator(f'M_{sigma} vanishes for {A!r}.')
    if n < sigma.weight:
        return IdealComponent(sigma, n, exact.Subspace.zero(A.ambient_dim(n), A.field))
    current = generator
    for k in range(sigma.weight, n):
        current = _grow(A, current, k)
    logger.debug('I_%s in degree %d: dim %d', sigma, n, current.dim)
    return IdealComponent(sigma, n, current)


def block_sum(A, partitions, n):
    """⊕ M_τ over the given τ ⊢ n."""
    images = A.bundle(n).psi_images
    return exact.sum_of_subspaces(
        [images[tau] for tau in partitions if Partition(tau).weight == n],
        A.ambient_dim(n), A.field,
    )


def ideal_component_check(A, sigma, n):
    """I_σ in degree n equals ⊕_{τ ⊇ σ, τ ⊢ n} M_τ."""
    sigma = Partition(sigma)
    result = CheckResult('ideal_component')
    computed = ideal_component(A, sigma, n).subspace
    predicted = block_sum(A, [tau for tau in partitions_of(n) if tau.contains(sigma)], n)
    values = dict(sigma=str(sigma), degree=n, computed=computed.dim, predicted=predicted.dim,
                  equal=computed == predicted)
    if computed == predicted:
        result.add(**values)
    else:
        result.fail(IdentityViolation(n, computed.dim, predicted.dim, what=f'I_{sigma}'), **values)
    return result


def key_lemma_check(A, lam, mu):
    """
    span(M_λ·M_μ) = Σ_{γ ∈ C_{λ,μ}} M_γ.

    Raises:
        MultiplicityTooHigh: if some c^γ_{λμ} ≥ 2.
        EmptyGenerator: if M_λ or M_μ vanishes.
    """
    lam, mu = Partition(lam), Partition(mu)
    support = lr_support(lam, mu)
    high = {str(g): c for g, c in support.items() if c > 1}
    if high:
        raise MultiplicityTooHigh(f'LR coefficients above 1 for {lam} and {mu}: {high}.')
    left = block_component(A, lam).subspace
    right = block_component(A, mu).subspace
    if not left.dim or not right.dim:
        raise EmptyGenerator(f'M_{lam} or M_{mu} vanishes for {A!r}.')
    m, n = lam.weight, mu.weight
    products = [multiply(A, a, m, b, n) for a in left.rows for b in right.rows]
    computed = exact.Subspace.span(products, A.ambient_dim(m + n), A.field)
    predicted = block_sum(A, list(support), m + n)
    result = CheckResult('key_lemma')
    values = dict(lam=str(lam), mu=str(mu), degree=m + n, computed=computed.dim,
                  predicted=predicted.dim, support=sorted(str(g) for g in support))
    if computed == predicted:
        result.add(**values)
    else:
        result.fail(IdentityViolation(m + n, computed.dim, predicted.dim, what='M_lambda*M_mu'), **values)
    return result


def _column_ideal(A, k, n):
    """Components of I_{(1^k)} in degrees 0..n; zero when M_{(1^k)} vanishes."""
    column = Partition((1,) * k)
    try:
        return [ideal_component(A, column, m).subspace for m in range(n + 1)]
    except EmptyGenerator:
        return [exact.Subspace.zero(A.ambient_dim(m), A.field) for m in range(n + 1)]


def product_of_ideals(A, left, right, n):
    """Componentwise product: P_m = Σ_{a+b=m} span(I_a·J_b), for m ≤ n."""
    product = []
    for m in range(n + 1):
        vectors = []
        for a in range(m + 1):
            b = m - a
            for u in left[a].rows:
                for v in right[b].rows:
                    vectors.append(multiply(A, u, a, v, b))
        product.append(exact.Subspace.span(vectors, A.ambient_dim(m), A.field))
    return product


def ideal_product_check(A, sigma, n):
    """Π_i I_{(1^{σ_i})} in degree n equals ⊕_{τ ⊢ n, τ ≥ σ′} M_τ."""
    sigma = Partition(sigma)
    result = CheckResult('ideal_product')
    product = None
    for row in sigma:
        factor = _column_ideal(A, row, n)
        product = factor if product is None else product_of_ideals(A, product, factor, n)
    computed = product[n] if product else exact.Subspace.full(A.ambient_dim(n), A.field)
    dual = conjugate(sigma)
    predicted_set = [tau for tau in partitions_of(n) if beta_geq(tau, dual)]
    predicted = block_sum(A, predicted_set, n)
    values = dict(sigma=str(sigma), degree=n, computed=computed.dim, predicted=predicted.dim,
                  equal=computed == predicted)
    if computed == predicted:
        result.add(**values)
    else:
        result.fail(IdentityViolation(n, computed.dim, predicted.dim, what=f'product for {sigma}'), **values)
    return result


# --- Ideal-lattice criteria ---

def support(A, bound):
    """Partitions τ with 1 ≤ |τ| ≤ bound and M_τ ≠ 0."""
    found = []
    for n in range(1, bound + 1):
        images = A.bundle(n).psi_images
        found.extend(tau for tau in partitions_of(n) if images[tau].dim)
    return found


def is_ideal(A, J, degree_bound):
    """Whether ⊕_{τ∈J} M_τ is closed under multiplication by A_1 on both sides below degree_bound."""
    J = {Partition(t) for t in J}
    for n in range(1, degree_bound):
        here = block_sum(A, [t for t in J if t.weight == n], n)
        if not here.dim:
            continue
        above = block_sum(A, [t for t in J if t.weight == n + 1], n + 1)
        if not above.contains(_grow(A, here, n)):
            return False
    return True


def dideal_check(A, J, degree_bound):
    """I(J) is an ideal exactly when J is upward closed inside the support of M."""
    J = {Partition(t) for t in J}
    present = support(A, degree_bound)
    live = {t for t in J if t in present}
    closed = all(
        tau in live for tau in present
        if any(tau.contains(s) for s in live)
    )
    computed = is_ideal(A, live, degree_bound)
    result = CheckResult('dideal_criterion')
    values = dict(partitions=sorted(str(t) for t in live), degree_bound=degree_bound,
                  is_ideal=computed, upward_closed=closed)
    if computed == closed:
        result.add(**values)
    else:
        result.fail(IdentityViolation(degree_bound, computed, closed, what='D-ideal criterion'), **values)
    return result


def containment_check(A, sigma, tau, max_degree):
    """I_σ ⊇ I_τ, by components in degrees |τ|..max_degree, agrees with τ ⊇ σ."""
    sigma, tau = Partition(sigma), Partition(tau)
    computed = all(
        ideal_component(A, sigma, n).subspace.contains(ideal_component(A, tau, n).subspace)
        for n in range(tau.weight, max(max_degree, tau.weight) + 1)
    )
    predicted = tau.contains(sigma)
    result = CheckResult('ideal_containment')
    values = dict(sigma=str(sigma), tau=str(tau), computed=computed, predicted=predicted)
    if computed == predicted:
        result.add(**values)
    else:
        result.fail(IdentityViolation(tau.weight, computed, predicted, what='ideal containment'), **values)
    return result


# --- Quantum minors ---

def quantum_minor(dS, dR, p, rows, cols, field):
    """
    Σ_σ (-p)^{-l(σ)} e^{j_1}_{i_σ(1)} ⋯ e^{j_k}_{i_σ(k)} with e^j_i = ξ^j⊗x_i.

    ``rows`` index x in V (dim dR) and ``cols`` index ξ in W* (dim dS); the
    ξ-part keeps the order of ``cols``.

    Raises:
        BadIndexLists: for lists of unequal length, out of range, or not
            strictly increasing.
    """
    rows, cols = tuple(rows), tuple(cols)
    k = len(rows)
    if not k or k != len(cols):
        raise BadIndexLists(f'Row and column lists {rows}, {cols} must be nonempty and of equal length.')
    for name, index, bound in (('row', rows, dR), ('column', cols, dS)):
        if any(a >= b for a, b in zip(index, index[1:])):
            raise BadIndexLists(f'The {name} indices {index} are not strictly increasing.')
        if index[0] < 0 or index[-1] >= bound:
            raise BadIndexLists(f'The {name} indices {index} leave the range 0..{bound - 1}.')
    base = tensors.from_digits(cols, dS) * dR ** k
    minus_p = -p
    minor = {}
    for w in all_permutations(k):
        arranged = tuple(rows[w[t]] for t in range(k))
        minor[base + tensors.from_digits(arranged, dR)] = field.power(minus_p, -length(w))
    return minor


def minor_span_check(dS, dR, p, k, field):
    """The classes of all k×k quantum minors span M_{(1^k)} for standard operators."""
    opS = make_standard(dS, p, field)
    opR = make_standard(dR, p, field)
    A = RealizedAlgebra(opS, opR, 'M', k)
    classes = [
        A.project(quantum_minor(dS, dR, p, rows, cols, field), k)
        for rows in itertools.combinations(range(dR), k)
        for cols in itertools.combinations(range(dS), k)
    ]
    computed = exact.Subspace.span(classes, A.ambient_dim(k), field)
    predicted = block_component(A, (1,) * k).subspace
    result = CheckResult('minor_span')
    values = dict(dS=dS, dR=dR, k=k, minors=len(classes), computed=computed.dim, predicted=predicted.dim)
    if computed == predicted:
        result.add(**values)
    else:
        result.fail(IdentityViolation(k, computed.dim, predicted.dim, what='span of quantum minors'), **values)
    return result
