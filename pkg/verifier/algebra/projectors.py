"""
Casimir images Φⁿ, Ψⁿ on W*^{⊗n}⊗V^{⊗n} and the projectors built from them.

The basis of W*^{⊗n}⊗V^{⊗n} is dual-major: flat index I·dV^n + J. With S
acting on W and R on V,

    Φⁿ = Σ_w q^{-l(w)} σ_S(T_w) ⊗ ρ_R(T_{w⁻¹})
    Ψⁿ = Σ_w q^{-l(w)} τ_S(T_w) ⊗ ρ_R(T_{w⁻¹})

Per block, Φ_λ = (σ_S(F_λ)⊗id)·Φⁿ satisfies Φ_λ² = (d_λ/k_λ)Φ_λ, so
Φ̄ⁿ = Σ_λ (k_λ/d_λ)Φ_λ is idempotent with the same image as Φⁿ.
"""
import logging
from functools import cached_property, lru_cache

from . import exact
from .hecke_algebra import inverse_permutation
from .operators import RHO, SIGMA, TAU, same_parameter
from .partitions import Partition, gamma_rs_contains, partitions_of, partitions_up_to
from ..exceptions import BirankUndetermined, NonIntegralMultiplicity

logger = logging.getLogger(__name__)


class ProjectorBundle:
    """
    Φⁿ, Ψⁿ, their block pieces and the modified projectors for a pair (S, R).

    Every matrix is computed on first access and kept; the bundle itself is
    shared through ``build_projectors``.
    """

    def __init__(self, opS, opR, n):
        self.opS = opS
        self.opR = opR
        self.n = n
        self.field = opR.field
        self.blocks = opR.blocks(n)

    @property
    def ambient_dim(self):
        return self.opS.dim ** self.n * self.opR.dim ** self.n

    @property
    def layout(self):
        return (self.opS.dim, self.opR.dim)

    def _casimir_image(self, kind):
        algebra = self.opR.hecke_algebra(self.n)
        dual = self.opS.lifts(self.n, kind)
        plain = self.opR.lifts(self.n, RHO)
        total = exact.zeros(self.ambient_dim, self.ambient_dim, self.field)
        for w in algebra.permutations:
            weight = algebra.q_power(-algebra.lengths[w])
            term = exact.kron(dual[w], plain[inverse_permutation(w)])
            total = exact.add(total, exact.scale(term, weight))
        return total

    @cached_property
    def phi(self):
        logger.info('Building Phi^%d for %s, %s', self.n, self.opS.label, self.opR.label)
        return self._casimir_image(SIGMA)

    @cached_property
    def psi(self):
        logger.info('Building Psi^%d for %s, %s', self.n, self.opS.label, self.opR.label)
        return self._casimir_image(TAU)

    def _block_pieces(self, kind, casimir):
        size = self.opR.dim ** self.n
        pieces = {}
        for block in self.blocks:
            F = self.opS.represent(block.idempotent, kind)
            left = exact.kron(F, exact.identity(size, self.field))
            pieces[block.partition] = exact.matmul(left, casimir)
        return pieces

    @cached_property
    def phi_blocks(self):
        """{λ: Φ_λ}."""
        return self._block_pieces(SIGMA, self.phi)

    @cached_property
    def psi_blocks(self):
        """{λ: Ψ_λ}."""
        return self._block_pieces(TAU, self.psi)

    def _normalized(self, pieces):
        total = exact.zeros(self.ambient_dim, self.ambient_dim, self.field)
        for block in self.blocks:
            weight = self.field.one / block.z_eigenvalue
            total = exact.add(total, exact.scale(pieces[block.partition], weight))
        return total

    @cached_property
    def phi_bar(self):
        return self._normalized(self.phi_blocks)

    @cached_property
    def psi_bar(self):
        return self._normalized(self.psi_blocks)

    def block_projector(self, lam, kind=TAU):
        """(k_λ/d_λ)·Ψ_λ (or Φ_λ): the idempotent piece of the modified projector on block λ."""
        lam = Partition(lam)
        block = next(b for b in self.blocks if b.partition == lam)
        pieces = self.psi_blocks if kind == TAU else self.phi_blocks
        return exact.scale(pieces[lam], self.field.one / block.z_eigenvalue)

    @cached_property
    def psi_images(self):
        """{λ: Im Ψ_λ} as Subspaces."""
        return {lam: exact.image_basis(M) for lam, M in self.psi_blocks.items()}

    @cached_property
    def component(self):
        """Im Ψ̄ⁿ."""
        return exact.image_basis(self.psi_bar)

    def __repr__(self):
        return f'ProjectorBundle({self.opS.label}, {self.opR.label}, n={self.n})'


@lru_cache(maxsize=None)
def build_projectors(opS, opR, n):
    """
    Shared ProjectorBundle for (S, R) in degree n.

    Raises:
        ParameterMismatch: if S and R use different parameters.
        DegenerateParameter: if [k]_q vanishes for some k ≤ n.
    """
    same_parameter(opS, opR)
    exact.field_check_parameter(opR.field, opR.q, n)
    return ProjectorBundle(opS, opR, n)


def check_bundle(bundle):
    """
    Block identities of a bundle as a list of (name, holds) pairs.

    Covers Φ_λ² = (d_λ/k_λ)Φ_λ, Φ_λΦ_μ = 0 for λ ≠ μ, the same for Ψ, and
    idempotency of Φ̄ⁿ and Ψ̄ⁿ with Im Φ̄ⁿ = Im Φⁿ, Im Ψ̄ⁿ = Im Ψⁿ. The minimal
    polynomial of Φⁿ must divide x·Π(x - d_λ/k_λ) over the blocks with Φ_λ ≠ 0.
    """
    results = [('phi minimal polynomial', _minimal_polynomial_divides(bundle))]
    for name, pieces, whole, bar in (
        ('phi', bundle.phi_blocks, bundle.phi, bundle.phi_bar),
        ('psi', bundle.psi_blocks, bundle.psi, bundle.psi_bar),
    ):
        for block in bundle.blocks:
            P = pieces[block.partition]
            square = exact.matmul(P, P)
            results.append((
                f'{name}_{block.partition} squared',
                exact.matrices_equal(square, exact.scale(P, block.z_eigenvalue)),
            ))
            for other in bundle.blocks:
                if other.partition != block.partition:
                    product = exact.matmul(P, pieces[other.partition])
                    results.append((
                        f'{name}_{block.partition}*{name}_{other.partition} = 0',
                        exact.is_zero_matrix(product),
                    ))
        results.append((f'{name}_bar idempotent', exact.is_idempotent(bar)))
        results.append((f'Im {name}_bar = Im {name}', exact.image_basis(bar) == exact.image_basis(whole)))
    return results


def _minimal_polynomial_divides(bundle):
    field = bundle.field
    annihilator = [field.zero, field.one]
    for block in bundle.blocks:
        if exact.is_zero_matrix(bundle.phi_blocks[block.partition]):
            continue
        shifted = [field.zero] + annihilator
        for i, c in enumerate(annihilator):
            shifted[i] -= block.z_eigenvalue * c
        annihilator = shifted
    minimal = exact.minimal_polynomial(bundle.phi)
    logger.debug('Minimal polynomial of Phi^%d has degree %d', bundle.n, len(minimal) - 1)
    return (len(minimal) <= len(annihilator)
            and exact.is_zero_matrix(exact.polynomial_at(annihilator, bundle.phi)))


# --- Multiplicities ---

def multiplicity(op, lam):
    """
    l_λ = rank ρ(F_λ) / d_λ.

    Raises:
        NonIntegralMultiplicity: if d_λ does not divide the rank.
    """
    lam = Partition(lam)
    block = next(b for b in op.blocks(lam.weight) if b.partition == lam)
    r = exact.rank(op.represent(block.idempotent, RHO))
    count, rest = divmod(r, block.dim)
    if rest:
        raise NonIntegralMultiplicity(
            f'{op.label}: rank {r} of rho(F_{lam}) is not a multiple of d = {block.dim}.'
        )
    return count


def multiplicities(op, n):
    return {lam: multiplicity(op, lam) for lam in partitions_of(n)}


def birank_candidates(op, probe_degree):
    """
    Every minimal (r, s) whose Γ_{r,s} matches the vanishing pattern of l_λ.

    Candidates range over 0 ≤ r, s ≤ probe_degree; minimality is in the
    product order.
    """
    support = {
        lam: multiplicity(op, lam) != 0
        for lam in partitions_up_to(probe_degree) if lam.weight
    }
    fitting = [
        (r, s)
        for r in range(probe_degree + 1)
        for s in range(probe_degree + 1)
        if all(gamma_rs_contains(lam, r, s) == nonzero for lam, nonzero in support.items())
    ]
    return sorted(
        (r, s) for r, s in fitting
        if not any((a, b) != (r, s) and a <= r and b <= s for a, b in fitting)
    )


def birank(op, probe_degree=None):
    """
    The birank (r, s) of a Hecke operator.

    Picks the unique minimal fitting pair; among several, the unique one of
    least r + s.

    Raises:
        BirankUndetermined: if no pair fits or the tie cannot be broken.
    """
    probe = probe_degree if probe_degree is not None else op.dim + 1
    minimal = birank_candidates(op, probe)
    if not minimal:
        raise BirankUndetermined(f'{op.label}: no Γ_(r,s) matches the multiplicities up to degree {probe}.')
    if len(minimal) == 1:
        return minimal[0]
    least = min(r + s for r, s in minimal)
    smallest = [pair for pair in minimal if sum(pair) == least]
    if len(smallest) != 1:
        raise BirankUndetermined(f'{op.label}: candidates {minimal} remain at probe degree {probe}.')
    logger.debug('Birank of %s chosen from %s', op.label, minimal)
    return smallest[0]
