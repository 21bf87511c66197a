"""
The map μ*: M_{TS} → M_{TR}⊗M_{RS} and its kernel.

Spaces: T acts on W, R on V and S on U. Degree n of M_{TS} lives in
W*^{⊗n}⊗U^{⊗n}. A target element is kept as a matrix Y whose rows index
W*^{⊗n}⊗V^{⊗n} and whose columns index V*^{⊗n}⊗U^{⊗n}, so the two
projectors act as Y ↦ A·Y·Bᵀ.

θ_n sends ξ^I⊗u_L to Σ_{a,b} mid[a, b] (ξ^I⊗x_a)⊗(ξ^b⊗u_L). In the plain
version mid is the identity. In the twisted version the interleaved
Σ x_{a1}ξ^{a1}⋯x_{an}ξ^{an} is normal-ordered with
ω(ξ^i⊗x_j) = Σ_{k,l} (R⁻¹)^{ik}_{jl} x_k⊗ξ^l, and the second target factor
is M_{R̂S} with R̂ = PRP.
"""
import logging
import random
from functools import cached_property

from . import exact, tensors
from .bialgebra import RealizedAlgebra
from .ideals import ideal_component
from .operators import check_hecke_symmetry, same_parameter
from .partitions import gamma_rs_contains, partitions_of, rectangle
from .projectors import birank, build_projectors, multiplicity
from .quadratic import relation_space
from .reports import CheckResult
from ..exceptions import BirankUndetermined, EmptyGenerator, IdentityViolation

logger = logging.getLogger(__name__)

PLAIN, TWISTED = 'plain', 'twisted'


class MuStarInstance:
    """
    A triple (T, R, S) with a version of μ*.

    Fields:
        opT, opR, opS: operators on W, V and U with equal parameters
        version: plain or twisted
        degree_bound: the highest degree checks run at
    """

    def __init__(self, opT, opR, opS, version=PLAIN, degree_bound=2):
        if version not in (PLAIN, TWISTED):
            raise ValueError(f'Unknown version "{version}".')
        same_parameter(opT, opR, opS)
        check_hecke_symmetry(opR)
        self.opT = opT
        self.opR = opR
        self.opS = opS
        self.version = version
        self.degree_bound = degree_bound
        self._mids = {}

    @property
    def field(self):
        return self.opR.field

    @cached_property
    def middle(self):
        """The dual-side operator of the second target factor: R or R̂."""
        return self.opR.hat() if self.version == TWISTED else self.opR

    def with_version(self, version):
        return MuStarInstance(self.opT, self.opR, self.opS, version, self.degree_bound)

    def source(self, n):
        return build_projectors(self.opT, self.opS, n)

    def left_target(self, n):
        return build_projectors(self.opT, self.opR, n)

    def right_target(self, n):
        return build_projectors(self.middle, self.opS, n)

    @cached_property
    def omega(self):
        """{(i, j): [(k, l, (R⁻¹)^{ik}_{jl})]} for ω(ξ^i⊗x_j)."""
        d = self.opR.dim
        table = {}
        for row, cols in exact.entries(self.opR.inverse_matrix).items():
            i, k = divmod(row, d)
            for col, v in cols.items():
                j, l = divmod(col, d)
                table.setdefault((i, j), []).append((k, l, v))
        return table

    def crossing(self, i, j):
        """ξ^i past x_j: [(k, l, coefficient)] with result x_k⊗ξ^l."""
        if self.version == PLAIN:
            return [(j, i, self.field.one)]
        return self.omega.get((i, j), [])

    def mid(self, n):
        """The dR^n × dR^n matrix of the inserted element of V^{⊗n}⊗V*^{⊗n}."""
        if n not in self._mids:
            self._mids[n] = self._build_mid(n)
        return self._mids[n]

    def _build_mid(self, n):
        d = self.opR.dim
        size = d ** n
        field = self.field
        if self.version == PLAIN:
            return exact.identity(size, field)
        pattern = ['x', 'xi'] * n
        swaps = []
        while True:
            pos = next((p for p in range(len(pattern) - 1)
                        if pattern[p] == 'xi' and pattern[p + 1] == 'x'), None)
            if pos is None:
                break
            pattern[pos], pattern[pos + 1] = pattern[pos + 1], pattern[pos]
            swaps.append(pos)
        words = {}
        for a in range(size):
            digits = tensors.to_digits(a, d, n)
            words[tuple(x for t in digits for x in (t, t))] = field.one
        for pos in swaps:
            moved = {}
            for word, c in words.items():
                for k, l, v in self.crossing(word[pos], word[pos + 1]):
                    new = word[:pos] + (k, l) + word[pos + 2:]
                    moved[new] = moved.get(new, field.zero) + c * v
            words = {w: c for w, c in moved.items() if not field.is_zero(c)}
        rows = {}
        for word, c in words.items():
            a = tensors.from_digits(word[:n], d)
            b = tensors.from_digits(word[n:], d)
            rows.setdefault(a, {})[b] = c
        return exact.matrix(rows, (size, size), field)

    def __repr__(self):
        return (f'MuStarInstance({self.opT.label}, {self.opR.label}, {self.opS.label}, '
                f'{self.version})')


def _dims(inst, n):
    return inst.opT.dim ** n, inst.opR.dim ** n, inst.opS.dim ** n


def _theta_block(inst, vector, n):
    """θ_n(vector) as a matrix with rows W*^{⊗n}⊗V^{⊗n} and columns V*^{⊗n}⊗U^{⊗n}."""
    dT, dR, dS = _dims(inst, n)
    mid = exact.entries(inst.mid(n))
    rows = {}
    for index, c in vector.items():
        I, L = divmod(index, dS)
        for a, row in mid.items():
            out = rows.setdefault(I * dR + a, {})
            for b, m in row.items():
                key = b * dS + L
                out[key] = out.get(key, inst.field.zero) + c * m
    return exact.matrix(rows, (dT * dR, dR * dS), inst.field)


def _flatten(Y):
    cols = Y.shape[1]
    return {i * cols + j: v for i, row in exact.entries(Y).items() for j, v in row.items()}


def theta_matrix(inst, n):
    """Matrix of θ_n from W*^{⊗n}⊗U^{⊗n} to (W*^{⊗n}⊗V^{⊗n})⊗(V*^{⊗n}⊗U^{⊗n})."""
    dT, dR, dS = _dims(inst, n)
    columns = {}
    for col in range(dT * dS):
        for row, v in _flatten(_theta_block(inst, {col: inst.field.one}, n)).items():
            columns.setdefault(row, {})[col] = v
    return exact.matrix(columns, (dT * dR * dR * dS, dT * dS), inst.field)


def mu_star_block(inst, vector, n):
    """(Ψ̄_TR ⊗ Ψ̄_RS)(θ_n(vector)) as a matrix A·X·Bᵀ."""
    X = _theta_block(inst, vector, n)
    A = inst.left_target(n).psi_bar
    B = inst.right_target(n).psi_bar
    return exact.matmul(exact.matmul(A, X), exact.transpose(B))


def mu_star(inst, vector, n):
    return _flatten(mu_star_block(inst, vector, n))


def mu_star_matrix(inst, n):
    """
    μ*_n on the rref basis of Im Ψ̄_TSⁿ; column c is the image of basis row c.
    """
    logger.info('Building mu* in degree %d for %r', n, inst)
    dT, dR, dS = _dims(inst, n)
    basis = inst.source(n).component.rows
    columns = {}
    for c, v in enumerate(basis):
        for row, x in mu_star(inst, v, n).items():
            columns.setdefault(row, {})[c] = x
    return exact.matrix(columns, (dT * dR * dR * dS, len(basis)), inst.field)


def restricted_kernel(inst, n):
    """Ker μ*_n inside Im Ψ̄_TSⁿ, in W*^{⊗n}⊗U^{⊗n} coordinates."""
    basis = inst.source(n).component.rows
    ambient = inst.source(n).ambient_dim
    if not basis:
        return exact.Subspace.zero(ambient, inst.field)
    coefficients = exact.kernel_basis(mu_star_matrix(inst, n)).rows
    vectors = []
    for coeff in coefficients:
        v = {}
        for c, x in coeff.items():
            v = exact.vector_add(v, basis[c], inst.field, x)
        vectors.append(v)
    return exact.Subspace.span(vectors, ambient, inst.field)


def _outside(bundle, n, r, s):
    images = bundle.psi_images
    return exact.sum_of_subspaces(
        [images[lam] for lam in partitions_of(n) if not gamma_rs_contains(lam, r, s)],
        bundle.ambient_dim, bundle.field,
    )


def kernel_vs_rectangle(inst, n, probe_degree=None):
    """
    Ker μ*_n = ⊕_{λ ⊢ n, λ ∉ Γ_{r,s}} M^{TS}_λ with (r, s) the birank of R.

    The report names every operator whose birank gives the same prediction,
    and cross-checks against the rectangle ideal of M_{TS} when it is nonzero.
    """
    result = CheckResult('mu_kernel')
    r, s = birank(inst.opR, probe_degree)
    source = inst.source(n)
    kernel = restricted_kernel(inst, n)
    predicted = _outside(source, n, r, s)
    attribution = []
    for name, op in (('T', inst.opT), ('R', inst.opR), ('S', inst.opS)):
        try:
            pair = birank(op, probe_degree)
        except BirankUndetermined:
            continue
        if _outside(source, n, *pair) == kernel:
            attribution.append(name)
    values = dict(
        version=inst.version, degree=n, birank=[r, s], rectangle=str(rectangle(r, s)),
        rank=source.component.dim - kernel.dim, kernel_dim=kernel.dim,
        predicted_kernel_dim=predicted.dim, attribution=attribution,
    )
    if kernel == predicted:
        result.add(**values)
    else:
        result.fail(IdentityViolation(n, kernel.dim, predicted.dim, what='Ker mu*'), **values)

    box = rectangle(r, s)
    if box.weight <= n:
        M_TS = RealizedAlgebra(inst.opT, inst.opS, 'M', n)
        try:
            ideal = ideal_component(M_TS, box, n).subspace
        except EmptyGenerator:
            ideal = exact.Subspace.zero(source.ambient_dim, inst.field)
        values = dict(version=inst.version, degree=n, rectangle=str(box),
                      lhs=kernel.dim, rhs=ideal.dim)
        if ideal == kernel:
            result.add(**values)
        else:
            result.fail(IdentityViolation(n, kernel.dim, ideal.dim, what='rectangle ideal'), **values)
    return result


def block_injectivity_check(inst, n):
    """
    μ*_n is injective on M^{TS}_λ when l^R_λ ≠ 0 and zero otherwise, and
    maps M^{TS}_λ into the λ⊗λ block of the target.
    """
    result = CheckResult('mu_blocks')
    source = inst.source(n)
    left, right = inst.left_target(n), inst.right_target(n)
    projectors = {
        lam: (left.block_projector(lam), right.block_projector(lam))
        for lam in partitions_of(n)
    }
    for lam in partitions_of(n):
        block = source.psi_images[lam]
        if not block.dim:
            continue
        images = [mu_star_block(inst, v, n) for v in block.rows]
        rank = exact.Subspace.span([_flatten(Y) for Y in images], left.ambient_dim * right.ambient_dim,
                                   inst.field).dim
        expected = block.dim if multiplicity(inst.opR, lam) else 0
        leaked = 0
        for Y in images:
            for nu, (P, _) in projectors.items():
                for kappa, (_, Q) in projectors.items():
                    if nu == lam and kappa == lam:
                        continue
                    piece = exact.matmul(exact.matmul(P, Y), exact.transpose(Q))
                    if not exact.is_zero_matrix(piece):
                        leaked += 1
        values = dict(version=inst.version, degree=n, partition=str(lam), block_dim=block.dim,
                      rank=rank, expected_rank=expected, cross_block=leaked)
        if rank == expected and not leaked:
            result.add(**values)
        else:
            result.fail(IdentityViolation(n, rank, expected, what=f'mu* on block {lam}'), **values)
    return result


def relation_check(inst):
    """
    μ*_2 kills the relations of M_{TS}, and mid·R̂ = R·mid for the
    degree-2 insertion.
    """
    result = CheckResult('mu_relations')
    relations = relation_space('M', inst.opS, inst.opT).relations
    survivors = sum(1 for r in relations.rows if mu_star(inst, r, 2))
    values = dict(version=inst.version, degree=2, relations=relations.dim, surviving=survivors)
    if survivors:
        result.fail(IdentityViolation(2, survivors, 0, what='mu* on relations'), **values)
    else:
        result.add(**values)
    mid = inst.mid(2)
    commutes = exact.matrices_equal(
        exact.matmul(mid, inst.middle.matrix), exact.matmul(inst.opR.matrix, mid)
    )
    values = dict(version=inst.version, degree=2, identity='mid*Rhat = R*mid', holds=commutes,
                  hat_equals_r=exact.matrices_equal(inst.middle.matrix, inst.opR.matrix))
    if commutes:
        result.add(**values)
    else:
        result.fail(IdentityViolation(2, 'mid*Rhat', 'R*mid', what='insertion commutation'), **values)
    return result


def twisted_relation_check(inst):
    """The relation identity for the twisted version of the instance."""
    return relation_check(inst if inst.version == TWISTED else inst.with_version(TWISTED))


def target_product(inst, Y1, Y2):
    """
    Product of two degree-1 target elements (as matrices) in degree 2.

    The V*-factor of the left element crosses the V-factor of the right one
    through ``crossing``; every other crossing is a plain flip.
    """
    dT, dR, dS = _dims(inst, 1)
    field = inst.field
    rows = {}
    for r1, row1 in exact.entries(Y1).items():
        i1, a1 = divmod(r1, dR)
        for c1, y1 in row1.items():
            b1, L1 = divmod(c1, dS)
            for r2, row2 in exact.entries(Y2).items():
                i2, a2 = divmod(r2, dR)
                for c2, y2 in row2.items():
                    b2, L2 = divmod(c2, dS)
                    for k, l, w in inst.crossing(b1, a2):
                        row = (i1 * dT + i2) * dR * dR + a1 * dR + k
                        col = (l * dR + b2) * dS * dS + L1 * dS + L2
                        out = rows.setdefault(row, {})
                        out[col] = out.get(col, field.zero) + y1 * y2 * w
    K = exact.matrix(rows, (dT * dT * dR * dR, dR * dR * dS * dS), field)
    A = inst.left_target(2).psi_bar
    B = inst.right_target(2).psi_bar
    return exact.matmul(exact.matmul(A, K), exact.transpose(B))


def algebra_map_check(inst, samples, seed):
    """μ*_2(a·b) = μ*_1(a)·μ*_1(b) for random degree-1 a, b."""
    rng = random.Random(seed)
    result = CheckResult('mu_algebra_map')
    dT, dS = inst.opT.dim, inst.opS.dim
    source = inst.source(2)
    field = inst.field
    bad = 0
    for _ in range(samples):
        a, b = ({i: field(c) for i in range(dT * dS) if (c := rng.randint(-3, 3))} for _ in range(2))
        product = exact.apply(source.psi_bar, tensors.shuffled_tensor(a, b, 1, 1, dT, dS, field))
        lhs = mu_star_block(inst, product, 2)
        rhs = target_product(inst, mu_star_block(inst, a, 1), mu_star_block(inst, b, 1))
        if not exact.matrices_equal(lhs, rhs):
            bad += 1
    values = dict(version=inst.version, samples=samples, seed=seed, failures=bad)
    if bad:
        result.fail(IdentityViolation(2, bad, 0, what='mu* multiplicativity'), **values)
    else:
        result.add(**values)
    return result
