"""
The Hecke algebra H_{n,q} in the T_w basis.

Permutations are tuples of images (w(0), ..., w(n-1)); products compose
right to left, so (u·w)(i) = u(w(i)). The generator T_i is the simple
transposition of positions i and i+1 (0-based). Block data (central
idempotents, characters and form constants) are computed once per
(field, q, n) and shared through the module-level ``registry``.
"""
import itertools
import logging
from dataclasses import dataclass

from . import exact
from .partitions import (
    Partition,
    add_cell,
    addable_cells,
    count_standard_tableaux,
    partitions_of,
)
from .reports import CheckResult
from ..exceptions import (
    BlockSeparationFailure,
    IdentityViolation,
    MixedFieldBackends,
    ParameterMismatch,
    RankMismatch,
)

logger = logging.getLogger(__name__)


# --- Permutations ---

def identity_permutation(n):
    return tuple(range(n))


def compose(u, w):
    return tuple(u[x] for x in w)


def inverse_permutation(w):
    inv = [0] * len(w)
    for i, x in enumerate(w):
        inv[x] = i
    return tuple(inv)


def length(w):
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def simple_transposition(i, n):
    w = list(range(n))
    w[i], w[i + 1] = w[i + 1], w[i]
    return tuple(w)


def transposition(i, k, n):
    w = list(range(n))
    w[i], w[k] = w[k], w[i]
    return tuple(w)


def reduced_word(w):
    """Letters i_1..i_k with w = s_{i_1}···s_{i_k}, found by bubbling right descents."""
    w = list(w)
    tail = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                tail.append(i)
                break
        else:
            break
    return tuple(reversed(tail))


def all_permutations(n):
    """S_n ordered by length, then lexicographically."""
    return tuple(sorted(itertools.permutations(range(n)), key=lambda w: (length(w), w)))


def format_permutation(w):
    """One-line notation, 1-based."""
    return ''.join(str(x + 1) for x in w) if w else 'e'


# --- Elements ---

class HeckeElement:
    """
    A finite combination Σ c_w T_w in H_{n,q}.

    Coefficients are stored without explicit zeros.
    """

    __slots__ = ('algebra', 'coeffs')

    def __init__(self, algebra, coeffs=None):
        self.algebra = algebra
        field = algebra.field
        self.coeffs = {w: c for w, c in (coeffs or {}).items() if not field.is_zero(c)}

    @property
    def n(self):
        return self.algebra.n

    @property
    def field(self):
        return self.algebra.field

    def _check(self, other):
        if not isinstance(other, HeckeElement):
            raise TypeError(f'Cannot combine a Hecke element with {type(other).__name__}.')
        if other.algebra.n != self.algebra.n:
            raise RankMismatch(f'H_{self.n} and H_{other.n} elements cannot be combined.')
        if other.algebra.field != self.algebra.field:
            raise MixedFieldBackends('Hecke elements use different scalar backends.')
        if other.algebra.q != self.algebra.q:
            raise ParameterMismatch('Hecke elements use different parameters.')

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        field = self.field
        for w, c in other.coeffs.items():
            out[w] = out.get(w, field.zero) + c
        return HeckeElement(self.algebra, out)

    def __sub__(self, other):
        return self + other.scaled(-self.field.one)

    def __neg__(self):
        return self.scaled(-self.field.one)

    def scaled(self, c):
        return HeckeElement(self.algebra, {w: x * c for w, x in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return hecke_multiply(self, other)
        return self.scaled(self.field(other))

    def __rmul__(self, other):
        return self.scaled(self.field(other))

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.algebra.n == other.algebra.n and not (self - other).coeffs

    def __hash__(self):
        return hash((self.n, len(self.coeffs)))

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, w):
        return self.coeffs.get(tuple(w), self.field.zero)

    def serialize(self):
        """(one-line permutation, scalar string) pairs in canonical order."""
        order = self.algebra.index
        return [
            (format_permutation(w), self.field.format(c))
            for w, c in sorted(self.coeffs.items(), key=lambda item: order[item[0]])
        ]

    def __repr__(self):
        return f'HeckeElement(n={self.n}, terms={len(self.coeffs)})'


class HeckeAlgebra:
    """
    H_{n,q} over one scalar backend.

    Holds the ordered basis and the generator rules; elements are
    ``HeckeElement`` instances referring back to this object.
    """

    def __init__(self, field, q, n):
        self.field = field
        self.q = q
        self.n = n
        self.permutations = all_permutations(n)
        self.index = {w: k for k, w in enumerate(self.permutations)}
        self.lengths = {w: length(w) for w in self.permutations}
        self.words = {w: reduced_word(w) for w in self.permutations}

    @property
    def dimension(self):
        return len(self.permutations)

    def element(self, coeffs):
        return HeckeElement(self, coeffs)

    def one(self):
        return self.basis(identity_permutation(self.n))

    def zero(self):
        return HeckeElement(self, {})

    def basis(self, w):
        return HeckeElement(self, {tuple(w): self.field.one})

    def generator(self, i):
        return self.basis(simple_transposition(i, self.n))

    def q_power(self, k):
        return self.field.power(self.q, k)

    # --- Generator actions on coefficient dicts ---

    def left_generator(self, i, coeffs):
        """T_i · x."""
        field, q = self.field, self.q
        out = {}
        for w, c in coeffs.items():
            u = tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)
            if w.index(i) < w.index(i + 1):
                out[u] = out.get(u, field.zero) + c
            else:
                out[w] = out.get(w, field.zero) + (q - field.one) * c
                out[u] = out.get(u, field.zero) + q * c
        return out

    def right_generator(self, i, coeffs):
        """x · T_i."""
        field, q = self.field, self.q
        out = {}
        for w, c in coeffs.items():
            u = list(w)
            u[i], u[i + 1] = u[i + 1], u[i]
            u = tuple(u)
            if w[i] < w[i + 1]:
                out[u] = out.get(u, field.zero) + c
            else:
                out[w] = out.get(w, field.zero) + (q - field.one) * c
                out[u] = out.get(u, field.zero) + q * c
        return out

    def left_basis_action(self, w, coeffs):
        """T_w · x through the reduced word of w."""
        for i in reversed(self.words[w]):
            coeffs = self.left_generator(i, coeffs)
        return coeffs

    def right_basis_action(self, w, coeffs):
        for i in self.words[w]:
            coeffs = self.right_generator(i, coeffs)
        return coeffs


def hecke_multiply(a, b):
    """
    Product a·b by the basis rule T_i·T_w.

    Raises:
        RankMismatch: if a and b live in different H_n.
    """
    a._check(b)
    algebra = a.algebra
    field = algebra.field
    out = {}
    if len(a.coeffs) <= len(b.coeffs):
        for u, c in a.coeffs.items():
            for w, x in algebra.left_basis_action(u, b.coeffs).items():
                out[w] = out.get(w, field.zero) + c * x
    else:
        for w, x in b.coeffs.items():
            for u, c in algebra.right_basis_action(w, a.coeffs).items():
                out[u] = out.get(u, field.zero) + c * x
    return HeckeElement(algebra, out)


def bilinear_form(a, b):
    """(T_u, T_w) = q^{l(u)} when w = u⁻¹, else 0."""
    a._check(b)
    algebra = a.algebra
    total = algebra.field.zero
    for u, c in a.coeffs.items():
        x = b.coeffs.get(inverse_permutation(u))
        if x is not None:
            total += c * x * algebra.q_power(algebra.lengths[u])
    return total


def casimir(algebra):
    """The n! pairs (q^{-l(w)} T_w, T_{w⁻¹})."""
    return [
        (algebra.basis(w).scaled(algebra.q_power(-algebra.lengths[w])),
         algebra.basis(inverse_permutation(w)))
        for w in algebra.permutations
    ]


def q_symmetrizer(algebra):
    """X_n = ([n]_q!)⁻¹ Σ_w T_w."""
    field = algebra.field
    norm = field.one / field.quantum_factorial(algebra.n, algebra.q)
    return algebra.element({w: norm for w in algebra.permutations})


def q_antisymmetrizer(algebra):
    """Y_n = ([n]_{q⁻¹}!)⁻¹ Σ_w (-q)^{-l(w)} T_w."""
    field = algebra.field
    q_inv = field.one / algebra.q
    norm = field.one / field.quantum_factorial(algebra.n, q_inv)
    minus_q = -algebra.q
    return algebra.element({
        w: norm * field.power(minus_q, -algebra.lengths[w]) for w in algebra.permutations
    })


def murphy_element(algebra, k):
    """L_k = Σ_{i<k} q^{i-k} T_{(i,k)} (0-based k; L_0 = 0)."""
    n = algebra.n
    return algebra.element({
        transposition(i, k, n): algebra.q_power(i - k) for i in range(k)
    })


def embed(a, b):
    """Standard embedding H_l ⊗ H_m → H_{l+m}, T_u⊗T_w ↦ T_{u×w}."""
    l, m = a.n, b.n
    target = registry.algebra(a.field, a.algebra.q, l + m)
    out = {}
    for u, x in a.coeffs.items():
        for w, y in b.coeffs.items():
            out[u + tuple(l + v for v in w)] = x * y
    return target.element(out)


# --- Block decomposition ---

@dataclass(frozen=True)
class BlockData:
    """
    Block λ of H_n.

    Fields:
        partition: λ ⊢ n
        dim: d_λ, the number of standard tableaux
        idempotent: F_λ, the central idempotent
        character: χ_λ(T_w) per permutation
        k: the form constant k_λ
        z_eigenvalue: d_λ/k_λ, the scalar by which z acts on the block
    """
    partition: Partition
    dim: int
    idempotent: HeckeElement
    character: dict
    k: object
    z_eigenvalue: object


def _murphy_apply(algebra, k, coeffs):
    """L_k · x on a coefficient dict."""
    field = algebra.field
    out = {}
    for i in range(k):
        w = transposition(i, k, algebra.n)
        weight = algebra.q_power(i - k)
        for u, c in algebra.left_basis_action(w, coeffs).items():
            out[u] = out.get(u, field.zero) + weight * c
    return out


def primitive_idempotents(algebra):
    """
    E_t for every standard tableau t of size n, by Jucys-Murphy branching.

    E_t = E_{t'} · Π_c (L_k - [c]) / ([c_t(k)] - [c]) where t' drops the
    largest entry k and c runs over the other addable contents of shape(t').

    Raises:
        BlockSeparationFailure: when two addable contents give equal [c]_q.
    """
    field, q = algebra.field, algebra.q
    layer = {(): {identity_permutation(algebra.n): field.one}}
    shapes = {(): Partition()}
    for k in range(algebra.n):
        next_layer, next_shapes = {}, {}
        for prefix, coeffs in layer.items():
            shape = shapes[prefix]
            addable = addable_cells(shape)
            for cell in addable:
                own = field.quantum_number(cell[1] - cell[0], q)
                current = coeffs
                for other in addable:
                    if other == cell:
                        continue
                    value = field.quantum_number(other[1] - other[0], q)
                    gap = own - value
                    if field.is_zero(gap):
                        raise BlockSeparationFailure(
                            f'Murphy eigenvalues collide at position {k} for contents '
                            f'{cell[1] - cell[0]} and {other[1] - other[0]}.'
                        )
                    moved = _murphy_apply(algebra, k, current) if k else {}
                    combined = exact.vector_add(moved, current, field, -value)
                    current = exact.vector_scale(combined, field.one / gap, field)
                tableau = prefix + (cell,)
                next_layer[tableau] = current
                next_shapes[tableau] = add_cell(shape, cell[0])
        layer, shapes = next_layer, next_shapes
    return {t: algebra.element(coeffs) for t, coeffs in layer.items()}


def regular_traces(algebra):
    """t_v = trace of left multiplication by T_v = Σ_u [T_u](T_v·T_u)."""
    field = algebra.field
    traces = {}
    for v in algebra.permutations:
        total = field.zero
        for u in algebra.permutations:
            total += algebra.left_basis_action(v, {u: field.one}).get(u, field.zero)
        traces[v] = total
    return traces


def central_z(algebra):
    """z = Σ_w q^{-l(w)} T_w T_{w⁻¹}."""
    field = algebra.field
    out = {}
    for w in algebra.permutations:
        weight = algebra.q_power(-algebra.lengths[w])
        product = algebra.left_basis_action(w, {inverse_permutation(w): field.one})
        for u, c in product.items():
            out[u] = out.get(u, field.zero) + weight * c
    return algebra.element(out)


def _build_blocks(algebra):
    field, q = algebra.field, algebra.q
    exact.field_check_parameter(field, q, algebra.n)
    logger.info('Building block decomposition of H_%d over %s', algebra.n, field.name)
    idempotents = primitive_idempotents(algebra)
    by_shape = {}
    for tableau, element in idempotents.items():
        shape = _grow_all(tableau)
        by_shape.setdefault(shape, []).append(element)

    traces = regular_traces(algebra)
    z = central_z(algebra)
    blocks = []
    for lam in partitions_of(algebra.n):
        members = by_shape.get(lam, [])
        d = count_standard_tableaux(lam)
        if len(members) != d:
            raise BlockSeparationFailure(f'Expected {d} tableaux of shape {lam}, found {len(members)}.')
        F = algebra.zero()
        for element in members:
            F = F + element
        zF = z * F
        pivot = next(iter(F.coeffs))
        eigenvalue = zF.coefficient(pivot) / F.coefficient(pivot)
        if zF != F.scaled(eigenvalue):
            raise IdentityViolation(algebra.n, 'z·F', 'scalar·F', what=f'z acting on block {lam}')
        k = field(d) / eigenvalue
        character = {}
        for w in algebra.permutations:
            moved = algebra.left_basis_action(w, F.coeffs)
            total = field.zero
            for v, c in moved.items():
                total += c * traces[v]
            character[w] = total / field(d)
        rebuilt = algebra.element({
            inverse_permutation(w): k * algebra.q_power(-algebra.lengths[w]) * character[w]
            for w in algebra.permutations
        })
        if rebuilt != F:
            raise IdentityViolation(algebra.n, 'F_λ', 'k_λ Σ q^{-l} χ T_{w⁻¹}', what=f'block {lam}')
        logger.debug('Block %s: d=%d k=%s', lam, d, field.format(k))
        blocks.append(BlockData(lam, d, F, character, k, eigenvalue))
    return tuple(blocks)


def _grow_all(tableau):
    shape = Partition()
    for cell in tableau:
        shape = add_cell(shape, cell[0])
    return shape


def pair_multiply(left, right, algebra):
    """Product in H^op ⊗ H of dicts {(u, w): c}: (a⊗b)(c⊗d) = (c·a)⊗(b·d)."""
    field = algebra.field
    out = {}
    for (u1, w1), x in left.items():
        for (u2, w2), y in right.items():
            first = algebra.left_basis_action(u2, {u1: field.one})
            second = algebra.left_basis_action(w1, {w2: field.one})
            for a, ca in first.items():
                for b, cb in second.items():
                    key = (a, b)
                    out[key] = out.get(key, field.zero) + x * y * ca * cb
    return {key: c for key, c in out.items() if not field.is_zero(c)}


def pi_element(block):
    """
    Π_λ = (F_λ⊗F_λ)·Casimir in H^op ⊗ H, as {(u, w): c}.

    No further factor is applied: the Casimir already carries the k_λ⁻¹ of
    the matrix-unit form k_λ⁻¹ Σ E^{ij}⊗E^{ji}, so Π_λ² = (d_λ/k_λ)Π_λ.
    """
    algebra = block.idempotent.algebra
    coeffs = block.idempotent.coeffs
    F = {(u, w): x * y for u, x in coeffs.items() for w, y in coeffs.items()}
    C = {
        (w, inverse_permutation(w)): algebra.q_power(-algebra.lengths[w])
        for w in algebra.permutations
    }
    return pair_multiply(F, C, algebra)


class HeckeRegistry:
    """
    Shared cache of algebras and block data.

    One instance per process; blocks are expensive and immutable, so every
    caller receives the same objects for the same (field, q, n).
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._algebras = {}
            cls._instance._blocks = {}
        return cls._instance

    def algebra(self, field, q, n):
        key = (field, q, n)
        if key not in self._algebras:
            self._algebras[key] = HeckeAlgebra(field, q, n)
        return self._algebras[key]

    def blocks(self, field, q, n):
        key = (field, q, n)
        if key not in self._blocks:
            self._blocks[key] = _build_blocks(self.algebra(field, q, n))
        return self._blocks[key]

    def clear(self):
        self._algebras.clear()
        self._blocks.clear()


# Module-level singleton instance
registry = HeckeRegistry()


def block_decomposition(field, q, n):
    """
    BlockData for every λ ⊢ n.

    Raises:
        DegenerateParameter: if [k]_q vanishes for some k ≤ n.
        BlockSeparationFailure: if Murphy eigenvalues collide.
    """
    return registry.blocks(field, q, n)


# --- Checks ---

def relations_check(algebra):
    """Quadratic, braid and commutation relations of the generators."""
    result = CheckResult('hecke_relations')
    n, q, one = algebra.n, algebra.q, algebra.one()
    T = [algebra.generator(i) for i in range(n - 1)]
    for i, Ti in enumerate(T):
        ok = Ti * Ti == Ti.scaled(q - algebra.field.one) + one.scaled(q)
        result.add(ok, degree=n, relation=f'T{i}^2 = (q-1)T{i} + q')
    for i in range(n - 2):
        ok = T[i] * T[i + 1] * T[i] == T[i + 1] * T[i] * T[i + 1]
        result.add(ok, degree=n, relation=f'T{i}T{i + 1}T{i} = T{i + 1}T{i}T{i + 1}')
    for i, j in itertools.combinations(range(n - 1), 2):
        if j - i > 1:
            result.add(T[i] * T[j] == T[j] * T[i], degree=n, relation=f'T{i}T{j} = T{j}T{i}')
    if not result.passed:
        result.failure = IdentityViolation(n, 'generators', 'relations', what='Hecke relations')
    return result


def form_check(algebra):
    """(a, b) = (b, a) and (a·T_i, b) = (a, T_i·b) on basis elements."""
    result = CheckResult('bilinear_form')
    n, field = algebra.n, algebra.field
    symmetric = all(
        bilinear_form(algebra.basis(u), algebra.basis(w)) == bilinear_form(algebra.basis(w), algebra.basis(u))
        for u in algebra.permutations for w in algebra.permutations
    )
    invariant = all(
        bilinear_form(algebra.element(algebra.right_generator(i, {u: field.one})), algebra.basis(w))
        == bilinear_form(algebra.basis(u), algebra.element(algebra.left_generator(i, {w: field.one})))
        for i in range(n - 1) for u in algebra.permutations for w in algebra.permutations
    )
    result.add(symmetric, degree=n, property='symmetric')
    result.add(invariant, degree=n, property='associative')
    if not result.passed:
        result.failure = IdentityViolation(n, 'form', 'symmetric and associative', what='bilinear form')
    return result


def symmetrizer_check(algebra):
    """X_n, Y_n idempotent with T_i X_n = q X_n and T_i Y_n = -Y_n."""
    result = CheckResult('symmetrizers')
    n, q = algebra.n, algebra.q
    X, Y = q_symmetrizer(algebra), q_antisymmetrizer(algebra)
    result.add(X * X == X, degree=n, element='X', property='idempotent')
    result.add(Y * Y == Y, degree=n, element='Y', property='idempotent')
    absorbs = all(
        algebra.generator(i) * X == X.scaled(q) and algebra.generator(i) * Y == -Y
        for i in range(n - 1)
    )
    result.add(absorbs, degree=n, element='X,Y', property='T_i eigenvalues')
    if not result.passed:
        result.failure = IdentityViolation(n, 'X_n, Y_n', 'idempotents', what='symmetrizers')
    return result


def block_check(field, q, n, pi_degree=3):
    """
    Central idempotents: completeness, orthogonality, centrality, Σ d_λ² = n!,
    z F_λ = (d_λ/k_λ) F_λ and (F_λ, 1) = d_λ k_λ. Π_λ² = (d_λ/k_λ) Π_λ for n ≤ pi_degree.
    """
    result = CheckResult('hecke_blocks')
    algebra = registry.algebra(field, q, n)
    blocks = block_decomposition(field, q, n)
    z = central_z(algebra)
    one = algebra.one()
    total = algebra.zero()
    for block in blocks:
        F = block.idempotent
        total = total + F
        central = all(algebra.generator(i) * F == F * algebra.generator(i) for i in range(n - 1))
        orthogonal = all(F * other.idempotent == (F if other is block else algebra.zero()) for other in blocks)
        ok = (central and orthogonal and z * F == F.scaled(block.z_eigenvalue)
              and bilinear_form(F, one) == field(block.dim) * block.k)
        values = dict(degree=n, partition=str(block.partition), d=block.dim,
                      k=field.format(block.k), z_eigenvalue=field.format(block.z_eigenvalue))
        if n <= pi_degree:
            pi = pi_element(block)
            scaled = {key: c * block.z_eigenvalue for key, c in pi.items()}
            values['pi_square'] = pair_multiply(pi, pi, algebra) == scaled
            ok = ok and values['pi_square']
        if ok:
            result.add(**values)
        else:
            result.fail(IdentityViolation(n, 'F_lambda', 'central idempotent', what=f'block {block.partition}'),
                        **values)
    dims = sum(block.dim ** 2 for block in blocks)
    values = dict(degree=n, partition='all', sum_d_squared=dims, complete=total == one)
    if dims == len(algebra.permutations) and total == one:
        result.add(**values)
    else:
        result.fail(IdentityViolation(n, dims, len(algebra.permutations), what='sum of d_lambda^2'), **values)
    return result


def _pair_sum(pairs, field):
    out = {}
    for a, b in pairs:
        for u, x in a.coeffs.items():
            for w, y in b.coeffs.items():
                out[(u, w)] = out.get((u, w), field.zero) + x * y
    return {key: c for key, c in out.items() if not field.is_zero(c)}


def casimir_check(algebra):
    """The Casimir element is central: Σ T_i a ⊗ b = Σ a ⊗ b T_i over its pairs (a, b)."""
    result = CheckResult('casimir')
    n, field = algebra.n, algebra.field
    pairs = casimir(algebra)
    for i in range(n - 1):
        Ti = algebra.generator(i)
        left = _pair_sum(((Ti * a, b) for a, b in pairs), field)
        right = _pair_sum(((a, b * Ti) for a, b in pairs), field)
        if left == right:
            result.add(degree=n, generator=f'T{i}')
        else:
            result.fail(IdentityViolation(n, 'T_i C', 'C T_i', what='Casimir centrality'),
                        degree=n, generator=f'T{i}')
    return result


def embedding_check(field, q, l, m):
    """The standard embedding keeps the unit and is multiplicative on generators."""
    result = CheckResult('embedding')
    left, right = registry.algebra(field, q, l), registry.algebra(field, q, m)
    ok = embed(left.one(), right.one()) == registry.algebra(field, q, l + m).one()
    for a in [left.generator(i) for i in range(l - 1)] + [left.one()]:
        for b in [right.generator(i) for i in range(m - 1)] + [right.one()]:
            ok = ok and embed(a * a, b * b) == embed(a, b) * embed(a, b)
    result.add(ok, degrees=[l, m])
    if not ok:
        result.failure = IdentityViolation(l + m, 'embed(ab)', 'embed(a)embed(b)', what='embedding')
    return result


def algebra_suite(field, q, n):
    """Every structural check of H_k for k ≤ n."""
    result = CheckResult('hecke_algebra')
    for k in range(1, n + 1):
        algebra = registry.algebra(field, q, k)
        for check in (relations_check(algebra), form_check(algebra), symmetrizer_check(algebra),
                      casimir_check(algebra), block_check(field, q, k)):
            result.extend(check)
    if n >= 2:
        result.extend(embedding_check(field, q, 1, n - 1))
    return result
