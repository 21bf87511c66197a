"""
Hecke operators on V⊗V and their lifts to tensor powers.

The matrix of R has column i·d+j equal to R(x_i⊗x_j), so entry
[k·d+l][i·d+j] is the coefficient R^{kl}_{ij}.
"""
import logging
from functools import cached_property

from . import exact, tensors
from .hecke_algebra import all_permutations, length, registry, simple_transposition
from ..exceptions import (
    DegenerateParameter,
    HeckeEquationViolation,
    NotClosed,
    ParameterMismatch,
    RankMismatch,
    YangBaxterViolation,
)

logger = logging.getLogger(__name__)

RHO, SIGMA, TAU = 'rho', 'sigma', 'tau'


class HeckeOp:
    """
    A Hecke operator R on V⊗V with eigenvalue parameter q.

    Fields:
        dim: d = dim V
        q: the Hecke eigenvalue, (R+1)(R-q) = 0
        matrix: the d²×d² DomainMatrix of R
        label: a short display name
        family: constructor metadata used to rebuild the operator at another
            parameter, or None for operators given only by entries
    """

    def __init__(self, dim, q, matrix, field, label='custom', family=None):
        if matrix.shape != (dim * dim, dim * dim):
            raise RankMismatch(f'R must be {dim * dim}×{dim * dim}, got {matrix.shape}.')
        self.dim = dim
        self.q = q
        self.matrix = matrix
        self.field = field
        self.label = label
        self.family = family
        self._lifts = {}
        self.key = (
            field, dim, q,
            frozenset(
                (i, j, v) for i, row in exact.entries(matrix).items() for j, v in row.items()
                if not field.is_zero(v)
            ),
        )

    def __eq__(self, other):
        return isinstance(other, HeckeOp) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f'HeckeOp({self.label}, d={self.dim}, q={self.field.format(self.q)})'

    def entry(self, i, j, k, l):
        """R^{kl}_{ij}."""
        d = self.dim
        return exact.entries(self.matrix).get(k * d + l, {}).get(i * d + j, self.field.zero)

    def nonzero_entries(self):
        """[(i, j, k, l, value)] sorted by (i, j, k, l)."""
        d = self.dim
        found = []
        for row, cols in exact.entries(self.matrix).items():
            k, l = divmod(row, d)
            for col, v in cols.items():
                if not self.field.is_zero(v):
                    i, j = divmod(col, d)
                    found.append((i, j, k, l, v))
        return sorted(found, key=lambda e: e[:4])

    # --- Derived operators ---

    @cached_property
    def inverse_matrix(self):
        return exact.inverse(self.matrix)

    def prime(self):
        """R′ = -q R⁻¹, again a Hecke operator with parameter q."""
        return HeckeOp(
            self.dim, self.q, exact.scale(self.inverse_matrix, -self.q), self.field,
            label=f"{self.label}'",
        )

    def hat(self):
        """R̂ = P R P with P the flip of V⊗V."""
        P = flip_matrix(self.dim, self.field)
        return HeckeOp(
            self.dim, self.q, exact.matmul(exact.matmul(P, self.matrix), P), self.field,
            label=f'{self.label}^',
        )

    def closure_matrix(self):
        """R^#: entry [(b, k), (i, j)] = R^{ib}_{jk}."""
        d = self.dim
        rows = {}
        for (i, j, k, l, v) in self.nonzero_entries():
            # R^{kl}_{ij} lands at row (l, j) and column (k, i)
            rows.setdefault(l * d + j, {})[k * d + i] = v
        return exact.matrix(rows, (d * d, d * d), self.field)

    # --- Lifts ---

    def local(self, n, i):
        """R_i = id^{⊗i}⊗R⊗id^{⊗(n-i-2)}, 0-based i."""
        return tensors.lift_local(self.matrix, self.dim, n, i)

    def lifts(self, n, kind=RHO):
        """
        Matrices of T_w for every w ∈ S_n under ρ, σ or τ.

        ρ(T_w) is the product of R_i over a reduced word; σ(T_w) and τ(T_w)
        are the transposes of ρ′(T_w) and ρ(T_w), with ρ′ the lift of R′.
        """
        key = (n, kind)
        if key in self._lifts:
            return self._lifts[key]
        if kind == RHO:
            result = self._rho_lifts(n)
        elif kind == SIGMA:
            result = {w: exact.transpose(M) for w, M in self.prime()._rho_lifts(n).items()}
        elif kind == TAU:
            result = {w: exact.transpose(M) for w, M in self.lifts(n, RHO).items()}
        else:
            raise ValueError(f'Unknown representation kind "{kind}".')
        self._lifts[key] = result
        return result

    def _rho_lifts(self, n):
        key = (n, RHO)
        if key in self._lifts:
            return self._lifts[key]
        field = self.field
        size = self.dim ** n
        generators = [self.local(n, i) for i in range(n - 1)]
        result = {}
        for w in all_permutations(n):
            if length(w) == 0:
                result[w] = exact.identity(size, field)
                continue
            # w = w'·s_i with a right descent at i
            i = next(i for i in range(n - 1) if w[i] > w[i + 1])
            shorter = list(w)
            shorter[i], shorter[i + 1] = shorter[i + 1], shorter[i]
            result[w] = exact.matmul(result[tuple(shorter)], generators[i])
        self._lifts[key] = result
        logger.debug('Lifted %s to degree %d (%d matrices)', self.label, n, len(result))
        return result

    def lift(self, n, w, kind=RHO):
        if len(w) != n:
            raise RankMismatch(f'Permutation {w} is not in S_{n}.')
        return self.lifts(n, kind)[tuple(w)]

    def represent(self, element, kind=RHO):
        """Image of a Hecke element Σ c_w T_w under ρ, σ or τ."""
        if element.algebra.q != self.q:
            raise ParameterMismatch('Hecke element and operator use different parameters.')
        n = element.n
        lifts = self.lifts(n, kind)
        size = self.dim ** n
        acc = {}
        for w, c in element.coeffs.items():
            for i, row in exact.entries(lifts[w]).items():
                out = acc.setdefault(i, {})
                for j, v in row.items():
                    out[j] = out.get(j, self.field.zero) + c * v
        return exact.matrix(acc, (size, size), self.field)

    def blocks(self, n):
        return registry.blocks(self.field, self.q, n)

    def hecke_algebra(self, n):
        return registry.algebra(self.field, self.q, n)


def flip_matrix(d, field):
    return exact.matrix({j * d + i: {i * d + j: field.one} for i in range(d) for j in range(d)}, (d * d, d * d), field)


def from_entries(dim, q, entries, field, label='custom', family=None):
    """
    Build a HeckeOp from (i, j, k, l, value) tuples; repeated entries add up.

    Raises:
        DegenerateParameter: if q is zero.
    """
    if field.is_zero(q):
        raise DegenerateParameter(0)
    rows = {}
    for i, j, k, l, v in entries:
        row = rows.setdefault(k * dim + l, {})
        col = i * dim + j
        row[col] = row.get(col, field.zero) + v
    return HeckeOp(dim, q, exact.matrix(rows, (dim * dim, dim * dim), field), field, label, family)


# --- Constructors ---

def make_super(r, s, p, field, label=None):
    """
    The super operator R_{r|s} with Hecke eigenvalue q = p².

    Index i is even for i < r and odd otherwise; sgn = (-1)^{|i||j|}.
    """
    if field.is_zero(p):
        raise DegenerateParameter(0)
    d = r + s
    q = p * p
    exact.field_check_parameter(field, q, 2)
    one = field.one

    def parity(i):
        return 0 if i < r else 1

    entries = []
    for i in range(d):
        entries.append((i, i, i, i, q if parity(i) == 0 else -one))
        for j in range(d):
            if i == j:
                continue
            sign = -one if parity(i) and parity(j) else one
            if i < j:
                entries.append((i, j, j, i, sign * p))
            else:
                entries.append((i, j, i, j, q - one))
                entries.append((i, j, j, i, sign * p))
    family = {'name': 'super', 'r': r, 's': s, 'p': field.format(p)}
    return from_entries(d, q, entries, field, label or f'super({r}|{s})', family)


def make_standard(d, p, field, label=None):
    """Drinfeld-Jimbo operator R_d; q = p²."""
    op = make_super(d, 0, p, field, label or f'standard({d})')
    op.family = {'name': 'standard', 'dim': d, 'p': field.format(p)}
    return op


def make_superflip(r, s, field, label=None):
    op = make_super(r, s, field.one, field, label or f'superflip({r}|{s})')
    op.family = {'name': 'superflip', 'r': r, 's': s}
    return op


def make_flip(d, field, label=None):
    return HeckeOp(
        d, field.one, flip_matrix(d, field), field,
        label or f'flip({d})', {'name': 'flip', 'dim': d},
    )


def rebuild(family, field, p=None):
    """Re-run a family constructor, optionally at a new parameter p."""
    name = family['name']
    if name in ('flip', 'superflip'):
        if p is not None and p != field.one:
            raise ParameterMismatch(f'The {name} family only exists at q = 1.')
        if name == 'flip':
            return make_flip(int(family['dim']), field)
        return make_superflip(int(family['r']), int(family['s']), field)
    p = p if p is not None else field.parse(family['p'])
    if name == 'standard':
        return make_standard(int(family['dim']), p, field)
    if name == 'super':
        return make_super(int(family['r']), int(family['s']), p, field)
    raise ParameterMismatch(f'Unknown operator family "{name}".')


# --- Checks ---

def yang_baxter_holds(op):
    R1 = op.local(3, 0)
    R2 = op.local(3, 1)
    left = exact.matmul(exact.matmul(R1, R2), R1)
    right = exact.matmul(exact.matmul(R2, R1), R2)
    return exact.matrices_equal(left, right)


def hecke_equation_holds(op):
    field = op.field
    I = exact.identity(op.dim ** 2, field)
    plus = exact.add(op.matrix, I)
    minus = exact.sub(op.matrix, exact.scale(I, op.q))
    return exact.is_zero_matrix(exact.matmul(plus, minus))


def check_operator(op):
    """
    Validate the parameter, then the Yang-Baxter and Hecke equations.

    Raises:
        DegenerateParameter: if q = 0 or [2]_q = 0.
        YangBaxterViolation: if R1R2R1 ≠ R2R1R2.
        HeckeEquationViolation: if (R+1)(R-q) ≠ 0.
    """
    exact.field_check_parameter(op.field, op.q, 2)
    if not yang_baxter_holds(op):
        raise YangBaxterViolation(f'{op.label}: R1R2R1 != R2R1R2.')
    if not hecke_equation_holds(op):
        raise HeckeEquationViolation(f'{op.label}: (R+1)(R-q) != 0.')


def check_hecke_symmetry(op):
    """
    Validate R and test the closure operator R^# for invertibility.

    Raises:
        NotClosed: if R^# is singular.
    """
    check_operator(op)
    sharp = op.closure_matrix()
    if exact.rank(sharp) != op.dim ** 2:
        raise NotClosed(f'{op.label}: the closure operator R# is singular.')


def check_lift_independence(op, n):
    """ρ(T_w) agrees over every reduced word of every w ∈ S_n."""
    lifts = op.lifts(n, RHO)
    generators = [op.local(n, i) for i in range(n - 1)]
    for w, M in lifts.items():
        for word in _all_reduced_words(w):
            product = exact.identity(op.dim ** n, op.field)
            for i in word:
                product = exact.matmul(product, generators[i])
            if not exact.matrices_equal(product, M):
                return False
    return True


def _all_reduced_words(w):
    if length(w) == 0:
        return [()]
    words = []
    n = len(w)
    for i in range(n - 1):
        if w[i] > w[i + 1]:
            shorter = list(w)
            shorter[i], shorter[i + 1] = shorter[i + 1], shorter[i]
            words.extend(word + (i,) for word in _all_reduced_words(tuple(shorter)))
    return words


def same_parameter(*ops):
    first = ops[0]
    for op in ops[1:]:
        if op.field != first.field or op.q != first.q:
            raise ParameterMismatch(f'{first!r} and {op!r} use different parameters.')


def generator_matrix(op, n, i):
    """ρ(T_i) on V^{⊗n}."""
    return op.lifts(n, RHO)[simple_transposition(i, n)]
