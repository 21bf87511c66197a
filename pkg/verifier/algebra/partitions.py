"""
Partition and Young-diagram combinatorics.

Partitions are tuples of weakly decreasing positive parts. Cells are
(row, column) pairs, 0-indexed, and the content of a cell is column - row.
"""
import itertools
import logging
from functools import lru_cache
from math import factorial

import sympy

from ..exceptions import ScalarParseError

logger = logging.getLogger(__name__)


class Partition(tuple):
    """
    A partition λ = (λ_1 ≥ λ_2 ≥ ... > 0); the empty partition is allowed.

    Validation rules:
        - parts are positive integers
        - parts are weakly decreasing
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts if int(p) != 0)
        if any(p < 0 for p in parts):
            raise ValueError(f'Negative part in {parts}.')
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f'Parts of {parts} are not weakly decreasing.')
        return super().__new__(cls, parts)

    @property
    def weight(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def part(self, i):
        """λ_i with 1-based i; zero past the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self):
        return conjugate(self)

    def cells(self):
        return [(r, c) for r, row in enumerate(self) for c in range(row)]

    def contains(self, other):
        """Diagram containment self ⊇ other."""
        return len(other) <= len(self) and all(o <= s for s, o in zip(self, other))

    def __repr__(self):
        return f'Partition({format_partition(self)})'

    def __str__(self):
        return format_partition(self)


def format_partition(lam):
    return ','.join(str(p) for p in lam) if lam else '-'


def parse_partition(text):
    text = str(text).strip()
    if text in ('-', '', '()'):
        return Partition()
    try:
        return Partition(int(p) for p in text.strip('()').split(',') if p.strip())
    except ValueError as exc:
        raise ScalarParseError(f'Cannot parse partition "{text}": {exc}') from exc


def conjugate(lam):
    """λ′_i = #{j : λ_j ≥ i}."""
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > c) for c in range(lam[0]))


@lru_cache(maxsize=None)
def partitions_of(n):
    """All partitions of n in reverse lexicographic order, (n) first."""
    if n == 0:
        return (Partition(),)

    def build(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in build(remaining - part, part):
                yield (part,) + rest

    return tuple(Partition(p) for p in build(n, n))


def partitions_up_to(bound):
    return [lam for n in range(bound + 1) for lam in partitions_of(n)]


def hook_length(lam, cell):
    r, c = cell
    arm = lam[r] - c - 1
    leg = sum(1 for i in range(r + 1, len(lam)) if lam[i] > c)
    return arm + leg + 1


def count_standard_tableaux(lam):
    """d_λ by the hook-length formula."""
    lam = Partition(lam)
    hooks = 1
    for cell in lam.cells():
        hooks *= hook_length(lam, cell)
    return factorial(lam.weight) // hooks


def addable_cells(lam):
    """Cells (row, column) that can be added to λ, top row first."""
    lam = Partition(lam)
    cells = []
    for r in range(len(lam) + 1):
        row = lam.part(r + 1)
        if r == 0 or row < lam.part(r):
            cells.append((r, row))
    return cells


def add_cell(lam, row):
    parts = list(lam) + [0]
    parts[row] += 1
    return Partition(parts)


@lru_cache(maxsize=None)
def standard_tableaux(lam):
    """
    Enumerate standard tableaux of shape λ as tuples of cells.

    The k-th entry of a tableau is the cell holding k+1; fillings grow
    along rows and columns by construction.
    """
    lam = Partition(lam)
    if not lam:
        return ((),)
    found = []
    for r in range(len(lam)):
        c = lam[r] - 1
        below = lam[r + 1] if r + 1 < len(lam) else 0
        if below <= c:
            smaller = list(lam)
            smaller[r] -= 1
            for t in standard_tableaux(Partition(smaller)):
                found.append(t + ((r, c),))
    return tuple(found)


def content_vector(tableau):
    return tuple(c - r for r, c in tableau)


def beta(sigma, k):
    """Number of boxes in the first k columns: σ′_1 + ... + σ′_k."""
    if k < 1:
        raise ValueError('beta needs k >= 1.')
    return sum(min(p, k) for p in sigma)


def beta_geq(tau, sigma):
    """τ ≥ σ in the β order: β_k(τ) ≥ β_k(σ) for every k."""
    top = max(tau[0] if tau else 0, sigma[0] if sigma else 0, 1)
    return all(beta(tau, k) >= beta(sigma, k) for k in range(1, top + 1))


def gamma_rs_contains(lam, r, s):
    """λ ∈ Γ_{r,s} iff λ_{r+1} ≤ s."""
    return Partition(lam).part(r + 1) <= s


def rectangle(r, s):
    """The minimal partition outside Γ_{r,s}: r+1 rows of length s+1."""
    return Partition((s + 1,) * (r + 1))


def dideal_closure(partitions, weight_bound):
    """⟨J⟩ restricted to weights ≤ bound: every τ containing some σ ∈ J."""
    generators = [Partition(p) for p in partitions]
    return frozenset(
        tau for tau in partitions_up_to(weight_bound)
        if any(tau.contains(sigma) for sigma in generators)
    )


def is_dideal(partitions, weight_bound):
    members = frozenset(Partition(p) for p in partitions)
    return dideal_closure(members, weight_bound) == frozenset(
        p for p in members if p.weight <= weight_bound
    )


# --- Littlewood-Richardson ---

def _skew_cells(outer, inner):
    """Cells of γ/λ in reading order: rows top to bottom, right to left."""
    cells = []
    for r, row in enumerate(outer):
        start = inner[r] if r < len(inner) else 0
        cells.extend((r, c) for c in range(row - 1, start - 1, -1))
    return cells


def lr_coefficient(lam, mu, gamma):
    """
    c^γ_{λμ}: LR skew tableaux of shape γ/λ and content μ.

    Rows weakly increase, columns strictly increase and the reverse reading
    word is a lattice word; cells are filled in reading order with backtracking.
    """
    lam, mu, gamma = Partition(lam), Partition(mu), Partition(gamma)
    if gamma.weight != lam.weight + mu.weight or not gamma.contains(lam):
        return 0
    if not mu:
        return 1
    cells = _skew_cells(gamma, lam)
    filling = {}
    counts = [0] * len(mu)

    def fits(cell, label):
        r, c = cell
        right = filling.get((r, c + 1))
        if right is not None and right < label:
            return False
        up = filling.get((r - 1, c))
        if up is not None and up >= label:
            return False
        if r > 0 and up is None and c >= (lam[r - 1] if r - 1 < len(lam) else 0):
            return False
        return True

    def search(pos):
        if pos == len(cells):
            return 1
        total = 0
        cell = cells[pos]
        for label in range(len(mu)):
            if counts[label] >= mu[label]:
                continue
            if label > 0 and counts[label] + 1 > counts[label - 1]:
                continue
            if not fits(cell, label):
                continue
            filling[cell] = label
            counts[label] += 1
            total += search(pos + 1)
            counts[label] -= 1
            del filling[cell]
        return total

    return search(0)


def lr_coefficient_oracle(lam, mu, gamma):
    """
    c^γ_{λμ} read off a product of Schur polynomials.

    Uses the bialternant formula in ℓ(λ)+ℓ(μ) variables: the coefficient of
    x^{γ+δ} in a_δ·s_λ·s_μ.
    """
    lam, mu, gamma = Partition(lam), Partition(mu), Partition(gamma)
    if gamma.weight != lam.weight + mu.weight:
        return 0
    nvars = max(len(lam) + len(mu), len(gamma), 1)
    if len(gamma) > nvars:
        return 0
    xs = sympy.symbols(f'x0:{nvars}')
    delta = [nvars - 1 - i for i in range(nvars)]

    def alternant(exponents):
        return sympy.Matrix(nvars, nvars, lambda i, j: xs[j] ** exponents[i]).det()

    def padded(p):
        return list(p) + [0] * (nvars - len(p))

    a_delta = sympy.Poly(alternant(delta), *xs)
    s_lam = sympy.div(sympy.Poly(alternant([a + b for a, b in zip(padded(lam), delta)]), *xs), a_delta)[0]
    s_mu = sympy.div(sympy.Poly(alternant([a + b for a, b in zip(padded(mu), delta)]), *xs), a_delta)[0]
    product = a_delta * s_lam * s_mu
    target = tuple(a + b for a, b in zip(padded(gamma), delta))
    return int(product.as_dict().get(target, 0))


def lr_support(lam, mu):
    """C_{λ,μ}: all γ with c^γ_{λμ} ≠ 0, mapped to their coefficients."""
    lam, mu = Partition(lam), Partition(mu)
    found = {}
    for gamma in partitions_of(lam.weight + mu.weight):
        c = lr_coefficient(lam, mu, gamma)
        if c:
            found[gamma] = c
    return found


def pieri_column_set(lam, k):
    """C_{λ,(1^k)}: the γ obtained from λ by adding a vertical strip of k cells."""
    column = Partition((1,) * k)
    return frozenset(gamma for gamma, c in lr_support(lam, column).items() if c == 1)


def vertical_strips(lam, k):
    """Direct enumeration of γ ⊇ λ with γ_i - λ_i ≤ 1 and |γ/λ| = k."""
    lam = Partition(lam)
    rows = len(lam) + k
    base = list(lam) + [0] * k
    found = set()
    for chosen in itertools.combinations(range(rows), k):
        parts = list(base)
        for r in chosen:
            parts[r] += 1
        if all(parts[i] >= parts[i + 1] for i in range(rows - 1)):
            found.add(Partition(parts))
    return frozenset(found)
