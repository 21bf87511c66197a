"""
Index bookkeeping for tensor powers.

A degree-n element of a quadratic algebra generated by W*⊗V is stored in
W*^{⊗n}⊗V^{⊗n}: the flat index is I·dV^n + J with I, J the lexicographic
multi-indices of the dual and plain factors. More generally a *layout*
lists the factor dimensions of one generator, e.g. (d,) for T(V) and
(dW, dV) for T(W*⊗V); degree n stores n digits per factor, factor-major.
"""
import itertools

from . import exact


def to_digits(index, base, length):
    digits = [0] * length
    for pos in range(length - 1, -1, -1):
        index, digits[pos] = divmod(index, base)
    return tuple(digits)


def from_digits(digits, base):
    flat = 0
    for d in digits:
        flat = flat * base + d
    return flat


def degree_dim(layout, n):
    dim = 1
    for c in layout:
        dim *= c ** n
    return dim


def split_index(index, layout, n):
    """Flat degree-n index -> one digit tuple per factor of the layout."""
    parts = []
    for c in reversed(layout):
        index, rem = divmod(index, c ** n)
        parts.append(to_digits(rem, c, n))
    return tuple(reversed(parts))


def join_index(parts, layout):
    flat = 0
    for c, digits in zip(layout, parts):
        flat = flat * c ** len(digits) + from_digits(digits, c)
    return flat


def place_relation(vector, layout, n, i):
    """
    Copies of a degree-2 vector sitting on tensor positions i, i+1 of degree n.

    Returns one vector per choice of the remaining n-2 digits of every factor,
    i.e. a spanning set of id^{⊗i}⊗span(vector)⊗id^{⊗(n-i-2)}.
    """
    local = [(split_index(k, layout, 2), v) for k, v in vector.items()]
    frees = [itertools.product(range(c), repeat=n - 2) for c in layout]
    placed = []
    for free in itertools.product(*frees):
        out = {}
        for parts, v in local:
            full = [f[:i] + p + f[i:] for f, p in zip(free, parts)]
            out[join_index(full, layout)] = v
        placed.append(out)
    return placed


def lift_local(M, d, n, i):
    """id_{d^i} ⊗ M ⊗ id_{d^{n-i-2}} for a d²×d² matrix M (0-based position i)."""
    field = exact.field_for_matrix(M)
    result = exact.kron(exact.identity(d ** i, field), M)
    return exact.kron(result, exact.identity(d ** (n - i - 2), field))


def shuffle_index(left, right, m, n, dW, dV):
    """((I_a, J_a), (I_b, J_b)) -> (I_a I_b, J_a J_b) for degrees m and n."""
    ia, ja = divmod(left, dV ** m)
    ib, jb = divmod(right, dV ** n)
    return (ia * dW ** n + ib) * dV ** (m + n) + ja * dV ** n + jb


def shuffled_tensor(a, b, m, n, dW, dV, field):
    """a⊗b regrouped into W*^{⊗(m+n)}⊗V^{⊗(m+n)}."""
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            value = x * y
            if not field.is_zero(value):
                out[shuffle_index(i, j, m, n, dW, dV)] = value
    return out
