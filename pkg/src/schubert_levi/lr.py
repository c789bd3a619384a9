"""
Littlewood-Richardson coefficients, skew Weyl module decompositions, and
dimensions and characters of (skew) Weyl modules of GL_n.
"""

from collections import Counter
from functools import lru_cache
from math import comb

from .intdet import det
from .tableaux import SkewShape, contains, enumerate_ssyt, partition


def _lr_fillings(outer, inner, content=None):
    """Yield the content of every LR filling of outer/inner.

    Rows are filled top to bottom, each row right to left, so the reading
    word is built in order and the lattice condition can be checked as we go.
    """
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    cells = [(i, j) for i in range(len(outer)) for j in range(outer[i] - 1, inner[i] - 1, -1)]
    values = {}
    counts = [0] * (len(outer) + 1)

    def fill(pos):
        if pos == len(cells):
            yield tuple(c for c in counts[1:] if c)
            return
        i, j = cells[pos]
        high = values.get((i, j + 1), len(outer))
        low = values[i - 1, j] + 1 if (i - 1, j) in values else 1
        # an entry v > 1 needs a spare v-1 already read
        for v in range(low, min(high, i + 1) + 1):
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            if content is not None and counts[v] >= (content[v - 1] if v <= len(content) else 0):
                continue
            values[i, j] = v
            counts[v] += 1
            yield from fill(pos + 1)
            counts[v] -= 1
            del values[i, j]

    yield from fill(0)


def lr_coefficient(lam, mu, nu):
    """c^lam_{mu nu} by counting LR tableaux of shape lam/mu and content nu."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if not contains(lam, mu) or sum(lam) != sum(mu) + sum(nu):
        return 0
    return sum(1 for _ in _lr_fillings(lam, mu, nu))


@lru_cache(maxsize=None)
def _decompose(outer, inner):
    return tuple(sorted(Counter(_lr_fillings(outer, inner)).items(), reverse=True))


def skew_weyl_decomposition(shape, max_rows=None):
    """Counter of straight shapes nu with multiplicity c^lam_{mu nu}.

    With ``max_rows`` set, drop the nu with more rows than that; their
    Weyl modules vanish over a space of that dimension.
    """
    return Counter({nu: c for nu, c in _decompose(shape.outer, shape.inner)
                    if max_rows is None or len(nu) <= max_rows})


def _h(k, n):
    """Complete homogeneous symmetric polynomial h_k at n ones."""
    if k < 0:
        return 0
    return comb(n + k - 1, k)


@lru_cache(maxsize=None)
def _dim_determinant(outer, inner, n):
    l = len(outer)
    inner = inner + (0,) * (l - len(inner))
    return det([[_h(outer[i] - inner[j] - i + j, n) for j in range(l)] for i in range(l)])


def weyl_dimension(shape, n, method="determinant"):
    """Number of semistandard fillings of ``shape`` with entries at most n.

    ``method="determinant"`` uses the Jacobi-Trudi determinant in the
    h_k(1^n) = C(n+k-1, k); ``method="enumerate"`` counts tableaux directly.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not isinstance(shape, SkewShape):
        shape = SkewShape(shape)
    if method == "determinant":
        return _dim_determinant(shape.outer, shape.inner, n)
    if method == "enumerate":
        return len(enumerate_ssyt(shape, n))
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def _character(shape, n):
    return tuple(sorted(Counter(t.content(n) for t in enumerate_ssyt(shape, n)).items()))


def weyl_character(shape, n):
    """Counter of content vectors over all SSYT with entries at most n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Counter(dict(_character(shape, n)))
