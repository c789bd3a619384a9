"""
Combinatorics of I(d, N): the Bruhat order on strictly increasing d-tuples,
lower intervals, Hasse diagrams with simple-reflection labels, stabilizer
data and standard monomial counts.

Words are plain tuples of ints, 1-based, e.g. ``(3, 6, 9)``.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations


def check_word(word, d, N):
    """Return ``word`` as a tuple, raising ValueError unless it lies in I(d, N)."""
    word = tuple(int(x) for x in word)
    if len(word) != d:
        raise ValueError(f"word {word} has length {len(word)}, expected {d}")
    if word and (word[0] < 1 or word[-1] > N):
        raise ValueError(f"word {word} has entries outside [1, {N}]")
    if any(a >= b for a, b in zip(word, word[1:])):
        raise ValueError(f"word {word} is not strictly increasing")
    return word


@dataclass(frozen=True)
class SchubertContext:
    """A Schubert variety X(w) in Gr(d, N)."""

    N: int
    d: int
    w: tuple

    def __post_init__(self):
        if self.N < 2:
            raise ValueError(f"N must be at least 2, got {self.N}")
        if not 1 <= self.d <= self.N - 1:
            raise ValueError(f"d must lie in [1, N-1], got d={self.d}, N={self.N}")
        object.__setattr__(self, "w", check_word(self.w, self.d, self.N))

    @classmethod
    def grassmannian(cls, N, d):
        """The whole Grassmannian, i.e. w = (N-d+1, ..., N)."""
        return cls(N, d, tuple(range(N - d + 1, N + 1)))

    def check(self, word):
        return check_word(word, self.d, self.N)

    @cached_property
    def interval(self):
        return lower_interval(self)

    @cached_property
    def _down_sets(self):
        nodes = self.interval
        index = {tau: k for k, tau in enumerate(nodes)}
        below = []
        for tau in nodes:
            below.append([index[sigma] for sigma in _words_below(tau)])
        return below


def bruhat_leq(a, b):
    """Bruhat order on I(d, N): componentwise comparison."""
    if len(a) != len(b):
        raise ValueError(f"cannot compare words of lengths {len(a)} and {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def bruhat_lt(a, b):
    return a != b and bruhat_leq(a, b)


def comparable(a, b):
    return bruhat_leq(a, b) or bruhat_leq(b, a)


def all_words(d, N):
    """All of I(d, N) in lexicographic order."""
    return list(combinations(range(1, N + 1), d))


def _words_below(top):
    """Every strictly increasing tuple componentwise below ``top``, lexicographic."""
    d = len(top)
    out = []
    prefix = []

    def extend(pos, low):
        if pos == d:
            out.append(tuple(prefix))
            return
        for x in range(low, top[pos] + 1):
            prefix.append(x)
            extend(pos + 1, x + 1)
            prefix.pop()

    extend(0, 1)
    return out


def lower_interval(ctx):
    """H_w = {tau : tau <= w}, lexicographically ordered, without duplicates."""
    return tuple(_words_below(ctx.w))


def reflect(word, m):
    """Apply the simple reflection s_m (swap m and m+1) to a word."""
    has_m = m in word
    has_next = (m + 1) in word
    if has_m == has_next:
        return tuple(word)
    if has_m:
        return tuple(m + 1 if x == m else x for x in word)
    return tuple(m if x == m + 1 else x for x in word)


@dataclass(frozen=True)
class HasseDiagram:
    """Covering relations of a lower interval; ``edges`` holds (lower, upper, m)."""

    nodes: tuple
    edges: tuple

    def lower_neighbors(self, node):
        return [lo for lo, up, _ in self.edges if up == node]

    def upper_neighbors(self, node):
        return [up for lo, up, _ in self.edges if lo == node]


def lower_covers(tau):
    """Words covered by ``tau``: decrement a single entry by one, with its label."""
    out = []
    for n, x in enumerate(tau):
        if x == 1 or (n > 0 and tau[n - 1] == x - 1):
            continue
        lower = tau[:n] + (x - 1,) + tau[n + 1:]
        out.append((lower, x - 1))
    return out


def hasse_diagram(ctx):
    nodes = ctx.interval
    edges = []
    for upper in nodes:
        for lower, label in lower_covers(upper):
            edges.append((lower, upper, label))
    edges.sort()
    return HasseDiagram(nodes, tuple(edges))


def stabilizer_set(ctx):
    """R_{Q_w}: the simple reflections s_m with s_m w <= w."""
    w = ctx.w
    members = set(w)
    hat = {x for x in w if x <= ctx.N - 1 and (x + 1) not in members}
    return frozenset(set(range(1, ctx.N)) - hat)


def count_std_monomials(ctx, r):
    """Number of standard monomials of degree r on X(w).

    Counts multichains w >= tau_1 >= ... >= tau_r by summing, level by level,
    over the down-set of every node.
    """
    if r < 1:
        raise ValueError("degree must be at least 1")
    below = ctx._down_sets
    counts = [1] * len(below)
    for _ in range(r - 1):
        counts = [sum(counts[j] for j in down) for down in below]
    return sum(counts)


def standard_monomials(ctx, r):
    """Yield every standard monomial of degree r on X(w) as a tuple of words.

    Factors are weakly decreasing; iteration is lexicographic-descending on
    the first factor, then recursively on the rest.
    """
    nodes = ctx.interval
    below = ctx._down_sets
    chain = []

    def extend(choices, left):
        for j in reversed(choices):
            chain.append(nodes[j])
            if left == 1:
                yield tuple(chain)
            else:
                yield from extend(below[j], left - 1)
            chain.pop()

    yield from extend(range(len(nodes)), r)
