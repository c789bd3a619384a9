"""
Blocks of a block-diagonal Levi subgroup L = GL(N_1) x ... x GL(N_s) inside
the stabilizer of X(w), heads of type L, the head-of map, the induced
partition of the Hasse diagram, and the lexicographic order on head
sequences.
"""

import enum
from dataclasses import dataclass
from functools import cached_property

from .grassmann import (SchubertContext, bruhat_leq, hasse_diagram,
                        stabilizer_set)


class InvariantError(RuntimeError):
    """An internal consistency check failed."""


@dataclass(frozen=True)
class LeviContext:
    """A Schubert context together with R_Q, a subset of R_{Q_w}."""

    ctx: SchubertContext
    r_q: frozenset

    def __post_init__(self):
        r_q = frozenset(int(m) for m in self.r_q)
        object.__setattr__(self, "r_q", r_q)
        allowed = stabilizer_set(self.ctx)
        bad = sorted(r_q - allowed)
        if bad:
            raise ValueError(
                f"index {bad[0]} of R_Q is not in the stabilizer set "
                f"{sorted(allowed)} of w={self.ctx.w}")

    @classmethod
    def stabilizer(cls, ctx):
        """The Levi L_w of the full stabilizer Q_w."""
        return cls(ctx, stabilizer_set(ctx))

    @classmethod
    def from_block_sizes(cls, ctx, sizes):
        if sum(sizes) != ctx.N or any(s < 1 for s in sizes):
            raise ValueError(f"block sizes {list(sizes)} do not partition N={ctx.N}")
        cuts, total = set(), 0
        for s in sizes[:-1]:
            total += s
            cuts.add(total)
        return cls(ctx, frozenset(range(1, ctx.N)) - cuts)

    @property
    def N(self):
        return self.ctx.N

    @property
    def d(self):
        return self.ctx.d

    @property
    def w(self):
        return self.ctx.w

    @cached_property
    def cut_points(self):
        """(a_0, a_1, ..., a_s) with a_0 = 0 and a_s = N."""
        inner = sorted(set(range(1, self.N)) - self.r_q)
        return (0, *inner, self.N)

    @cached_property
    def r_hat(self):
        return frozenset(self.cut_points[1:-1])

    @cached_property
    def blocks(self):
        a = self.cut_points
        return tuple(tuple(range(a[k] + 1, a[k + 1] + 1)) for k in range(len(a) - 1))

    @cached_property
    def sizes(self):
        a = self.cut_points
        return tuple(a[k + 1] - a[k] for k in range(len(a) - 1))

    @property
    def block_count(self):
        return len(self.blocks)

    @cached_property
    def block_index(self):
        """Lookup table: ``block_index[v]`` is the 1-based block holding value v."""
        table = [0] * (self.N + 1)
        for k, block in enumerate(self.blocks, start=1):
            for v in block:
                table[v] = k
        return tuple(table)

    @cached_property
    def head_map(self):
        return {tau: _top_pack(tau, self) for tau in self.ctx.interval}

    @cached_property
    def heads(self):
        return tuple(tau for tau in self.ctx.interval if is_head(tau, self))


def _in_range(tau, levi):
    tau = levi.ctx.check(tau)
    if not bruhat_leq(tau, levi.w):
        raise ValueError(f"{tau} is not below w={levi.w}")
    return tau


def class_of(tau, levi):
    """The block index of every entry of tau."""
    tau = _in_range(tau, levi)
    index = levi.block_index
    return tuple(index[x] for x in tau)


def is_head(tau, levi):
    """Is tau top-packed inside every block it meets?"""
    index = levi.block_index
    members = set(tau)
    for x in tau:
        k = index[x]
        if x < levi.cut_points[k] and (x + 1) not in members:
            return False
    return True


def heads(levi):
    return levi.heads


def _top_pack(tau, levi):
    counts = [0] * (levi.block_count + 1)
    for x in tau:
        counts[levi.block_index[x]] += 1
    out = []
    for k in range(1, levi.block_count + 1):
        top = levi.cut_points[k]
        out.extend(range(top - counts[k] + 1, top + 1))
    return tuple(out)


def head_of(tau, levi):
    """The head sharing tau's class: per block, the top m_k values."""
    cached = levi.head_map.get(tuple(tau))
    if cached is not None:
        return cached
    return _top_pack(_in_range(tau, levi), levi)


def head_sequence(monomial, levi):
    table = levi.head_map
    return tuple(table[tau] for tau in monomial)


def hasse_partition(levi):
    """Components of the Hasse diagram after cutting edges labelled by R-hat.

    Returns a dict from each component's unique Bruhat-maximal element (a
    head) to the lexicographically sorted tuple of its members.  Components
    are found by graph search, independently of ``head_of``.
    """
    diagram = hasse_diagram(levi.ctx)
    cut = levi.r_hat
    parent = {tau: tau for tau in diagram.nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for lower, upper, label in diagram.edges:
        if label in cut:
            continue
        ra, rb = find(lower), find(upper)
        if ra != rb:
            parent[ra] = rb

    groups = {}
    for tau in diagram.nodes:
        groups.setdefault(find(tau), []).append(tau)

    out = {}
    for members in groups.values():
        maxima = [m for m in members
                  if not any(o != m and bruhat_leq(m, o) for o in members)]
        if len(maxima) != 1 or not is_head(maxima[0], levi):
            raise InvariantError(f"component {members} has maxima {maxima}")
        out[maxima[0]] = tuple(sorted(members))
    return dict(sorted(out.items()))


def linear_key(tau):
    """A linear extension of the Bruhat order: entry sum, then entries."""
    return (sum(tau), tuple(tau))


def standard_head_sequences(levi, r):
    """All theta_1 >= ... >= theta_r among the heads.

    Enumerated so that a sequence that is >_str another comes first: each
    position runs through heads in descending ``linear_key`` order.
    """
    if r < 1:
        raise ValueError("degree must be at least 1")
    ordered = sorted(levi.heads, key=linear_key, reverse=True)
    down = {theta: [phi for phi in ordered if bruhat_leq(phi, theta)] for theta in ordered}
    out = []
    seq = []

    def extend(choices, left):
        for theta in choices:
            seq.append(theta)
            if left == 1:
                out.append(tuple(seq))
            else:
                extend(down[theta], left - 1)
            seq.pop()

    extend(ordered, r)
    return out


class Order(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def str_compare(a, b):
    """Compare two head sequences lexicographically, Bruhat order per position."""
    if len(a) != len(b):
        raise ValueError(f"sequences of lengths {len(a)} and {len(b)} are not comparable")
    for x, y in zip(a, b):
        if x == y:
            continue
        if bruhat_leq(y, x):
            return Order.GREATER
        if bruhat_leq(x, y):
            return Order.LESS
        return Order.INCOMPARABLE
    return Order.EQUAL


def str_geq(a, b):
    return str_compare(a, b) in (Order.GREATER, Order.EQUAL)
