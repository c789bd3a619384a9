"""
Plucker straightening over the integers.

A monomial is a tuple of words; a standard expansion is a dict mapping
standard monomials (weakly decreasing factors) to nonzero int coefficients.
Signs of the two-row shuffle come from the Sylvester-Garnir alternation and
are checked against exact minor evaluation in the test suite.
"""

import random
import re
from collections import defaultdict
from functools import lru_cache
from itertools import combinations

from .grassmann import bruhat_leq
from .heads import linear_key
from .intdet import det


def is_standard(monomial):
    return all(bruhat_leq(b, a) for a, b in zip(monomial, monomial[1:]))


def _sort_sign(values):
    """Sign of the permutation sorting ``values``; 0 on a repeated value."""
    if len(set(values)) != len(values):
        return 0
    inversions = sum(1 for x, y in combinations(values, 2) if x > y)
    return -1 if inversions % 2 else 1


@lru_cache(maxsize=None)
def shuffle(tau, phi):
    """One shuffle step for the nonstandard pair p_tau p_phi.

    Returns a tuple of ``(sign, alpha, beta)`` with
    ``p_tau p_phi = sum sign * p_alpha p_beta``; terms with a repeated entry
    are dropped.
    """
    tau, phi = tuple(tau), tuple(phi)
    d = len(tau)
    if len(phi) != d:
        raise ValueError("shuffle needs two words of equal length")
    t = next((n for n in range(d) if tau[n] < phi[n]), None)
    if t is None:
        raise ValueError(f"p{tau} p{phi} is already standard")
    # pool = tau[0..t] + phi[t..d-1]; the tau part is strictly below the phi part
    pool = tau[:t + 1] + phi[t:]
    keep_tau, keep_phi = tau[t + 1:], phi[:t]
    size = t + 1
    terms = []
    for chosen in combinations(range(len(pool)), size):
        if chosen == tuple(range(size)):
            continue
        rest = [k for k in range(len(pool)) if k not in chosen]
        shuffle_sign = -1 if sum(c - n for n, c in enumerate(chosen)) % 2 else 1
        alpha_raw = tuple(pool[k] for k in chosen) + keep_tau
        beta_raw = keep_phi + tuple(pool[k] for k in rest)
        sa, sb = _sort_sign(alpha_raw), _sort_sign(beta_raw)
        if sa == 0 or sb == 0:
            continue
        # the full alternating sum vanishes; move everything but p_tau p_phi across
        coeff = -shuffle_sign * sa * sb
        terms.append((coeff, tuple(sorted(alpha_raw)), tuple(sorted(beta_raw))))
    return tuple(terms)


def _nonstandard_position(monomial, strategy):
    positions = range(len(monomial) - 1)
    if strategy == "rightmost":
        positions = reversed(positions)
    elif strategy != "leftmost":
        raise ValueError(f"unknown strategy {strategy!r}")
    for k in positions:
        if not bruhat_leq(monomial[k + 1], monomial[k]):
            return k
    return None


@lru_cache(maxsize=None)
def _straighten(monomial, strategy):
    k = _nonstandard_position(monomial, strategy)
    if k is None:
        return ((monomial, 1),)
    acc = defaultdict(int)
    for c, alpha, beta in shuffle(monomial[k], monomial[k + 1]):
        nxt = monomial[:k] + (alpha, beta) + monomial[k + 2:]
        for mono, coeff in _straighten(nxt, strategy):
            acc[mono] += c * coeff
    return tuple((mono, c) for mono, c in sorted(acc.items()) if c)


def straighten(monomial, strategy="leftmost"):
    """Expand a product of Plucker coordinates in standard monomials.

    Repeatedly shuffles the leftmost (or rightmost) adjacent nonstandard pair;
    each shuffle strictly raises one factor in Bruhat order, so this stops.
    """
    monomial = tuple(tuple(int(x) for x in f) for f in monomial)
    for f in monomial:
        if len(set(f)) != len(f):
            return {}
    monomial = tuple(tuple(sorted(f)) for f in monomial)
    if not monomial:
        raise ValueError("empty monomial")
    return dict(_straighten(monomial, strategy))


def restrict_to_schubert(expansion, w):
    """Drop the standard monomials that vanish on X(w)."""
    return {m: c for m, c in expansion.items() if bruhat_leq(m[0], w)}


def add_expansions(*expansions):
    acc = defaultdict(int)
    for e in expansions:
        for m, c in e.items():
            acc[m] += c
    return {m: c for m, c in sorted(acc.items()) if c}


def evaluate_plucker(tau, matrix):
    """The d x d minor of an N x d integer matrix on the rows listed in tau."""
    rows = [list(row) for row in matrix]
    d = len(tau)
    if any(len(row) != d for row in rows):
        raise ValueError(f"matrix must have {d} columns")
    if any(not 1 <= i <= len(rows) for i in tau):
        raise ValueError(f"row index out of range in {tau} for {len(rows)} rows")
    return det([rows[i - 1] for i in tau])


def plucker_table(matrix, words):
    return {tau: evaluate_plucker(tau, matrix) for tau in words}


def evaluate_monomial(monomial, matrix, table=None):
    value = 1
    for tau in monomial:
        value *= table[tau] if table is not None else evaluate_plucker(tau, matrix)
    return value


def evaluate_expansion(expansion, matrix, table=None):
    return sum(c * evaluate_monomial(m, matrix, table) for m, c in expansion.items())


def random_matrix(N, d, rng, spread=9):
    return [[rng.randint(-spread, spread) for _ in range(d)] for _ in range(N)]


def oracle_matches(monomial, expansion, N, trials=100, seed=0):
    """How many of ``trials`` seeded random matrices agree on both sides exactly."""
    rng = random.Random(seed)
    d = len(monomial[0])
    hits = 0
    for _ in range(trials):
        matrix = random_matrix(N, d, rng)
        if evaluate_monomial(monomial, matrix) == evaluate_expansion(expansion, matrix):
            hits += 1
    return hits


def sample_point_on_schubert(ctx, seed, spread=9):
    """An N x d integer point of the open cell B.[e_w] in X(w).

    b is upper unitriangular with entries drawn from [-spread, spread];
    the result is the columns of b indexed by w.  With spread=0, b = 1.
    """
    rng = random.Random(seed)
    N = ctx.N
    b = [[1 if i == j else (rng.randint(-spread, spread) if i < j else 0)
          for j in range(N)] for i in range(N)]
    return [[b[i][l - 1] for l in ctx.w] for i in range(N)]


def chevalley_action(i, monomial, direction, N=None):
    """Action of X_i (raise) or X_{-i} (lower) by the Leibniz rule.

    Returns the list of ``(monomial, 1)`` pairs, one for each factor that
    admits the substitution i -> i+1 (raise) or i+1 -> i (lower).
    """
    if i < 1 or (N is not None and i > N - 1):
        raise ValueError(f"generator index {i} out of range")
    if direction == "raise":
        src, dst = i, i + 1
    elif direction == "lower":
        src, dst = i + 1, i
    else:
        raise ValueError(f"direction must be 'raise' or 'lower', got {direction!r}")
    out = []
    for j, tau in enumerate(monomial):
        if src in tau and dst not in tau:
            moved = tuple(sorted(dst if x == src else x for x in tau))
            out.append((monomial[:j] + (moved,) + monomial[j + 1:], 1))
    return out


_FACTOR = re.compile(r"\(([^()]*)\)")


def parse_monomial(text):
    """Parse ``"(1,4)(2,3)"`` into ``((1, 4), (2, 3))``."""
    stripped = re.sub(r"\s+", "", text)
    factors = _FACTOR.findall(stripped)
    if not factors or "".join(f"({f})" for f in factors) != stripped:
        raise ValueError(f"cannot parse monomial {text!r}")
    try:
        return tuple(tuple(int(x) for x in f.split(",")) for f in factors)
    except ValueError:
        raise ValueError(f"cannot parse monomial {text!r}") from None


def format_word(tau):
    return "(" + ",".join(str(x) for x in tau) + ")"


def format_monomial(monomial):
    return "".join(format_word(tau) for tau in monomial)


def expansion_order(monomial):
    return tuple(linear_key(tau) for tau in monomial)


def format_expansion(expansion):
    """Render as ``+1·(2,4)(1,3) −1·(3,4)(1,2)``."""
    if not expansion:
        return "0"
    parts = []
    for m in sorted(expansion, key=expansion_order):
        c = expansion[m]
        sign = "+" if c > 0 else "−"
        parts.append(f"{sign}{abs(c)}·{format_monomial(m)}")
    return " ".join(parts)
