"""
Straightening Plucker monomials, and why the answer can be trusted.

Every expansion printed here is checked against exact integer minors of
random matrices. At the end we watch head sequences only move up under
straightening, which is what makes the head filtration work.

    python demos/02_straightening.py
"""

import random

from schubert_levi import LeviContext, SchubertContext, head_sequence, straighten
from schubert_levi.straightening import (evaluate_expansion, evaluate_monomial, format_expansion,
                                         format_monomial, random_matrix, restrict_to_schubert,
                                         sample_point_on_schubert, shuffle)

# The classical three-term relation in Gr(2,4).
m = ((1, 4), (2, 3))
print(format_monomial(m), "=", format_expansion(straighten(m)))
print("shuffle terms:", shuffle((1, 4), (2, 3)))

rng = random.Random(7)
for monomial in [((1, 4), (2, 3)), ((1, 5), (2, 4), (3, 4)), ((1, 2, 6), (3, 4, 5))]:
    N = max(max(t) for t in monomial)
    d = len(monomial[0])
    expansion = straighten(monomial)
    hits = sum(evaluate_monomial(monomial, M) == evaluate_expansion(expansion, M)
               for M in (random_matrix(N, d, rng) for _ in range(100)))
    print(f"{format_monomial(monomial)}: {len(expansion)} standard terms, {hits}/100 exact matches")
print()

# On a Schubert variety some terms vanish. The shorter expansion only holds
# on X(w), so we test it at points of X(w).
ctx = SchubertContext(6, 3, (2, 4, 6))
monomial = ((1, 4, 5), (2, 3, 6))
full = straighten(monomial)
kept = restrict_to_schubert(full, ctx.w)
print(f"on X(2,4,6): {len(full)} terms drop to {len(kept)}")
print("  ", format_expansion(kept))
ok = all(evaluate_monomial(monomial, M) == evaluate_expansion(kept, M)
         for M in (sample_point_on_schubert(ctx, seed) for seed in range(50)))
print("   holds at 50 sample points:", ok)
print()

levi = LeviContext(SchubertContext.grassmannian(6, 3), frozenset({1, 2, 4, 5}))
monomial = ((1, 4, 6), (2, 3, 5))
print("heads before:", head_sequence(monomial, levi))
for term, coeff in sorted(straighten(monomial).items()):
    print(f"  {coeff:+d} {format_monomial(term):18s} heads {head_sequence(term, levi)}")
