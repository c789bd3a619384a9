"""
Walk through the Schubert variety X(3,6,9) in Gr(3,9).

Its stabilizer Levi is GL_3 x GL_3 x GL_3. We list the heads, split the
Hasse diagram into one component per head, cut a standard monomial's tableau
into skew pieces, and decompose the first two graded pieces of the
coordinate ring.

    python demos/01_running_example.py
"""

from schubert_levi import (LeviContext, SchubertContext, class_of, count_std_monomials,
                           decompose_degree, hasse_partition, psi, render_tableau,
                           tableau_of_monomial)
from schubert_levi.straightening import format_word

ctx = SchubertContext(9, 3, (3, 6, 9))
levi = LeviContext.stabilizer(ctx)

print("w =", format_word(ctx.w), "with", len(ctx.interval), "elements below it")
print("R_Q =", sorted(levi.r_q), " blocks:", [list(b) for b in levi.blocks])
print()

# Cutting the edges labelled 3 and 6 leaves one component per head, and the
# head is the top of its component.
print("heads and their Hasse components")
for theta, members in hasse_partition(levi).items():
    print(f"  {format_word(theta)}  class {class_of(theta, levi)}  {len(members):2d} elements")
print()

monomial = ((3, 5, 9), (2, 3, 8), (1, 2, 4))
print("tableau of", "".join(map(format_word, monomial)))
print(render_tableau(tableau_of_monomial(monomial)))
for k, piece in enumerate(psi(monomial, levi), start=1):
    print(f"block {k}: shape {piece.shape}")
    print(render_tableau(piece))
print()

# Degree 1 is just the span of the Plucker coordinates, so 55 = |H_w|.
for r in (1, 2):
    report = decompose_degree(levi, r)
    print(f"degree {r}: {len(report.entries)} head sequences, total {report.total_dim}"
          f" (standard monomials: {count_std_monomials(ctx, r)})")
    for entry in report.entries[:5]:
        labels = ", ".join(f"{m}x{label}" for label, m in entry.constituents)
        print(f"  {''.join(map(format_word, entry.heads)):24s} dim {entry.tensor_dim:4d}  {labels}")
    if len(report.entries) > 5:
        print(f"  ... {len(report.entries) - 5} more")
