"""
Which Schubert varieties have multiplicity-free coordinate rings?

The closed-form criteria certify smooth words, determinantal words and words
with at most two Levi blocks (three if the last entry is not N). We scan a
few Grassmannians, compare with brute-force decompositions up to a degree
bound, and show that the two failures found in Gr(4,8) are outside the
certified range.

    python demos/03_sphericity_scan.py
"""

from collections import Counter

from schubert_levi import LeviContext, SchubertContext
from schubert_levi.sphericity import (CERTIFIED, empirical_multiplicity_check, scan, table_text,
                                      unsound_rows)

print(table_text(scan(5, 2, 3)))

tally = Counter()
for N in range(2, 9):
    for d in range(1, N):
        rows = scan(N, d, 3)
        assert not unsound_rows(rows)
        for v in rows:
            tally[v.theorem_verdict, v.empirical.multiplicity_free_up_to_bound] += 1
print("N <= 8, every d, degree <= 3")
for (verdict, free), n in sorted(tally.items()):
    print(f"  {verdict:28s} multiplicity free: {str(free):5s} {n:4d} words")
print()

# Bounded-degree evidence only. A "True" here is not a proof.
for w in [(2, 4, 6, 8), (3, 5, 7, 8), (3, 6, 9)]:
    N = 9 if w == (3, 6, 9) else 8
    levi = LeviContext.stabilizer(SchubertContext(N, len(w), w))
    result = empirical_multiplicity_check(levi, 3)
    print(f"w={w} blocks={levi.block_count}: free up to degree 3: "
          f"{result.multiplicity_free_up_to_bound}")
    if result.first_violation:
        r, label, m = result.first_violation
        print(f"   degree {r}: {label} appears {m} times")
print("certified verdict is", repr(CERTIFIED))
