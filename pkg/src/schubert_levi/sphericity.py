"""
Multiplicity-freeness of C[X(w)] under the Levi of its stabilizer: the
closed-form criteria (smooth w, determinantal w, few Levi blocks) and a
bounded-degree empirical check against the decomposition engine.
"""

import csv
import io
import json
from dataclasses import dataclass, replace

from .decomposition import decompose_degree
from .grassmann import SchubertContext, all_words
from .heads import LeviContext

CERTIFIED = "multiplicity_free_certified"
NOT_COVERED = "not_covered"


@dataclass(frozen=True)
class EmpiricalResult:
    max_degree_checked: int
    multiplicity_free_up_to_bound: bool
    first_violation: tuple = None  # (degree, IrreducibleLabel, multiplicity)


@dataclass(frozen=True)
class SphericityVerdict:
    w: tuple
    N: int
    smooth_form: tuple
    determinantal_form: int
    block_count: int
    last_entry_is_N: bool
    theorem_verdict: str
    empirical: EmpiricalResult = None

    def row(self):
        emp = self.empirical
        return {
            "w": ",".join(map(str, self.w)),
            "dprl": self.block_count,
            "smooth": "" if self.smooth_form is None else ",".join(map(str, self.smooth_form)),
            "determinantal": "" if self.determinantal_form is None else str(self.determinantal_form),
            "theorem_verdict": self.theorem_verdict,
            "empirical_bound": "" if emp is None else emp.max_degree_checked,
            "empirical_ok": "" if emp is None else str(emp.multiplicity_free_up_to_bound).lower(),
        }


COLUMNS = ("w", "dprl", "smooth", "determinantal", "theorem_verdict",
           "empirical_bound", "empirical_ok")


def smooth_form(w, N):
    """(p, m, i) with w = (1..p, m+1..m+i), p + i = d, p != m, m + i <= N; else None."""
    w = tuple(w)
    d = len(w)
    p = 0
    while p < d and w[p] == p + 1:
        p += 1
    if p == d:
        return (d, 0, 0)
    rest = w[p:]
    if any(b != a + 1 for a, b in zip(rest, rest[1:])):
        return None
    m, i = rest[0] - 1, len(rest)
    if p == m or m + i > N:
        return None
    return (p, m, i)


def determinantal_form(w, N):
    """t with w = (t+1..d, N-t+1..N) and 1 <= t < min(d, N-d); else None."""
    w = tuple(w)
    d = len(w)
    for t in range(1, min(d, N - d)):
        if w == tuple(range(t + 1, d + 1)) + tuple(range(N - t + 1, N + 1)):
            return t
    return None


def classify(ctx):
    """Structural verdict from the closed-form criteria (no decomposition run)."""
    levi = LeviContext.stabilizer(ctx)
    s = levi.block_count
    last_is_N = ctx.w[-1] == ctx.N
    certified = s in (1, 2) or (s == 3 and not last_is_N)
    return SphericityVerdict(
        w=ctx.w, N=ctx.N,
        smooth_form=smooth_form(ctx.w, ctx.N),
        determinantal_form=determinantal_form(ctx.w, ctx.N),
        block_count=s,
        last_entry_is_N=last_is_N,
        theorem_verdict=CERTIFIED if certified else NOT_COVERED,
    )


def empirical_multiplicity_check(levi, max_degree):
    """Is every label of every degree up to the bound of multiplicity one?

    Labels of different degrees never coincide (their box counts differ), so
    checking each degree separately covers the whole range.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    for r in range(1, max_degree + 1):
        counts = decompose_degree(levi, r).constituent_counts()
        for label in sorted(counts):
            if counts[label] > 1:
                return EmpiricalResult(max_degree, False, (r, label, counts[label]))
    return EmpiricalResult(max_degree, True)


def verdict_with_evidence(ctx, max_degree):
    base = classify(ctx)
    empirical = empirical_multiplicity_check(LeviContext.stabilizer(ctx), max_degree)
    return replace(base, empirical=empirical)


def scan(N, d, max_degree):
    """Verdicts for every w in I(d, N), lexicographic in w."""
    return [verdict_with_evidence(SchubertContext(N, d, w), max_degree)
            for w in all_words(d, N)]


def unsound_rows(verdicts):
    """Rows certified by the criteria but refuted by the bounded check."""
    return [v for v in verdicts if v.theorem_verdict == CERTIFIED
            and v.empirical is not None and not v.empirical.multiplicity_free_up_to_bound]


def table_csv(verdicts):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for v in verdicts:
        writer.writerow(v.row())
    return buf.getvalue()


def table_json(verdicts):
    return json.dumps([v.row() for v in verdicts], indent=2)


def table_text(verdicts):
    rows = [[str(v.row()[c]) for c in COLUMNS] for v in verdicts]
    widths = [max(len(c), *(len(r[k]) for r in rows)) if rows else len(c)
              for k, c in enumerate(COLUMNS)]
    lines = ["  ".join(c.ljust(n) for c, n in zip(COLUMNS, widths))]
    lines += ["  ".join(x.ljust(n) for x, n in zip(r, widths)) for r in rows]
    return "\n".join(line.rstrip() for line in lines) + "\n"
