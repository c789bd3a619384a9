"""
Degree-by-degree decomposition of the coordinate ring of X(w) into
irreducible modules of a Levi subgroup, with the dimension, bijection and
character checks that tie it to the standard monomial basis.

Constituents are labelled by the tuple of straight partitions before
dualizing; the module in degree r is the dual of the listed tensor products.
"""

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import prod

from .grassmann import SchubertContext, count_std_monomials, standard_monomials
from .heads import InvariantError, LeviContext, head_sequence, standard_head_sequences
from .lr import skew_weyl_decomposition, weyl_character, weyl_dimension
from .tableaux import SkewShape, _head_frame, psi, reconstruct_monomial, shapes_of_head


@dataclass(frozen=True, order=True)
class IrreducibleLabel:
    """(nu^(1), ..., nu^(s)) in degree r, standing for the dual of the tensor product."""

    parts: tuple
    degree: int

    def dimension(self, sizes):
        return prod(weyl_dimension(SkewShape(nu), n) for nu, n in zip(self.parts, sizes))

    def __str__(self):
        inner = " ⊗ ".join("(" + ",".join(map(str, nu)) + ")" for nu in self.parts)
        return f"[{inner}]*"


@dataclass(frozen=True)
class DecompositionEntry:
    heads: tuple
    shapes: tuple
    tensor_dim: int
    constituents: tuple  # of (IrreducibleLabel, multiplicity)

    def to_dict(self):
        return {
            "heads": [list(t) for t in self.heads],
            "shapes": [s.to_dict() for s in self.shapes],
            "tensor_dim": str(self.tensor_dim),
            "constituents": [{"parts": [list(nu) for nu in label.parts], "multiplicity": m}
                             for label, m in self.constituents],
        }

    @classmethod
    def from_dict(cls, data, degree):
        return cls(
            heads=tuple(tuple(t) for t in data["heads"]),
            shapes=tuple(SkewShape(s["outer"], s["inner"]) for s in data["shapes"]),
            tensor_dim=int(data["tensor_dim"]),
            constituents=tuple(
                (IrreducibleLabel(tuple(tuple(nu) for nu in c["parts"]), degree),
                 int(c["multiplicity"]))
                for c in data["constituents"]),
        )


@dataclass(frozen=True)
class DecompositionReport:
    N: int
    d: int
    w: tuple
    r_q: tuple
    degree: int
    entries: tuple
    total_dim: int

    def to_dict(self):
        return {
            "N": self.N,
            "d": self.d,
            "w": list(self.w),
            "r_q": list(self.r_q),
            "degree": self.degree,
            "entries": [e.to_dict() for e in self.entries],
            "total_dim": str(self.total_dim),
        }

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data):
        degree = int(data["degree"])
        return cls(
            N=int(data["N"]), d=int(data["d"]), w=tuple(data["w"]),
            r_q=tuple(data["r_q"]), degree=degree,
            entries=tuple(DecompositionEntry.from_dict(e, degree) for e in data["entries"]),
            total_dim=int(data["total_dim"]),
        )

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def constituent_counts(self):
        """Total multiplicity of each label across all entries of the degree."""
        counts = Counter()
        for entry in self.entries:
            for label, m in entry.constituents:
                counts[label] += m
        return counts


def module_of_head(thetas, levi):
    """Shapes, tensor dimension and constituents of the module attached to a head sequence."""
    shapes, tensor_dim, constituents = _module(tuple(map(tuple, thetas)), levi.cut_points)
    return shapes, tensor_dim, Counter(dict(constituents))


@lru_cache(maxsize=None)
def _module(thetas, cuts):
    # only the block cut points matter, so contexts sharing them share the work
    shapes = tuple(shape for _, shape in _head_frame(thetas, cuts))
    sizes = tuple(b - a for a, b in zip(cuts, cuts[1:]))
    tensor_dim = prod(weyl_dimension(sh, n) for sh, n in zip(shapes, sizes))
    per_block = [skew_weyl_decomposition(sh, max_rows=n) for sh, n in zip(shapes, sizes)]
    constituents = Counter()
    for combo in product(*(sorted(c.items(), reverse=True) for c in per_block)):
        parts = tuple(nu for nu, _ in combo)
        constituents[parts] += prod(m for _, m in combo)
    return shapes, tensor_dim, tuple(sorted(constituents.items(), reverse=True))


def decompose_degree(levi, r, check=True):
    """One entry per standard head sequence of degree r, in enumeration order."""
    entries = []
    for thetas in standard_head_sequences(levi, r):
        shapes, tensor_dim, constituents = module_of_head(thetas, levi)
        labelled = tuple((IrreducibleLabel(parts, r), m)
                         for parts, m in sorted(constituents.items(), reverse=True))
        entries.append(DecompositionEntry(thetas, shapes, tensor_dim, labelled))
    total = sum(e.tensor_dim for e in entries)
    report = DecompositionReport(levi.N, levi.d, levi.w, tuple(sorted(levi.r_q)), r,
                                 tuple(entries), total)
    if check:
        _check_report(report, levi)
    return report


def _check_report(report, levi):
    expected = count_std_monomials(levi.ctx, report.degree)
    if report.total_dim != expected:
        raise InvariantError(
            f"total dimension {report.total_dim} != {expected} standard monomials")
    for entry in report.entries:
        boxes = sum(sh.size for sh in entry.shapes)
        if boxes != report.degree * levi.d:
            raise InvariantError(f"{entry.heads}: {boxes} boxes, expected {report.degree * levi.d}")
        split = sum(m * label.dimension(levi.sizes) for label, m in entry.constituents)
        if split != entry.tensor_dim:
            raise InvariantError(
                f"{entry.heads}: constituents give {split}, tensor product has {entry.tensor_dim}")


@lru_cache(maxsize=64)
def _monomials(ctx, r):
    return tuple(standard_monomials(ctx, r))


def monomials_by_head(levi, r):
    """Standard monomials of degree r on X(w), grouped by head sequence."""
    groups = {}
    for m in _monomials(levi.ctx, r):
        groups.setdefault(head_sequence(m, levi), []).append(m)
    return groups


def verify_psi_bijection(levi, r):
    """Check that psi maps each head class bijectively onto its tableau product.

    Images must be semistandard on the head's shapes with entries bounded by
    the block sizes, pairwise distinct, inverted by ``reconstruct_monomial``,
    and as many as the product of the per-block tableau counts.
    """
    groups = monomials_by_head(levi, r)
    if set(groups) - set(standard_head_sequences(levi, r)):
        return False
    sizes = levi.sizes
    for thetas, monomials in groups.items():
        shapes = shapes_of_head(thetas, levi)
        images = set()
        for m in monomials:
            image = psi(m, levi)
            if tuple(t.shape for t in image) != shapes:
                return False
            for t, n in zip(image, sizes):
                if not t.is_semistandard() or any(v > n for row in t.rows for v in row):
                    return False
            if reconstruct_monomial(image, thetas, levi) != m:
                return False
            images.add(image)
        if len(images) != len(monomials):
            return False
        if len(images) != prod(weyl_dimension(sh, n) for sh, n in zip(shapes, sizes)):
            return False
    return True


def _monomial_weight(monomial, N):
    counts = [0] * N
    for tau in monomial:
        for x in tau:
            counts[x - 1] -= 1
    return tuple(counts)


def character_check(levi, r):
    """Compare monomial weights with the block characters of each head's shapes."""
    groups = monomials_by_head(levi, r)
    for thetas in standard_head_sequences(levi, r):
        observed = Counter(_monomial_weight(m, levi.N) for m in groups.get(thetas, ()))
        shapes = shapes_of_head(thetas, levi)
        expected = Counter()
        chars = [weyl_character(sh, n).items() for sh, n in zip(shapes, levi.sizes)]
        for combo in product(*chars):
            weight = tuple(-x for content, _ in combo for x in content)
            expected[weight] += prod(c for _, c in combo)
        if observed != expected:
            return False
    return True


def branching_of_rectangle(block_sizes, d, r):
    """Restrict the dual of W^(r^d) from GL_N to the block-diagonal Levi."""
    N = sum(block_sizes)
    ctx = SchubertContext.grassmannian(N, d)
    return decompose_degree(LeviContext.from_block_sizes(ctx, tuple(block_sizes)), r)
