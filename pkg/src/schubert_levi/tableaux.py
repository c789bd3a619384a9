"""
Partitions, skew shapes and semistandard tableaux, plus the maps between
standard monomials and tuples of per-block skew tableaux.

Cells are 0-based ``(row, column)`` pairs internally; shapes and fillings
exposed to callers are row lists.
"""

from dataclasses import dataclass
from functools import lru_cache

from .grassmann import bruhat_leq
from .heads import InvariantError, head_sequence


def partition(parts):
    """Validate and return ``parts`` as a tuple with trailing zeros removed."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p < 1 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not a partition")
    return parts


def conjugate(parts):
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def contains(outer, inner):
    return len(inner) <= len(outer) and all(m <= l for m, l in zip(inner, outer))


def partitions_of(n, max_part=None):
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def _pad(parts, length):
    return tuple(parts) + (0,) * (length - len(parts))


@dataclass(frozen=True, order=True)
class SkewShape:
    """lambda / mu, always stored with no empty rows or columns."""

    outer: tuple
    inner: tuple = ()

    def __post_init__(self):
        outer, inner = partition(self.outer), partition(self.inner)
        if not contains(outer, inner):
            raise ValueError(f"{inner} is not contained in {outer}")
        cells = [(i, j) for i, (l, m) in enumerate(zip(outer, _pad(inner, len(outer))))
                 for j in range(m, l)]
        outer, inner = _shape_of_cells(cells)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def rows(self):
        return len(self.outer)

    @property
    def size(self):
        return sum(self.outer) - sum(self.inner)

    @property
    def is_straight(self):
        return not self.inner

    def row_range(self, i):
        """Column range of the boxes in row i."""
        m = self.inner[i] if i < len(self.inner) else 0
        return range(m, self.outer[i])

    def cells(self):
        return [(i, j) for i in range(self.rows) for j in self.row_range(i)]

    def __str__(self):
        outer = ",".join(map(str, self.outer))
        inner = ",".join(map(str, self.inner))
        return f"({outer})/({inner})"

    def to_dict(self):
        return {"outer": list(self.outer), "inner": list(self.inner)}


def _compress(cells):
    """Relabel rows and columns so that none are empty, keeping their order."""
    rows = {r: k for k, r in enumerate(sorted({i for i, _ in cells}))}
    cols = {c: k for k, c in enumerate(sorted({j for _, j in cells}))}
    return rows, cols


def _shape_of_cells(cells):
    """(outer, inner) of a set of cells after compression.

    Raises InvariantError if the compressed cells do not form a skew diagram.
    """
    if not cells:
        return (), ()
    rows, cols = _compress(cells)
    spans = {}
    for i, j in cells:
        spans.setdefault(rows[i], []).append(cols[j])
    outer, inner = [], []
    for i in range(len(rows)):
        js = sorted(spans[i])
        if js[-1] - js[0] + 1 != len(js):
            raise InvariantError(f"row {i} of {sorted(cells)} has a gap")
        inner.append(js[0])
        outer.append(js[-1] + 1)
    if any(a < b for a, b in zip(outer, outer[1:])) or \
            any(a < b for a, b in zip(inner, inner[1:])):
        raise InvariantError(f"cells {sorted(cells)} do not form a skew diagram")
    while inner and inner[-1] == 0:
        inner.pop()
    return tuple(outer), tuple(inner)


EMPTY = SkewShape((), ())


@dataclass(frozen=True, order=True)
class SkewTableau:
    """A filling of a skew shape; ``rows[i]`` lists the entries of row i left to right."""

    shape: SkewShape
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.shape.rows or any(
                len(row) != len(self.shape.row_range(i)) for i, row in enumerate(rows)):
            raise ValueError(f"filling {rows} does not fit the shape {self.shape}")

    def cell_map(self):
        return {(i, j): v for i, row in enumerate(self.rows)
                for j, v in zip(self.shape.row_range(i), row)}

    def is_semistandard(self):
        cells = self.cell_map()
        for (i, j), v in cells.items():
            right = cells.get((i, j + 1))
            below = cells.get((i + 1, j))
            if (right is not None and right < v) or (below is not None and below <= v):
                return False
        return True

    def content(self, n):
        counts = [0] * n
        for row in self.rows:
            for v in row:
                counts[v - 1] += 1
        return tuple(counts)

    def __str__(self):
        return render_tableau(self)


def _trusted_shape(outer, inner):
    shape = object.__new__(SkewShape)
    object.__setattr__(shape, "outer", outer)
    object.__setattr__(shape, "inner", inner)
    return shape


def _trusted_tableau(shape, rows):
    tableau = object.__new__(SkewTableau)
    object.__setattr__(tableau, "shape", shape)
    object.__setattr__(tableau, "rows", rows)
    return tableau


def tableau_from_cells(cells):
    """Build a normalized SkewTableau from a ``{(row, col): value}`` map."""
    outer, inner = _shape_of_cells(list(cells))
    rows, cols = _compress(list(cells))
    grid = {(rows[i], cols[j]): v for (i, j), v in cells.items()}
    shape = _trusted_shape(outer, inner)
    filling = tuple(tuple(grid[i, j] for j in shape.row_range(i)) for i in range(shape.rows))
    return _trusted_tableau(shape, filling)


def render_tableau(tableau):
    """Fixed-width grid with ``·`` in the inner (removed) boxes."""
    if not tableau.rows:
        return "∅"
    width = max(len(str(v)) for row in tableau.rows for v in row)
    lines = []
    for i, row in enumerate(tableau.rows):
        lead = tableau.shape.row_range(i).start
        items = ["·".rjust(width)] * lead + [str(v).rjust(width) for v in row]
        lines.append(" ".join(items))
    return "\n".join(lines)


def tableau_of_monomial(factors):
    """The r x d rectangle whose column j is factor r+1-j."""
    factors = tuple(tuple(f) for f in factors)
    _check_standard(factors)
    r, d = len(factors), len(factors[0])
    rows = tuple(tuple(factors[r - 1 - j][i] for j in range(r)) for i in range(d))
    return SkewTableau(SkewShape((r,) * d), rows)


def _block_cells(tableau, levi, k):
    lo, hi = levi.cut_points[k - 1], levi.cut_points[k]
    return {cell: v - lo for cell, v in tableau.cell_map().items() if lo < v <= hi}


def block_restriction(tableau, levi, k):
    """Keep the boxes valued in block k, shift them to [1, N_k] and normalize."""
    if not 1 <= k <= levi.block_count:
        raise ValueError(f"block index {k} outside [1, {levi.block_count}]")
    return tableau_from_cells(_block_cells(tableau, levi, k))


def _check_standard(factors):
    if not factors:
        raise ValueError("empty monomial")
    for a, b in zip(factors, factors[1:]):
        if not bruhat_leq(b, a):
            raise ValueError(f"monomial {factors} is not standard")


@lru_cache(maxsize=None)
def _block_table(cuts):
    table = [0] * (cuts[-1] + 1)
    for k in range(1, len(cuts)):
        for v in range(cuts[k - 1] + 1, cuts[k] + 1):
            table[v] = k - 1
    return tuple(table)


def _split_by_block(monomial, cuts):
    """Per block, the cells of the rectangle tableau holding its values (row-major)."""
    table = _block_table(cuts)
    r, d = len(monomial), len(monomial[0])
    buckets = [{} for _ in range(len(cuts) - 1)]
    for i in range(d):
        for j in range(r):
            v = monomial[r - 1 - j][i]
            k = table[v]
            buckets[k][i, j] = v - cuts[k]
    return buckets


def psi(monomial, levi):
    """The tuple of per-block skew tableaux of a standard monomial.

    Equal to ``block_restriction(tableau_of_monomial(monomial), levi, k)``
    over all blocks k, computed in one pass.
    """
    monomial = tuple(tuple(f) for f in monomial)
    _check_standard(monomial)
    return tuple(tableau_from_cells(b) for b in _split_by_block(monomial, levi.cut_points))


@lru_cache(maxsize=None)
def _head_frame(thetas, cuts):
    """Per block: the rectangle cells it occupies and their normalized shape."""
    frame = []
    for cells in _split_by_block(thetas, cuts):
        frame.append((tuple(cells), tableau_from_cells(cells).shape))
    return tuple(frame)


def shapes_of_head(thetas, levi):
    thetas = tuple(tuple(t) for t in thetas)
    _check_standard(thetas)
    return tuple(shape for _, shape in _head_frame(thetas, levi.cut_points))


def reconstruct_monomial(fillings, thetas, levi):
    """Inverse of ``psi`` for monomials whose head sequence is ``thetas``."""
    thetas = tuple(tuple(t) for t in thetas)
    _check_standard(thetas)
    if len(fillings) != levi.block_count:
        raise ValueError(f"expected {levi.block_count} tableaux, got {len(fillings)}")
    merged = {}
    frame = _head_frame(thetas, levi.cut_points)
    for k, (filling, (cells, shape)) in enumerate(zip(fillings, frame), start=1):
        if filling.shape != shape:
            raise ValueError(f"block {k}: shape {filling.shape} does not match {shape}")
        values = [v for row in filling.rows for v in row]
        if any(not 1 <= v <= levi.sizes[k - 1] for v in values):
            raise ValueError(f"block {k}: entries must lie in [1, {levi.sizes[k - 1]}]")
        # the cells are in row-major order, as are the boxes after compression
        offset = levi.cut_points[k - 1]
        for cell, v in zip(cells, values):
            merged[cell] = v + offset
    r, d = len(thetas), len(thetas[0])
    monomial = tuple(tuple(merged[i, r - 1 - j] for i in range(d)) for j in range(r))
    if any(a >= b for f in monomial for a, b in zip(f, f[1:])):
        raise ValueError("fillings do not produce strictly increasing factors")
    if any(not bruhat_leq(b, a) for a, b in zip(monomial, monomial[1:])):
        raise ValueError("fillings do not produce a standard monomial")
    if not bruhat_leq(monomial[0], levi.w) or head_sequence(monomial, levi) != thetas:
        raise ValueError(f"fillings do not lie over the head sequence {thetas}")
    return monomial


def pi_rotation(shape):
    """Rotate the diagram by 180 degrees and normalize."""
    cells = shape.cells()
    if not cells:
        return shape
    R, C = shape.rows, shape.outer[0]
    outer, inner = _shape_of_cells([(R - 1 - i, C - 1 - j) for i, j in cells])
    return SkewShape(outer, inner)


def enumerate_ssyt(shape, max_entry):
    """All semistandard fillings with entries in [1, max_entry].

    Boxes are filled in row-reading order with ascending candidate values, so
    the output is lexicographic in the row-reading word.
    """
    if max_entry < 1:
        raise ValueError("max_entry must be at least 1")
    cells = shape.cells()
    in_shape = set(cells)
    # a box needs room for the boxes hanging below it in its column
    depth = {}
    for i, j in reversed(cells):
        depth[i, j] = depth.get((i + 1, j), -1) + 1 if (i + 1, j) in in_shape else 0
    values = {}
    out = []

    def fill(pos):
        if pos == len(cells):
            out.append(SkewTableau(shape, tuple(
                tuple(values[i, j] for j in shape.row_range(i)) for i in range(shape.rows))))
            return
        i, j = cells[pos]
        low = max(values.get((i, j - 1), 1), values.get((i - 1, j), 0) + 1)
        for v in range(low, max_entry - depth[i, j] + 1):
            values[i, j] = v
            fill(pos + 1)
        values.pop((i, j), None)

    fill(0)
    return out
