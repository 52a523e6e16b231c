"""Exact rational linear algebra: Gaussian elimination, rank, solving, affine maps.

Everything works on tuples of ``fractions.Fraction``; nothing here ever touches
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def vec(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def vadd(a: Vector, b: Vector) -> Vector:
    if len(a) != len(b):
        raise ValueError("length mismatch: %d vs %d" % (len(a), len(b)))
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Vector, b: Vector) -> Vector:
    if len(a) != len(b):
        raise ValueError("length mismatch: %d vs %d" % (len(a), len(b)))
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * x for x in a)


def dot(a: Vector, b: Vector) -> Fraction:
    if len(a) != len(b):
        raise ValueError("length mismatch: %d vs %d" % (len(a), len(b)))
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vec(r) for r in rows)


def mat_vec(m: Matrix, v: Vector) -> Vector:
    return tuple(dot(row, v) for row in m)


def _eliminate(rows: list[list[Fraction]]) -> tuple[int, list[int]]:
    """Row-reduce in place; return (rank, pivot row indices in original order)."""
    if not rows:
        return 0, []
    ncols = len(rows[0])
    order = list(range(len(rows)))
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        order[r], order[pivot] = order[pivot], order[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(order[r])
        r += 1
        if r == len(rows):
            break
    return r, pivots


def rank(m: Matrix) -> int:
    rows = [list(row) for row in m]
    r, _ = _eliminate(rows)
    return r


def rank_with_pivot_rows(m: Matrix) -> tuple[int, list[int]]:
    rows = [list(row) for row in m]
    return _eliminate(rows)


def solve(m: Matrix, rhs: Vector) -> Optional[Vector]:
    """One exact solution x of m·x = rhs, or None if the system is inconsistent.

    Free variables are set to zero.
    """
    nrows = len(m)
    if nrows == 0:
        return () if all(b == 0 for b in rhs) else None
    ncols = len(m[0])
    aug = [list(row) + [b] for row, b in zip(m, rhs)]
    r = 0
    pivot_cols: list[int] = []
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivot_cols):
        x[c] = aug[i][ncols]
    return tuple(x)


@dataclass(frozen=True)
class AffineMap:
    """v ↦ matrix·v + offset over the rationals."""

    matrix: Matrix
    offset: Vector
    source: Optional[int] = None  # needed only when the matrix has no rows

    def __post_init__(self):
        for row in self.matrix:
            if len(row) != self.source_dim:
                raise ValueError("ragged matrix")
        if len(self.matrix) != len(self.offset):
            raise ValueError("matrix/offset dimension mismatch")

    @property
    def source_dim(self) -> int:
        if self.matrix:
            return len(self.matrix[0])
        return self.source if self.source is not None else 0

    @property
    def target_dim(self) -> int:
        return len(self.offset)

    def apply(self, v: Sequence) -> Vector:
        w = vec(v)
        if len(w) != self.source_dim:
            raise ValueError(
                "affine map expects dimension %d, got %d" % (self.source_dim, len(w))
            )
        return vadd(mat_vec(self.matrix, w), self.offset)

    def __call__(self, v: Sequence) -> Vector:
        return self.apply(v)


def affine(matrix: Iterable[Iterable], offset: Iterable) -> AffineMap:
    return AffineMap(mat(matrix), vec(offset))
