"""
Dense exact linear algebra over a ``Field``.

Gaussian elimination with first-nonzero pivoting; no magnitude heuristics
since arithmetic is exact. Row-major, immutable results.
"""

import logging
from typing import List, Sequence, Tuple

from hstrata.models.errors import ConsistencyError
from hstrata.models.fields import DualRing, Field
from hstrata.utils.common import debug_checks_enabled

logger = logging.getLogger(__name__)


class Matrix:
    __slots__ = ('field', 'nrows', 'ncols', 'entries')

    def __init__(self, field: Field, entries: Sequence[Sequence], ncols: int = None):
        self.field = field
        self.entries = tuple(tuple(row) for row in entries)
        self.nrows = len(self.entries)
        if ncols is None:
            if not self.entries:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(self.entries[0])
        self.ncols = ncols
        for row in self.entries:
            if len(row) != ncols:
                raise ValueError(f"ragged matrix: expected {ncols} columns, got {len(row)}")

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> 'Matrix':
        z = field.zero()
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> 'Matrix':
        z, o = field.zero(), field.one()
        return cls(field, [[o if r == c else z for c in range(n)] for r in range(n)], n)

    @classmethod
    def from_ints(cls, field: Field, rows: Sequence[Sequence[int]], ncols: int = None) -> 'Matrix':
        return cls(field, [[field.coerce(v) for v in row] for row in rows], ncols)

    def row(self, i: int) -> Tuple:
        return self.entries[i]

    def transpose(self) -> 'Matrix':
        if not self.nrows:
            return Matrix(self.field, [[] for _ in range(self.ncols)], 0)
        return Matrix(self.field, list(zip(*self.entries)), self.nrows)

    def apply(self, vector: Sequence) -> List:
        """Return self · vectorᵀ."""
        f = self.field
        out = []
        for row in self.entries:
            acc = f.zero()
            for a, b in zip(row, vector):
                if not f.is_zero(a) and not f.is_zero(b):
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return out

    def is_zero(self) -> bool:
        return all(self.field.is_zero(v) for row in self.entries for v in row)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.ncols == other.ncols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.ncols, self.entries))

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, {self.field!r})"


def _eliminate(field: Field, rows: List[list], ncols: int) -> Tuple[int, List[int]]:
    """In-place reduced row echelon form; returns (rank, pivot columns)."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if not field.is_zero(rows[i][c])), None)
        if pivot is None:
            continue
        if pivot != r:
            rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        prow = [field.mul(v, inv) for v in rows[r]]
        rows[r] = prow
        for i in range(nrows):
            if i == r:
                continue
            factor = rows[i][c]
            if field.is_zero(factor):
                continue
            rows[i] = [field.sub(a, field.mul(factor, b)) for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return r, pivots


def rref(m: Matrix) -> Tuple[int, Matrix, Tuple[int, ...]]:
    rows = [list(row) for row in m.entries]
    rank, pivots = _eliminate(m.field, rows, m.ncols)
    return rank, Matrix(m.field, rows, m.ncols), tuple(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[0]


def kernel_basis(m: Matrix) -> Matrix:
    """Rows form a basis of the right null space of ``m``."""
    field = m.field
    r, reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = [field.zero()] * m.ncols
        v[free] = field.one()
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(reduced.entries[i][free])
        basis.append(v)
    kernel = Matrix(field, basis, m.ncols)
    if debug_checks_enabled():
        if kernel.nrows + r != m.ncols:
            raise ConsistencyError(f"rank-nullity violated: {r} + {kernel.nrows} != {m.ncols}")
        for v in kernel.entries:
            if not all(field.is_zero(x) for x in m.apply(v)):
                raise ConsistencyError("kernel vector not annihilated")
    return kernel


def row_basis(field: Field, rows: Sequence[Sequence], ncols: int) -> Matrix:
    """Reduced basis of the span of ``rows`` (zero rows dropped)."""
    if not rows:
        return Matrix(field, [], ncols)
    r, reduced, _ = rref(Matrix(field, rows, ncols))
    return Matrix(field, reduced.entries[:r], ncols)


def span_contains(basis: Matrix, vectors: Sequence[Sequence]) -> bool:
    """True when every vector lies in the row span of ``basis``."""
    if not vectors:
        return True
    base = rank(basis) if basis.nrows else 0
    stacked = Matrix(basis.field, list(basis.entries) + [list(v) for v in vectors], basis.ncols)
    return rank(stacked) == base


def extend_independent(field: Field, current: Sequence[Sequence], candidates: Sequence[Sequence],
                       ncols: int, limit: int = None) -> List[Sequence]:
    """Greedily pick candidates that enlarge the span of ``current``."""
    picked = []
    rows = [list(v) for v in current]
    r = rank(Matrix(field, rows, ncols)) if rows else 0
    for v in candidates:
        if limit is not None and len(picked) >= limit:
            break
        trial = rows + [list(v)]
        tr = rank(Matrix(field, trial, ncols))
        if tr > r:
            rows, r = trial, tr
            picked.append(v)
    return picked


def rank_with_duals(grid: Sequence[Sequence], ring: DualRing) -> int:
    """Rank of the primal part of a grid of dual scalars."""
    if not grid:
        return 0
    ncols = len(grid[0])
    primal = Matrix(ring.base, [[x.primal for x in row] for row in grid], ncols)
    return rank(primal)
