"""
Per-V invariants: Hilbert tail, tau, lambda, relation degrees D, the
mu-basis (Hilbert-Burch matrix), signed minors and the nose function.
"""

import logging
from functools import lru_cache
from typing import List, Sequence, Tuple

from hstrata.models.errors import ConsistencyError, InputError
from hstrata.models.forms import BinaryForm, FormSpace
from hstrata.models.partition import Partition
from hstrata.models.strata import HilbertTail, MuBasis
from hstrata.services.binary_forms import (
    ancestor_ideal, gcd_form, product_space, quotient_space,
)
from hstrata.utils.common import debug_checks_enabled
from hstrata.utils.linalg import Matrix, extend_independent, kernel_basis, rank

logger = logging.getLogger(__name__)


def hilbert_tail(V: FormSpace) -> HilbertTail:
    """h_i = (i+1) - dim R_(i-j)·V for i >= j, cut at stabilization."""
    if V.d == 0:
        raise InputError("the zero space has no Hilbert tail")
    j = V.j
    values = [j + 1 - V.d]
    W = V
    i = j
    while True:
        i += 1
        if i > 2 * j + 2:
            raise ConsistencyError(f"Hilbert tail did not stabilize by degree {2 * j + 2}")
        W = product_space(W, 1)
        h = i + 1 - W.d
        if h == values[-1]:
            break
        values.append(h)
    tail = HilbertTail(j, tuple(values))
    if debug_checks_enabled():
        check_tau_identities(V, tail)
    return tail


def tau(V: FormSpace) -> int:
    """dim R_1·V - dim V."""
    return product_space(V, 1).d - V.d


def check_tau_identities(V: FormSpace, tail: HilbertTail):
    """Bounds 1 <= tau <= min(d, j+2-d) and tau = 1 + e_(j+1)."""
    t = tau(V)
    diffs = tail.differences()
    e1 = diffs[0] if diffs else 0
    if t != 1 + e1:
        raise ConsistencyError(f"tau={t} but 1 + e_(j+1) = {1 + e1}")
    if not 1 <= t <= min(V.d, V.j + 2 - V.d):
        raise ConsistencyError(f"tau={t} outside [1, {min(V.d, V.j + 2 - V.d)}]")


def lambda_of(H: HilbertTail) -> Tuple[Partition, int]:
    """lambda is the conjugate of the difference sequence of the tail."""
    return Partition(H.differences()).conjugate(), H.c


def relation_degrees(lam: Partition, d: int) -> Partition:
    """D = (lambda_1+1, ..., lambda_(tau-1)+1, 1, ..., 1) with d-1 parts."""
    if len(lam) > d - 1:
        raise InputError(f"lambda {lam} has more than d-1 = {d - 1} parts")
    return Partition(tuple(p + 1 for p in lam) + (1,) * (d - 1 - len(lam)))


def _multiplication_matrix(forms: Sequence[BinaryForm], s: int) -> Matrix:
    """The map R_s^d -> R_(j+s), (a_i) -> sum a_i f_i."""
    field = forms[0].field
    j = forms[0].degree
    ncols = len(forms) * (s + 1)
    rows = [[field.zero()] * ncols for _ in range(j + s + 1)]
    for i, f in enumerate(forms):
        for t in range(s + 1):
            for k, a in enumerate(f.coeffs):
                rows[t + k][i * (s + 1) + t] = a
    return Matrix(field, rows, ncols)


def _flatten(column: Sequence[BinaryForm]) -> List:
    return [a for entry in column for a in entry.coeffs]


def mu_basis(V: FormSpace) -> MuBasis:
    """
    Minimal relations degree by degree: in degree s the new relations
    complement R_1·(older relations) inside the kernel of R_s^d -> R_(j+s).
    Computed on V : gcd(V); the relations are the same as those of V.
    """
    field = V.field
    g, c = gcd_form(V)
    W = quotient_space(V, g) if c > 0 else V
    forms = W.forms()
    d = W.d
    columns: List[Tuple[int, Tuple[BinaryForm, ...]]] = []
    s = 0
    while len(columns) < d - 1:
        s += 1
        if s > W.j + 1:
            raise ConsistencyError(f"found only {len(columns)} of {d - 1} relations")
        kernel = kernel_basis(_multiplication_matrix(forms, s))
        if kernel.nrows == 0:
            continue
        multiples = []
        for deg, col in columns:
            shift = s - deg
            for t in range(shift + 1):
                multiples.append(_flatten([e.shift(shift, t) for e in col]))
        ncols = d * (s + 1)
        old = rank(Matrix(field, multiples, ncols)) if multiples else 0
        new_count = kernel.nrows - old
        if new_count <= 0:
            continue
        picked = extend_independent(field, multiples, kernel.entries, ncols, limit=new_count)
        for vec in picked:
            col = tuple(BinaryForm(field, s, tuple(vec[i * (s + 1):(i + 1) * (s + 1)])) for i in range(d))
            columns.append((s, col))
    if len(columns) != d - 1:
        raise ConsistencyError(f"{len(columns)} minimal relations for d={d}")
    columns.sort(key=lambda item: -item[0])
    degrees = Partition(tuple(deg for deg, _ in columns))
    if degrees.size != V.j - c:
        raise ConsistencyError(f"relation degrees {degrees} do not sum to j - c = {V.j - c}")
    return MuBasis(V.j, d, tuple(col for _, col in columns), degrees, g)


def degrees_from_syzygy_oracle(V: FormSpace) -> Partition:
    return mu_basis(V).col_degrees


def degrees_from_hilbert_tail(V: FormSpace, tail: HilbertTail = None) -> Partition:
    lam, _ = lambda_of(tail or hilbert_tail(V))
    return relation_degrees(lam, V.d)


def _determinant(matrix: Sequence[Sequence[BinaryForm]], col_degrees: Sequence[int]) -> BinaryForm:
    """Cofactor expansion along columns, memoized on the remaining rows."""
    n = len(col_degrees)
    if n == 0:
        raise ValueError("use the unit form for the empty determinant")
    field = matrix[0][0].field

    @lru_cache(maxsize=None)
    def expand(rows: Tuple[int, ...], col: int) -> BinaryForm:
        if col == n:
            return BinaryForm(field, 0, (field.one(),))
        acc = BinaryForm.zero(field, sum(col_degrees[col:]))
        for pos, r in enumerate(rows):
            entry = matrix[r][col]
            if entry.is_zero():
                continue
            term = entry * expand(rows[:pos] + rows[pos + 1:], col + 1)
            acc = acc - term if pos % 2 else acc + term
        return acc

    return expand(tuple(range(n)), 0)


def signed_minors_of(matrix: Sequence[Sequence[BinaryForm]], col_degrees: Sequence[int],
                     field) -> List[BinaryForm]:
    """(-1)^i times the maximal minor with row i deleted, for a d x (d-1) matrix."""
    d = len(matrix)
    if d == 1:
        return [BinaryForm(field, 0, (field.one(),))]
    minors = []
    for i in range(d):
        sub = [matrix[r] for r in range(d) if r != i]
        det = _determinant(sub, col_degrees)
        minors.append(-det if i % 2 else det)
    return minors


def signed_minors(M: MuBasis) -> List[BinaryForm]:
    field = M.gcd.field
    matrix = [[M.columns[u][i] for u in range(M.d - 1)] for i in range(M.d)]
    return signed_minors_of(matrix, list(M.col_degrees), field)


def hilbert_burch_span(M: MuBasis) -> FormSpace:
    """g times the span of the signed minors; equals V when M = mu_basis(V)."""
    minors = [M.gcd * m for m in signed_minors(M)]
    return FormSpace.span(M.gcd.field, M.j, minors)


def ancestor_dims(V: FormSpace) -> Tuple[int, ...]:
    """dim of the ancestor ideal in degrees 0..j."""
    return tuple(ancestor_ideal(V).dims())


def nose(V: FormSpace) -> Tuple[Tuple[int, ...], Partition]:
    """N(V) = H(R/V̄) in degrees 0..j and the scroll partition A."""
    dims = ancestor_dims(V)
    j = V.j
    N = tuple(i + 1 - dims[i] for i in range(j + 1))
    conj = []
    for i in range(j + 1):
        below = dims[j - i - 1] if j - i - 1 >= 0 else 0
        step = dims[j - i] - below
        if step > 0:
            conj.append(step)
    try:
        A = Partition(tuple(conj)).conjugate()
    except InputError as e:
        raise ConsistencyError(f"ancestor dimensions {dims} are not a nose sequence") from e
    return N, A


def tau_from_ancestor(V: FormSpace) -> int:
    """Number of minimal generators of the ancestor ideal."""
    return sum(ancestor_ideal(V).generator_counts().values())


def tail_reconstruction(lam: Partition, c: int, length: int) -> Tuple[int, ...]:
    """c + sum_u |lambda_u - i|^+ for i = 0..length-1."""
    return tuple(c + sum(max(p - i, 0) for p in lam) for i in range(length))
