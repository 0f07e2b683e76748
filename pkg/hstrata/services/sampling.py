"""
Random Hilbert-Burch samples of prescribed relation degrees and the
dual-number Jacobian of the minors map.
"""

import logging

from hstrata.models.errors import InputError, SamplingError
from hstrata.models.experiments import HBSample
from hstrata.models.fields import DualRing, Field, PrimeField
from hstrata.models.forms import BinaryForm, FormSpace
from hstrata.models.partition import Partition
from hstrata.services.combinatorics import cod_in_G, tail_from_lambda
from hstrata.services.invariants import hilbert_tail, signed_minors_of
from hstrata.utils.common import derive_rng
from hstrata.utils.linalg import Matrix, rank, rank_with_duals

logger = logging.getLogger(__name__)

DEFAULT_MAX_RESAMPLES = 25


def random_form(field: Field, degree: int, rng) -> BinaryForm:
    return BinaryForm(field, degree, tuple(field.random(rng) for _ in range(degree + 1)))


def random_nonzero_form(field: Field, degree: int, rng) -> BinaryForm:
    while True:
        f = random_form(field, degree, rng)
        if not f.is_zero():
            return f


def random_split_form(field: Field, degree: int, rng) -> BinaryForm:
    """Product of `degree` random nonzero linear forms; the constant 1 for degree 0."""
    g = BinaryForm.monomial(field, 0, 0)
    for _ in range(degree):
        g = g * random_nonzero_form(field, 1, rng)
    return g


def lambda_from_degrees(D: Partition) -> Partition:
    return Partition.of(p - 1 for p in D)


def _validate_degrees(j: int, d: int, D: Partition, c: int):
    if len(D) != d - 1:
        raise InputError(f"D={D} must have d-1 = {d - 1} parts")
    if c < 0 or D.size != j - c:
        raise InputError(f"D={D} must partition j - c = {j - c}")


def sample_hilbert_burch(j: int, d: int, D: Partition, c: int, seed: int, field: Field = None,
                         max_resamples: int = DEFAULT_MAX_RESAMPLES) -> HBSample:
    """
    V = g · span(signed minors of a random d x (d-1) matrix with column
    degrees D), g a product of c random linear forms; resampled until V lands in the
    stratum labelled by (D, c).
    """
    field = field or PrimeField()
    _validate_degrees(j, d, D, c)
    expected = tail_from_lambda(lambda_from_degrees(D), c, j, d)
    for attempt in range(max_resamples + 1):
        rng = derive_rng(seed, attempt)
        matrix = tuple(tuple(random_form(field, D[u], rng) for u in range(d - 1)) for _ in range(d))
        g = random_split_form(field, c, rng)
        minors = signed_minors_of(matrix, list(D), field)
        V = FormSpace.span(field, j, [g * m for m in minors])
        if V.d != d:
            logger.warning(f"sample seed={seed} attempt={attempt}: minors dependent, resampling")
            continue
        tail = hilbert_tail(V)
        if tail != expected:
            logger.warning(f"sample seed={seed} attempt={attempt}: tail {tail} != {expected}, resampling")
            continue
        return HBSample(seed=seed, j=j, d=d, target_D=D, target_c=c, matrix=matrix, gcd=g,
                        V=V, tail=tail, attempts=attempt + 1)
    raise SamplingError(f"no sample in stratum D={D}, c={c} of ({j},{d}) after {max_resamples} resamples; "
                        f"the stratum may be empty or the prime too small")


def jacobian_rank_dim(j: int, d: int, D: Partition, seed: int, field: PrimeField = None,
                      max_resamples: int = DEFAULT_MAX_RESAMPLES) -> int:
    """
    Rank of the Jacobian of (matrix coefficients) -> (coefficients of the
    d signed minors) at a random point, one dual-number pass per parameter.
    """
    if d < 2:
        raise InputError("the minors map needs d >= 2")
    field = field or PrimeField()
    _validate_degrees(j, d, D, 0)
    ring = DualRing(field)
    degrees = list(D)
    expected = tail_from_lambda(lambda_from_degrees(D), 0, j, d)
    params = [(i, u, t) for i in range(d) for u in range(d - 1) for t in range(degrees[u] + 1)]
    for attempt in range(max_resamples + 1):
        rng = derive_rng(seed, attempt)
        point = [[[field.random(rng) for _ in range(degrees[u] + 1)] for u in range(d - 1)] for _ in range(d)]
        rows = []
        degenerate = False
        for k, (pi, pu, pt) in enumerate(params):
            dual = [[BinaryForm(ring, degrees[u], tuple(
                        _dual_entry(ring, point[i][u][t], (i, u, t) == (pi, pu, pt))
                        for t in range(degrees[u] + 1)))
                     for u in range(d - 1)] for i in range(d)]
            minors = signed_minors_of(dual, degrees, ring)
            grid = [list(m.coeffs) for m in minors]
            if k == 0 and rank_with_duals(grid, ring) < d:
                degenerate = True
                break
            rows.append([x.tangent for m in minors for x in m.coeffs])
        if degenerate or not params:
            logger.warning(f"jacobian seed={seed} attempt={attempt}: degenerate sample, resampling")
            continue
        primal = [BinaryForm(field, j, tuple(x.primal for x in m.coeffs)) for m in minors]
        if hilbert_tail(FormSpace.span(field, j, primal)) != expected:
            logger.warning(f"jacobian seed={seed} attempt={attempt}: sample off stratum, resampling")
            continue
        r = rank(Matrix(field, rows, d * (j + 1)))
        logger.debug(f"jacobian ({j},{d}) D={D}: rank {r}, expected {d * (j + 1) - cod_in_G(D, 0, d)}")
        return r
    raise SamplingError(f"no nondegenerate Jacobian sample for D={D} of ({j},{d})")


def _dual_entry(ring: DualRing, value: int, seeded: bool):
    return ring.variable(value) if seeded else ring.coerce(value)


def random_form_space(field: Field, j: int, d: int, rng) -> FormSpace:
    if not 1 <= d <= j + 1:
        raise InputError(f"need 1 <= d <= j+1, got j={j}, d={d}")
    while True:
        V = FormSpace.span(field, j, [random_form(field, j, rng) for _ in range(d)])
        if V.d == d:
            return V
