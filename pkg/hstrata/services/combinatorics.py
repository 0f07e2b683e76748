"""
Partition order theory and the dimension/codimension formulas for the
Hilbert-function strata of Grass(R_j, d).
"""

import logging
from itertools import combinations
from typing import Iterator, List, Sequence, Tuple

from hstrata.models.errors import ConsistencyError, EmptyStratumError, InputError, OrderUndefinedError
from hstrata.models.partition import Partition
from hstrata.models.strata import HilbertTail, NoseStratumDescriptor, StratumDescriptor
from hstrata.services.invariants import relation_degrees, tail_reconstruction
from hstrata.utils.common import positive_part

logger = logging.getLogger(__name__)


def conjugate(p: Partition) -> Partition:
    return p.conjugate()


def bruhat_leq(p: Partition, q: Partition) -> bool:
    """Dominance: every prefix sum of p is at most that of q."""
    if p.size != q.size:
        raise OrderUndefinedError(f"cannot compare {p} ({p.size}) with {q} ({q.size})")
    n = max(len(p), len(q))
    return all(a <= b for a, b in zip(p.prefix_sums(n), q.prefix_sums(n)))


def _partitions(n: int, max_parts: int, max_part: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, max_parts - 1, first):
            yield (first,) + rest


def enumerate_partitions(n: int, max_parts: int, exact: bool = False) -> List[Partition]:
    """Partitions of n into at most (or, with ``exact``, exactly) max_parts parts, sorted."""
    if n < 0 or max_parts < 0:
        return []
    found = (p for p in _partitions(n, max_parts, n) if not exact or len(p) == max_parts)
    return [Partition(p) for p in sorted(set(found))]


def max_tau(j: int, d: int) -> int:
    return min(d, j + 2 - d)


def _check_jd(j: int, d: int):
    if not 1 <= d <= j + 1:
        raise InputError(f"need 1 <= d <= j+1, got j={j}, d={d}")


def tail_from_lambda(lam: Partition, c: int, j: int, d: int) -> HilbertTail:
    """H_(j+i) = c + sum_u |lambda_u - i|^+."""
    if lam.size != j + 1 - d - c or len(lam) > d - 1 or c < 0:
        raise InputError(f"lambda {lam} with c={c} is not a stratum label for (j,d)=({j},{d})")
    return HilbertTail(j, tail_reconstruction(lam, c, lam.largest() + 1))


def stratum_labels(j: int, d: int) -> List[Tuple[int, Partition]]:
    """(c, lambda) pairs ordered by c, then lexicographically (a linear extension of Bruhat)."""
    _check_jd(j, d)
    labels = []
    for c in range(j + 2 - d):
        for lam in enumerate_partitions(j + 1 - d - c, max_tau(j, d) - 1):
            labels.append((c, lam))
    return labels


def is_admissible_tail(tail: HilbertTail, d: int) -> bool:
    """The direct nonemptiness criterion: h_j = j+1-d, E_H non-increasing, 1 <= tau <= min(d, j+2-d)."""
    j = tail.j
    if tail.values[0] != j + 1 - d or tail.c < 0:
        return False
    e = (d - 1,) + tail.differences()
    if any(x < 0 for x in e) or any(a < b for a, b in zip(e, e[1:])):
        return False
    t = 1 + (e[1] if len(e) > 1 else 0)
    return 1 <= t <= max_tau(j, d)


def admissible_tails(j: int, d: int) -> List[HilbertTail]:
    """Tails of all nonempty strata, built from lambda and cross-checked by brute force."""
    constructed = [tail_from_lambda(lam, c, j, d) for c, lam in stratum_labels(j, d)]
    h = j + 1 - d
    brute = set()
    for k in range(h + 1):
        for lower in combinations(range(h - 1, -1, -1), k):
            candidate = HilbertTail(j, (h,) + lower)
            if is_admissible_tail(candidate, d):
                brute.add(candidate.values)
    if brute != {t.values for t in constructed}:
        raise ConsistencyError(f"admissible tails for ({j},{d}) disagree with the direct criterion")
    return constructed


def stratum_count(j: int, d: int) -> int:
    return sum(len(enumerate_partitions(j + 1 - d - c, max_tau(j, d) - 1)) for c in range(j + 2 - d))


def dim_GH_full(h: Sequence[int]) -> int:
    """
    c_H + sum_(i >= rho) (e_i + 1) e_(i+1) for a full Hilbert function
    h_0, h_1, ... given up to (and including) its stable value.
    """
    h = list(h)
    if not h:
        raise InputError("empty Hilbert function")
    rho = next((i for i, v in enumerate(h) if v != i + 1), None)
    if rho is None:
        raise InputError("Hilbert function of k[x,y] itself has no stable value")
    h = h + [h[-1]]
    e = {i: (h[i - 1] if i > 0 else 0) - h[i] for i in range(len(h))}
    if any(e[i] < 0 for i in range(rho, len(h))):
        raise InputError(f"not a Hilbert function: negative difference in {h}")
    return h[-1] + sum((e[i] + 1) * e[i + 1] for i in range(rho, len(h) - 1))


def full_hilbert_function(tail: HilbertTail) -> Tuple[int, ...]:
    return tuple(range(1, tail.j + 1)) + tail.values


def dim_GH(tail: HilbertTail) -> int:
    return dim_GH_full(full_hilbert_function(tail))


def dim_GH_terms(tail: HilbertTail) -> List[Tuple[int, int]]:
    """The nonzero (e_i + 1, e_(i+1)) factors of the dimension sum."""
    full = list(full_hilbert_function(tail)) + [tail.c]
    j = tail.j
    e = [(full[i - 1] if i > 0 else 0) - full[i] for i in range(len(full))]
    return [(e[i] + 1, e[i + 1]) for i in range(j, len(full) - 1) if e[i + 1]]


def _pair_excess(parts: Sequence[int]) -> int:
    return sum(positive_part(a - b - 1) for a, b in combinations(parts, 2))


def cod_in_G(D: Partition, c: int, d: int) -> int:
    """l(D) = c (d-1) + sum_(u<v) (D_u - D_v - 1)^+."""
    if len(D) != d - 1:
        raise InputError(f"D={D} must have d-1 = {d - 1} parts")
    return c * (d - 1) + _pair_excess(D)


def cod_tau(j: int, d: int, tau: int) -> int:
    """Codimension (d - tau)(j + 2 - d - tau) of Grass_tau(R_j, d)."""
    if not 1 <= tau <= max_tau(j, d):
        raise EmptyStratumError(f"tau={tau} outside 1..{max_tau(j, d)} for (j,d)=({j},{d})")
    return (d - tau) * (j + 2 - d - tau)


def ell_partition(p: Partition, c: int, d: int) -> int:
    """c (d-1) + sum_(u<v) (p_u - p_v - 1)^+."""
    return c * (d - 1) + _pair_excess(p)


def cod_in_tau(lam: Partition, c: int) -> int:
    """Codimension inside Grass_tau; the base-point term is weighted by tau - 1."""
    return ell_partition(lam, c, len(lam) + 1)


def grass_dim(j: int, d: int) -> int:
    return d * (j + 1 - d)


def stratum_descriptor(j: int, d: int, lam: Partition, c: int) -> StratumDescriptor:
    tail = tail_from_lambda(lam, c, j, d)
    tau = len(lam) + 1
    D = relation_degrees(lam, d)
    dim = dim_GH(tail)
    cod = cod_in_G(D, c, d)
    ct = cod_tau(j, d, tau)
    ci = cod_in_tau(lam, c)
    if dim + cod != grass_dim(j, d):
        raise ConsistencyError(f"dim {dim} + cod {cod} != {grass_dim(j, d)} for lambda={lam}, c={c}")
    if cod != ct + ci:
        raise ConsistencyError(f"cod {cod} != cod_tau {ct} + cod_in_tau {ci} for lambda={lam}, c={c}")
    return StratumDescriptor(j=j, d=d, c=c, tau=tau, lam=lam, D=D, tail=tail,
                             dim_stratum=dim, cod_in_G=cod, cod_tau=ct, cod_in_tau=ci)


def all_strata(j: int, d: int) -> List[StratumDescriptor]:
    return [stratum_descriptor(j, d, lam, c) for c, lam in stratum_labels(j, d)]


def nose_descriptor(j: int, d: int, A: Partition) -> NoseStratumDescriptor:
    if A.size != d:
        raise InputError(f"A={A} must partition d={d}")
    tau = len(A)
    ct = cod_tau(j, d, tau)
    ell = ell_partition(A, 0, d)
    ancestor = tuple(sum(positive_part(a - (j - k)) for a in A) for k in range(j + 1))
    N = tuple(k + 1 - ancestor[k] for k in range(j + 1))
    c = j + 1 - d if tau == 1 else 0
    return NoseStratumDescriptor(j=j, d=d, A=A, tau=tau, N=N, ancestor_dims=ancestor, c=c,
                                 dim=grass_dim(j, d) - ct - ell, cod_tau=ct, cod_in_tau=ell)


def nose_strata(j: int, d: int) -> List[NoseStratumDescriptor]:
    """One stratum per partition A of d into at most min(d, j+2-d) parts, generic first."""
    _check_jd(j, d)
    parts = enumerate_partitions(d, max_tau(j, d))
    parts.sort(key=lambda A: (-len(A), A.parts))
    return [nose_descriptor(j, d, A) for A in parts]


def cod_mu(n: int, mu: int) -> int:
    """l(D) for D = (n - mu, mu): (n - 2 mu - 1)^+."""
    return positive_part(n - 2 * mu - 1)
