"""
Dimensions of the loci of degree-n parametrizations (3 forms of degree n)
whose mu-basis has degrees (n - mu, mu).
"""

import logging
from typing import Dict, List

from hstrata.models.errors import ConsistencyError, InputError
from hstrata.models.partition import Partition
from hstrata.services.combinatorics import cod_in_G, cod_mu

logger = logging.getLogger(__name__)


def dim_by_codimension(n: int, mu: int) -> int:
    return 3 * (n + 1) - cod_mu(n, mu)


def dim_by_direct_count(n: int, mu: int) -> int:
    return 3 * n + 3 if mu == n // 2 else 2 * n + 2 * mu + 4


def mu_family_dims(n: int) -> List[Dict]:
    """
    One row per mu in 0..n/2. The two dimension counts must agree; the
    closure of the mu locus is the union of the nu loci for nu <= mu.
    """
    if n < 1:
        raise InputError(f"need n >= 1, got {n}")
    rows = []
    for mu in range(n // 2 + 1):
        D = Partition.of((n - mu, mu))
        by_cod = dim_by_codimension(n, mu)
        direct = dim_by_direct_count(n, mu)
        if mu >= 1 and cod_in_G(D, 0, 3) != cod_mu(n, mu):
            raise ConsistencyError(f"cod_mu({n},{mu}) disagrees with cod_in_G of D={D}")
        if by_cod != direct:
            logger.error(f"mu family n={n}, mu={mu}: {by_cod} != {direct}")
        rows.append({
            'n': n,
            'mu': mu,
            'D': [n - mu, mu],
            'dim_theorem': by_cod,
            'dim_csc': direct,
            'agree': by_cod == direct,
            'closure': list(range(mu + 1)),
        })
    return rows
