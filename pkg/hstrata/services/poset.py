"""Closure posets of the H-strata and of the nose strata."""

import logging
from itertools import permutations
from typing import Dict, List, Tuple

import networkx as nx

from hstrata.models.errors import ConsistencyError
from hstrata.models.strata import NoseStratumDescriptor, StrataPoset, StratumDescriptor
from hstrata.services.combinatorics import all_strata, bruhat_leq, nose_strata

logger = logging.getLogger(__name__)


def build_poset(j: int, d: int) -> StrataPoset:
    """
    Nodes are keyed by tail values. An edge H -> H' means H' >= H termwise,
    i.e. the H' stratum lies in the closure of the H stratum.
    """
    strata = all_strata(j, d)
    order = nx.DiGraph()
    for s in strata:
        order.add_node(s.key, stratum=s)
    for a, b in permutations(strata, 2):
        if b.tail >= a.tail:
            order.add_edge(a.key, b.key)
    if not nx.is_directed_acyclic_graph(order):
        raise ConsistencyError(f"termwise order on ({j},{d}) tails is not antisymmetric")
    hasse = nx.transitive_reduction(order)
    hasse.add_nodes_from(order.nodes(data=True))
    logger.debug(f"poset ({j},{d}): {len(strata)} strata, {hasse.number_of_edges()} covers")
    return StrataPoset(j=j, d=d, strata=strata, order=order, hasse=hasse)


def closure_set(poset: StrataPoset, stratum: StratumDescriptor) -> List[StratumDescriptor]:
    return poset.closure_set(stratum)


def maximal_chains(poset: StrataPoset, bottom: StratumDescriptor,
                   top: StratumDescriptor) -> List[List[StratumDescriptor]]:
    """Saturated chains of covers from ``bottom`` up to ``top``."""
    lookup = {s.key: s for s in poset.strata}
    paths = nx.all_simple_paths(poset.hasse, bottom.key, top.key)
    return sorted(([lookup[k] for k in path] for path in paths), key=lambda c: [s.key for s in c])


def top_stratum(poset: StrataPoset) -> StratumDescriptor:
    sinks = [n for n in poset.order.nodes if poset.order.out_degree(n) == 0]
    if len(sinks) != 1:
        raise ConsistencyError(f"expected a unique maximal tail, found {sinks}")
    return poset.order.nodes[sinks[0]]['stratum']


def hasse_reconstructs_order(poset: StrataPoset) -> bool:
    closure = nx.transitive_closure_dag(poset.hasse)
    return set(closure.edges) == set(poset.order.edges)


def check_poset_isomorphisms(poset: StrataPoset) -> List[Dict]:
    """
    On the base-point-free strata compare the tail order with Bruhat on
    lambda, reversed Bruhat on its conjugate, and Bruhat on D. Returns the
    disagreeing pairs.
    """
    free = [s for s in poset.strata if s.c == 0]
    bad = []
    for a in free:
        for b in free:
            verdicts = {
                'tail': a.tail <= b.tail,
                'lambda': bruhat_leq(a.lam, b.lam),
                'conjugate': bruhat_leq(b.lam.conjugate(), a.lam.conjugate()),
                'D': bruhat_leq(a.D, b.D),
            }
            if len(set(verdicts.values())) != 1:
                bad.append({'j': poset.j, 'd': poset.d, 'lambda': list(a.lam), 'lambda_prime': list(b.lam),
                            'verdicts': verdicts})
    return bad


def nose_poset(j: int, d: int) -> Tuple[List[NoseStratumDescriptor], nx.DiGraph]:
    """
    Edge N -> N' when N' <= N termwise (N' lies in the closure of N);
    checked against Bruhat on A (A' >= A).
    """
    strata = nose_strata(j, d)
    order = nx.DiGraph()
    for s in strata:
        order.add_node(s.A.parts, stratum=s)
    for a, b in permutations(strata, 2):
        below = all(x <= y for x, y in zip(b.N, a.N))
        if below != bruhat_leq(a.A, b.A):
            raise ConsistencyError(f"nose order disagrees with Bruhat order for A={a.A}, A'={b.A}")
        if below:
            order.add_edge(a.A.parts, b.A.parts)
    return strata, order
