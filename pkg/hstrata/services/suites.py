"""
Verification suites. Each returns a JSON-ready summary
``{'suite', 'passed', 'checks', 'failures', ...}``; failures carry enough
data to replay the counterexample.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from hstrata.models.errors import ConsistencyError, HstrataError, InputError
from hstrata.models.fields import Field, PrimeField
from hstrata.models.partition import Partition
from hstrata.services.combinatorics import (
    admissible_tails, all_strata, bruhat_leq, dim_GH, grass_dim, stratum_count,
)
from hstrata.services.degenerations import certify_closure_membership, pencil_limit
from hstrata.services.invariants import (
    degrees_from_hilbert_tail, hilbert_burch_span, hilbert_tail, mu_basis,
)
from hstrata.services.mu_family import mu_family_dims
from hstrata.services.poset import build_poset, check_poset_isomorphisms, hasse_reconstructs_order
from hstrata.services.sampling import (
    DEFAULT_MAX_RESAMPLES, jacobian_rank_dim, random_form_space, sample_hilbert_burch,
)
from hstrata.utils.common import derive_rng, trial_seed

logger = logging.getLogger(__name__)

EXPERIMENT_SHAPES: Tuple[Tuple[int, int], ...] = ((6, 3), (8, 3), (9, 4))
CLOSURE_SHAPES: Tuple[Tuple[int, int], ...] = ((6, 3), (8, 3))
# (lambda, lambda') pairs that no order predicate may compare
INCOMPARABLE_PAIRS = {(9, 4): [((4, 1, 1), (3, 3))]}
HITTING_RATE = 0.99


def _summary(suite: str, checks: int, failures: List[Dict], **extra) -> Dict:
    summary = {'suite': suite, 'passed': not failures, 'checks': checks, 'failures': failures}
    summary.update(extra)
    level = logging.INFO if not failures else logging.ERROR
    logger.log(level, f"suite {suite}: {checks} checks, {len(failures)} failures")
    return summary


def _shapes(j: Optional[int], d: Optional[int], default: Sequence[Tuple[int, int]]):
    if j is not None and d is not None:
        return [(j, d)]
    return list(default)


def run_orders(max_j: int = 12, **_) -> Dict:
    """
    Exhaustive over 1 <= d <= j+1 <= max_j+1: the four order predicates
    agree, the dimension identities hold and the Hasse diagram rebuilds
    the order.
    """
    failures, checks = [], 0
    for j in range(1, max_j + 1):
        for d in range(1, j + 2):
            try:
                poset = build_poset(j, d)
                admissible_tails(j, d)
            except ConsistencyError as e:
                failures.append({'j': j, 'd': d, 'error': str(e)})
                continue
            checks += 1
            if len(poset.strata) != stratum_count(j, d):
                failures.append({'j': j, 'd': d, 'error': 'stratum count mismatch'})
            for s in poset.strata:
                checks += 1
                if s.dim_stratum + s.cod_in_G != grass_dim(j, d) or s.cod_in_G != s.cod_tau + s.cod_in_tau:
                    failures.append({'j': j, 'd': d, 'lambda': list(s.lam), 'c': s.c,
                                     'error': 'dimension identity'})
            checks += 1
            failures.extend(check_poset_isomorphisms(poset))
            if not hasse_reconstructs_order(poset):
                failures.append({'j': j, 'd': d, 'error': 'transitive closure of covers differs from order'})
    for (j, d), pairs in INCOMPARABLE_PAIRS.items():
        if j > max_j:
            continue
        poset = build_poset(j, d)
        for a, b in pairs:
            checks += 1
            sa, sb = poset.by_lambda(Partition(a), 0), poset.by_lambda(Partition(b), 0)
            comparable = (sa.tail <= sb.tail or sb.tail <= sa.tail
                          or bruhat_leq(sa.lam, sb.lam) or bruhat_leq(sb.lam, sa.lam))
            if comparable:
                failures.append({'j': j, 'd': d, 'lambda': list(a), 'lambda_prime': list(b),
                                 'error': 'expected an incomparable pair'})
    return _summary('orders', checks, failures, max_j=max_j)


def run_dims(j: int = None, d: int = None, seeds: int = 5, seed: int = 0,
             field: Field = None, max_resamples: int = DEFAULT_MAX_RESAMPLES, **_) -> Dict:
    """Jacobian rank of the minors map against d(j+1) - l(D) on every base-point-free stratum."""
    field = field or PrimeField()
    failures, checks, ranks = [], 0, []
    for jj, dd in _shapes(j, d, EXPERIMENT_SHAPES):
        for s in all_strata(jj, dd):
            if s.c != 0 or dd < 2:
                continue
            expected = dd * (jj + 1) - s.cod_in_G
            observed = [jacobian_rank_dim(jj, dd, s.D, trial_seed(seed, k), field, max_resamples)
                        for k in range(seeds)]
            checks += 1
            ranks.append({'j': jj, 'd': dd, 'D': list(s.D), 'expected': expected, 'ranks': observed})
            if any(r != expected for r in observed):
                failures.append({'j': jj, 'd': dd, 'D': list(s.D), 'expected': expected,
                                 'ranks': observed, 'seed': seed})
            if dim_GH(s.tail) + s.cod_in_G != grass_dim(jj, dd):
                failures.append({'j': jj, 'd': dd, 'D': list(s.D), 'error': 'dim_GH + l(D) != dim G'})
    return _summary('dims', checks, failures, ranks=ranks)


def run_oracle(j: int = None, d: int = None, trials: int = 1000, seed: int = 0,
               field: Field = None, max_resamples: int = DEFAULT_MAX_RESAMPLES, **_) -> Dict:
    """Relation degrees from the syzygies against those read off the tail; minors rebuild V."""
    field = field or PrimeField()
    failures, checks = [], 0
    for jj, dd in _shapes(j, d, EXPERIMENT_SHAPES):
        for s in all_strata(jj, dd):
            if dd < 2:
                continue
            for t in range(trials):
                ts = trial_seed(seed, jj, dd, s.c, *s.lam, t)
                sample = sample_hilbert_burch(jj, dd, s.D, s.c, ts, field, max_resamples)
                M = mu_basis(sample.V)
                checks += 1
                from_syzygies = M.col_degrees
                from_tail = degrees_from_hilbert_tail(sample.V, sample.tail)
                if from_syzygies != from_tail or hilbert_burch_span(M) != sample.V:
                    failures.append({'j': jj, 'd': dd, 'D': list(s.D), 'c': s.c, 'seed': ts,
                                     'syzygy_degrees': list(from_syzygies), 'tail_degrees': list(from_tail)})
    return _summary('oracle', checks, failures)


def run_hitting(j: int = None, d: int = None, trials: int = 1000, seed: int = 0,
                field: Field = None, min_rate: float = HITTING_RATE, **_) -> Dict:
    """Unconstrained random spaces land in the dense stratum (balanced lambda, c = 0)."""
    field = field or PrimeField()
    failures, checks, rates = [], 0, []
    for jj, dd in _shapes(j, d, EXPERIMENT_SHAPES):
        dense = next(s for s in all_strata(jj, dd) if s.cod_in_G == 0)
        misses: Dict[Tuple[int, ...], int] = {}
        for t in range(trials):
            tail = hilbert_tail(random_form_space(field, jj, dd, derive_rng(seed, jj, dd, t)))
            if tail != dense.tail:
                misses[tail.values] = misses.get(tail.values, 0) + 1
        checks += 1
        rate = 1 - sum(misses.values()) / trials if trials else 1.0
        rates.append({'j': jj, 'd': dd, 'tail': list(dense.tail.values), 'rate': rate})
        if rate < min_rate:
            failures.append({'j': jj, 'd': dd, 'rate': rate, 'seed': seed,
                             'misses': [{'tail': list(k), 'count': n} for k, n in sorted(misses.items())]})
    return _summary('hitting', checks, failures, rates=rates)


def run_semicontinuity(j: int = None, d: int = None, trials: int = 5000, seed: int = 0,
                       field: Field = None, max_resamples: int = DEFAULT_MAX_RESAMPLES, **_) -> Dict:
    """Pencils from a sampled special space toward a random one never drop the tail."""
    field = field or PrimeField()
    failures, checks = [], 0
    for jj, dd in _shapes(j, d, CLOSURE_SHAPES):
        strata = all_strata(jj, dd)
        for t in range(trials):
            rng = derive_rng(seed, jj, dd, t)
            s = strata[int(rng.integers(0, len(strata)))]
            ts = trial_seed(seed, jj, dd, t)
            V0 = sample_hilbert_burch(jj, dd, s.D, s.c, ts, field, max_resamples).V
            V1 = random_form_space(field, jj, dd, rng)
            report = pencil_limit(V0, V1, ts)
            checks += 1
            if not report.semicontinuous:
                failures.append({'j': jj, 'd': dd, 'seed': ts, 'special': list(report.H_special.values),
                                 'generic': list(report.H_generic.values)})
    return _summary('semicontinuity', checks, failures)


def run_closure(j: int = None, d: int = None, seeds: int = 3, seed: int = 0, retries: int = 10,
                field: Field = None, max_resamples: int = DEFAULT_MAX_RESAMPLES, **_) -> Dict:
    """
    Certification outcome on every ordered stratum pair against the
    termwise order. A pair fails only if it disagrees under every seed.
    """
    field = field or PrimeField()
    failures, checks, matrix = [], 0, []
    for jj, dd in _shapes(j, d, CLOSURE_SHAPES):
        strata = all_strata(jj, dd)
        disagreements: Dict[Tuple, List[Dict]] = {}
        for k in range(seeds):
            master = trial_seed(seed, k)
            for s in strata:
                V = sample_hilbert_burch(jj, dd, s.D, s.c, trial_seed(master, s.c, *s.lam), field, max_resamples).V
                for t in strata:
                    expected = s.tail >= t.tail
                    cert = certify_closure_membership(V, t.tail, trial_seed(master, *t.tail.values), retries)
                    checks += 1
                    if k == 0:
                        matrix.append({'j': jj, 'd': dd, 'special': list(s.tail.values),
                                       'target': list(t.tail.values), 'expected': expected,
                                       'outcome': cert.outcome})
                    if cert.succeeded != expected:
                        logger.warning(f"closure ({jj},{dd}) {s.tail} -> {t.tail}: {cert.outcome}, "
                                       f"expected {'success' if expected else 'failure'}")
                        disagreements.setdefault((s.key, t.key), []).append(
                            {'master_seed': master, 'outcome': cert.outcome, 'history': cert.history})
        for (a, b), runs in disagreements.items():
            if len(runs) == seeds:
                failures.append({'j': jj, 'd': dd, 'special': list(a), 'target': list(b), 'runs': runs})
    return _summary('closure', checks, failures, matrix=matrix)


def run_mu(max_n: int = 20, **_) -> Dict:
    failures, checks, rows = [], 0, []
    for n in range(1, max_n + 1):
        for row in mu_family_dims(n):
            checks += 1
            rows.append(row)
            if not row['agree']:
                failures.append(row)
    return _summary('mu', checks, failures, rows=rows)


def run_suite(fn, **params) -> Dict:
    """Run one suite; internal errors become a failed summary instead of escaping."""
    try:
        return fn(**params)
    except InputError:
        raise
    except HstrataError as e:
        logger.error(f"suite {fn.__name__} aborted: {e}")
        return _summary(fn.__name__.replace('run_', ''), 0, [{'error': str(e), 'type': type(e).__name__}])
