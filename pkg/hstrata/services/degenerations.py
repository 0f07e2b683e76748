"""
Specialization experiments: semicontinuity along pencils and constructive
certification of closure membership between strata.
"""

import logging
from typing import Dict, Optional, Tuple

from hstrata.models.errors import InputError
from hstrata.models.experiments import (
    OVERFLOW, RETRIES_EXHAUSTED, SUCCESS, ClosureCertificate, PencilReport,
)
from hstrata.models.fields import Field
from hstrata.models.forms import BinaryForm, FormSpace
from hstrata.models.strata import HilbertTail
from hstrata.services.binary_forms import (
    colon_space, divisor_of_degree, gcd_form, product_space, quotient_space,
)
from hstrata.services.invariants import hilbert_tail
from hstrata.utils.common import derive_rng
from hstrata.utils.linalg import Matrix, kernel_basis, row_basis

logger = logging.getLogger(__name__)


def termwise_min(tails) -> HilbertTail:
    tails = list(tails)
    n = max(len(t.values) for t in tails)
    padded = [t.padded(n) for t in tails]
    return HilbertTail(tails[0].j, tuple(min(col) for col in zip(*padded)))


def pencil_limit(V0: FormSpace, V1: FormSpace, seed: int, n_samples: int = 5) -> PencilReport:
    """
    Tails of V(t) = span(f_i + t g_i) at random t against the tail at t = 0.
    The special fibre may only jump up.
    """
    if (V0.j, V0.d) != (V1.j, V1.d):
        raise InputError(f"pencil ends differ: ({V0.j},{V0.d}) vs ({V1.j},{V1.d})")
    field = V0.field
    f_forms, g_forms = V0.forms(), V1.forms()
    rng = derive_rng(seed, 0)
    ts, tails = [], []
    while len(tails) < n_samples:
        t = field.random(rng)
        if field.is_zero(t):
            continue
        Vt = FormSpace.span(field, V0.j, [f + g.scale(t) for f, g in zip(f_forms, g_forms)])
        if Vt.d != V0.d:
            continue
        ts.append(t)
        tails.append(hilbert_tail(Vt))
    report = PencilReport(t_samples=tuple(ts), H_generic=termwise_min(tails), H_special=hilbert_tail(V0))
    if not report.semicontinuous:
        logger.error(f"semicontinuity violated: special {report.H_special} < generic {report.H_generic}")
    return report


def _random_element(field: Field, space: FormSpace, rng) -> BinaryForm:
    forms = space.forms()
    acc = BinaryForm.zero(field, space.j)
    for f in forms:
        acc = acc + f.scale(field.random(rng))
    return acc


def _linear_colon(P: FormSpace, ell: BinaryForm) -> FormSpace:
    """{h in R_(i) | ell · h in P} for P inside R_(i+1)."""
    field = P.field
    n = P.j
    image = [BinaryForm.monomial(field, n - 1, t) * ell for t in range(n)]
    # h in the colon iff [image(h); P-basis] has a kernel vector with h-part
    rows = [list(f.coeffs) for f in image] + [list(r) for r in P.basis.entries]
    K = kernel_basis(Matrix(field, rows, n + 1).transpose())
    return FormSpace(n - 1, row_basis(field, [k[:n] for k in K.entries], n))


def _cheapest_addition(W: FormSpace, rng) -> BinaryForm:
    """
    A random form outside W chosen to keep tau(W + <h>) small: inside
    R_1W : R_1 first (tau drops), then R_1W : l for a random linear l
    (tau unchanged), otherwise generic (tau grows by one).
    """
    field = W.field
    P = product_space(W, 1)
    for candidate_space in (colon_space(P, 1), None):
        if candidate_space is None:
            ell = BinaryForm(field, 1, (field.random(rng), field.random(rng)))
            if ell.is_zero():
                continue
            candidate_space = _linear_colon(P, ell)
        if candidate_space.d > W.d:
            for _ in range(8):
                h = _random_element(field, candidate_space, rng)
                if not W.contains([h]):
                    return h
    while True:
        h = BinaryForm(field, W.j, tuple(field.random(rng) for _ in range(W.j + 1)))
        if not W.contains([h]):
            return h


def _complete(V: FormSpace, target: HilbertTail, rng) -> Tuple[str, Dict[int, int], Optional[int], bool]:
    j = V.j
    c = target.c
    stable_from = j + len(target.values) - 1
    W = V
    added: Dict[int, int] = {}
    powers = V
    i = j
    while True:
        if i >= stable_from and W.d == i + 1 - c and product_space(W, 1).d == W.d + 1:
            return SUCCESS, added, None, False
        i += 1
        if i > 2 * j + 4:
            return RETRIES_EXHAUSTED, added, None, False
        required = i + 1 - target.value_at(i)
        powers = product_space(powers, 1)
        P = product_space(W, 1)
        if P.d > required:
            return OVERFLOW, added, i, powers.d > required
        count = 0
        while P.d < required:
            h = _cheapest_addition(P, rng)
            P = FormSpace.span(P.field, P.j, P.forms() + [h])
            count += 1
        if count:
            added[i] = count
        W = P


def _attempt(V: FormSpace, target: HilbertTail, rng) -> Tuple[str, Dict[int, int], Optional[int], bool]:
    """
    A target keeping c > 0 base points forces I = g' · I' with g' a degree c
    divisor of gcd(V); complete V / g' toward the base-point-free tail
    H_target - c and shift degrees back.
    """
    c = target.c
    g, c_special = gcd_form(V)
    if c == 0 or c > c_special:
        return _complete(V, target, rng)
    divisor = divisor_of_degree(g, c, rng)
    if divisor is None:
        logger.warning(f"gcd {g} has no factor of degree {c} over {V.field!r}")
        return RETRIES_EXHAUSTED, {}, None, False
    reduced = HilbertTail(V.j - c, tuple(e - c for e in target.values))
    outcome, added, degree, certified = _complete(quotient_space(V, divisor), reduced, rng)
    return (outcome, {i + c: n for i, n in added.items()},
            None if degree is None else degree + c, certified)


def certify_closure_membership(V_special: FormSpace, H_target: HilbertTail, seed: int,
                               retries: int = 10) -> ClosureCertificate:
    """
    Try to build a graded ideal I with I_j = V_special and H(R/I) = H_target,
    degree by degree. Success is expected exactly when the tail of
    V_special is termwise >= H_target.
    """
    if H_target.j != V_special.j or H_target.values[0] != V_special.j + 1 - V_special.d:
        raise InputError(f"target {H_target} is not a tail for ({V_special.j},{V_special.d})")
    cert = ClosureCertificate(V_special=V_special, target=H_target, outcome=RETRIES_EXHAUSTED)
    for attempt in range(retries):
        rng = derive_rng(seed, attempt)
        outcome, added, degree, certified = _attempt(V_special, H_target, rng)
        cert.attempts = attempt + 1
        cert.history.append(outcome if degree is None else f"{outcome}@{degree}")
        if outcome == SUCCESS:
            cert.outcome, cert.added = SUCCESS, added
            return cert
        if outcome == OVERFLOW and certified:
            cert.outcome, cert.overflow_degree, cert.certified = OVERFLOW, degree, True
            cert.added = added
            return cert
        cert.overflow_degree = degree
        logger.warning(f"closure attempt {attempt} toward {H_target}: {cert.history[-1]}, retrying")
    return cert
