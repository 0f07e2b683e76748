"""
Multiplication maps, gcd, colon spaces and the ancestor ideal of V ⊂ R_j.

Coefficient lists double as univariate polynomials in y (index = power of y),
and form multiplication is exactly their convolution.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Poly, Rational, Symbol

from hstrata.models.errors import ConsistencyError, InputError
from hstrata.models.fields import Field, PrimeField, RationalField
from hstrata.models.forms import BinaryForm, FormSpace, GradedIdealSlice
from hstrata.utils.linalg import Matrix, kernel_basis, row_basis

logger = logging.getLogger(__name__)

_Y = Symbol("y")


def product_space(V: FormSpace, s: int) -> FormSpace:
    """R_s · V inside R_(j+s)."""
    if s < 0:
        raise InputError(f"negative multiplier degree {s}")
    if s == 0:
        return V
    rows = []
    for f in V.forms():
        for t in range(s + 1):
            rows.append(f.shift(s, t).coeffs)
    return FormSpace(V.j + s, row_basis(V.field, rows, V.j + s + 1))


def _trim(poly: List, field: Field) -> List:
    poly = list(poly)
    while poly and field.is_zero(poly[-1]):
        poly.pop()
    return poly


def _poly_divmod(field: Field, a: Sequence, b: Sequence) -> Tuple[List, List]:
    a = _trim(a, field)
    b = _trim(b, field)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    q = [field.zero()] * (len(a) - len(b) + 1)
    r = list(a)
    inv_lead = field.inv(b[-1])
    for shift in range(len(a) - len(b), -1, -1):
        coef = field.mul(r[shift + len(b) - 1], inv_lead)
        q[shift] = coef
        if field.is_zero(coef):
            continue
        for i, bc in enumerate(b):
            r[shift + i] = field.sub(r[shift + i], field.mul(coef, bc))
    return _trim(q, field), _trim(r[:len(b) - 1], field)


def _poly_gcd(field: Field, a: Sequence, b: Sequence) -> List:
    a, b = _trim(a, field), _trim(b, field)
    while b:
        _, r = _poly_divmod(field, a, b)
        a, b = b, r
    if not a:
        return []
    inv = field.inv(a[-1])
    return [field.mul(c, inv) for c in a]


def gcd_form(V: FormSpace) -> Tuple[BinaryForm, int]:
    """Monic gcd of the basis of V and its degree c (the number of base points)."""
    field = V.field
    forms = V.forms()
    if not forms:
        raise InputError("gcd of the zero space is undefined")
    v = min(f.x_valuation() for f in forms)
    u: List = []
    for f in forms:
        cofactor = list(f.coeffs[:V.j - v + 1])
        u = _poly_gcd(field, u, cofactor) if u else _poly_gcd(field, cofactor, [])
        if len(u) == 1:
            break
    e = len(u) - 1
    g = BinaryForm(field, v + e, tuple(u) + (field.zero(),) * v)
    return g, g.degree


def divide_form(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Exact quotient f / g; raises when g does not divide f."""
    field = f.field
    if g.degree > f.degree:
        raise ConsistencyError(f"cannot divide degree {f.degree} by degree {g.degree}")
    q, r = _poly_divmod(field, f.coeffs, g.coeffs)
    qdeg = f.degree - g.degree
    if r or len(q) > qdeg + 1:
        raise ConsistencyError("form is not divisible by the gcd")
    q = q + [field.zero()] * (qdeg + 1 - len(q))
    return BinaryForm(field, qdeg, tuple(q))


def quotient_space(V: FormSpace, g: BinaryForm) -> FormSpace:
    """V : g, the span of the cofactors of V by a common divisor g."""
    return FormSpace.span(V.field, V.j - g.degree, [divide_form(f, g) for f in V.forms()])


def _factor_in_sympy(field: Field, poly: Sequence) -> Poly:
    high_first = list(reversed(poly))
    if isinstance(field, PrimeField):
        return Poly([int(c) for c in high_first], _Y, modulus=field.p)
    if isinstance(field, RationalField):
        return Poly([Rational(c.numerator, c.denominator) for c in high_first], _Y, domain='QQ')
    raise InputError(f"cannot factor forms over {field!r}")


def irreducible_factors(g: BinaryForm) -> List[BinaryForm]:
    """Irreducible factors of a nonzero form over its own field, repeated by multiplicity; units dropped."""
    if g.is_zero():
        raise InputError("the zero form has no factorization")
    field = g.field
    v = g.x_valuation()
    factors = [BinaryForm.monomial(field, 1, 0)] * v
    cofactor = _trim(g.coeffs, field)
    if len(cofactor) > 1:
        _, pairs = _factor_in_sympy(field, cofactor).factor_list()
        for q, multiplicity in pairs:
            low_first = [field.coerce(Fraction(str(c))) for c in reversed(q.all_coeffs())]
            factors.extend([BinaryForm(field, len(low_first) - 1, tuple(low_first))] * multiplicity)
    return factors


def divisor_of_degree(g: BinaryForm, k: int, rng) -> Optional[BinaryForm]:
    """
    A divisor of g of degree k built from its irreducible factors, the
    factors visited in random order. None when no such divisor exists
    over the field of g.
    """
    field = g.field
    factors = irreducible_factors(g)
    factors = [factors[i] for i in rng.permutation(len(factors))]
    reachable: Dict[int, List[int]] = {0: []}
    for idx, f in enumerate(factors):
        for total, picked in list(reachable.items()):
            if total + f.degree <= k and total + f.degree not in reachable:
                reachable[total + f.degree] = picked + [idx]
    if k not in reachable:
        return None
    divisor = BinaryForm.monomial(field, 0, 0)
    for idx in reachable[k]:
        divisor = divisor * factors[idx]
    return divisor


def _residual_columns(V: FormSpace) -> Tuple[List[int], List[List]]:
    """
    For each monomial e_q of R_j, the coordinates of e_q modulo V on the
    non-pivot columns of V's reduced basis.
    """
    field = V.field
    _, _, pivots = _rref_pivots(V)
    pivot_row = {p: i for i, p in enumerate(pivots)}
    free = [c for c in range(V.j + 1) if c not in pivot_row]
    residuals = []
    for q in range(V.j + 1):
        if q in pivot_row:
            row = V.basis.entries[pivot_row[q]]
            residuals.append([field.neg(row[c]) for c in free])
        else:
            residuals.append([field.one() if c == q else field.zero() for c in free])
    return free, residuals


def _rref_pivots(V: FormSpace):
    pivots = []
    for row in V.basis.entries:
        pivots.append(next(i for i, x in enumerate(row) if not V.field.is_zero(x)))
    return V.d, V.basis, pivots


def colon_space(V: FormSpace, k: int) -> FormSpace:
    """V : R_k = {f in R_(j-k) | R_k · f ⊂ V}."""
    if not 0 <= k <= V.j:
        raise InputError(f"colon degree {k} outside 0..{V.j}")
    if k == 0:
        return V
    field = V.field
    n = V.j - k + 1
    free, residuals = _residual_columns(V)
    if not free:
        return FormSpace.full(field, V.j - k)
    rows = []
    for t in range(k + 1):
        for ci in range(len(free)):
            rows.append([residuals[a + t][ci] for a in range(n)])
    kernel = kernel_basis(Matrix(field, rows, n))
    return FormSpace(V.j - k, row_basis(field, kernel.entries, n))


def ancestor_ideal(V: FormSpace) -> GradedIdealSlice:
    """Components V : R_(j-i) of the ancestor ideal in degrees 0..j."""
    components = {V.j - k: colon_space(V, k) for k in range(V.j + 1)}
    return GradedIdealSlice(0, V.j, components)
