import pytest

from hstrata.models.errors import ConsistencyError, InputError
from hstrata.models.fields import PrimeField
from hstrata.models.forms import BinaryForm, FormSpace
from hstrata.services.binary_forms import (
    ancestor_ideal, colon_space, divide_form, divisor_of_degree, gcd_form, irreducible_factors, product_space,
    quotient_space,
)
from hstrata.utils.common import derive_rng

from conftest import monomials, space


def test_form_arithmetic(qq):
    f = BinaryForm.from_ints(qq, [1, 1])      # x + y
    g = BinaryForm.from_ints(qq, [1, -1])     # x - y
    assert (f * g).coeffs == (1, 0, -1)
    assert f.shift(2, 1).coeffs == (0, 1, 1, 0)
    assert BinaryForm.monomial(qq, 3, 3).x_valuation() == 0
    assert BinaryForm.monomial(qq, 3, 0).x_valuation() == 3
    with pytest.raises(InputError):
        BinaryForm(qq, 2, (1, 2))


def test_product_space(qq):
    V = monomials(qq, 2, [0])
    W = product_space(V, 1)
    assert (W.j, W.d) == (3, 2)
    assert W.contains([BinaryForm.monomial(qq, 3, 1)])
    assert product_space(V, 0) == V


def test_product_space_of_full_space_is_full(qq):
    assert product_space(FormSpace.full(qq, 3), 2) == FormSpace.full(qq, 5)


def test_gcd_counts_base_points(qq):
    # x · <x^5, x^2 y^3, y^5>
    V = monomials(qq, 6, [0, 3, 5])
    g, c = gcd_form(V)
    assert c == 1
    assert g.coeffs == (1, 0)


def test_gcd_of_linear_factor(qq):
    x_plus_y = BinaryForm.from_ints(qq, [1, 1])
    V = FormSpace.span(qq, 2, [x_plus_y * BinaryForm.monomial(qq, 1, t) for t in range(2)])
    g, c = gcd_form(V)
    assert c == 1
    assert g.coeffs[0] == g.coeffs[1]
    W = quotient_space(V, g)
    assert W == FormSpace.full(qq, 1)


def test_gcd_of_base_point_free_space(qq):
    V = monomials(qq, 4, [0, 4])
    assert gcd_form(V)[1] == 0


def test_divide_form_rejects_non_divisors(qq):
    f = BinaryForm.from_ints(qq, [1, 0, 1])   # x^2 + y^2
    with pytest.raises(ConsistencyError):
        divide_form(f, BinaryForm.from_ints(qq, [1, 1]))


def test_colon_space(qq):
    V = monomials(qq, 2, [0, 1])              # <x^2, xy>
    assert colon_space(V, 1) == monomials(qq, 1, [0])
    assert colon_space(V, 2).d == 0
    assert colon_space(FormSpace.full(qq, 4), 3) == FormSpace.full(qq, 1)
    with pytest.raises(InputError):
        colon_space(V, 3)


def test_colon_space_over_prime_field(small_fp):
    V = space(small_fp, 3, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])
    assert colon_space(V, 1) == monomials(small_fp, 2, [0, 1])


def test_ancestor_ideal_dimensions(qq):
    # <x^6, x^5 y, y^6>: only x^5 survives one colon step
    V = monomials(qq, 6, [0, 1, 6])
    slice_ = ancestor_ideal(V)
    assert slice_.dims() == [0, 0, 0, 0, 0, 1, 3]
    assert slice_.component(5) == monomials(qq, 5, [0])
    assert slice_.generator_counts()[5] == 1
    assert slice_.generator_counts()[6] == 1


def test_ancestor_ideal_is_an_ideal(fp):
    V = space(fp, 5, [[1, 2, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0], [0, 0, 0, 1, 1, 0], [0, 0, 0, 0, 0, 1]])
    slice_ = ancestor_ideal(V)
    for i in range(1, 6):
        lower, upper = slice_.component(i - 1), slice_.component(i)
        if lower.d:
            assert upper.contains_space(product_space(lower, 1))


def _same_up_to_scalar(f, g):
    return FormSpace.span(f.field, f.degree, [f]) == FormSpace.span(g.field, g.degree, [g])


def test_irreducible_factors_over_rationals(qq):
    g = BinaryForm.from_ints(qq, [1, 0, -1, 0])   # x (x - y)(x + y)
    factors = irreducible_factors(g)
    assert sorted(f.degree for f in factors) == [1, 1, 1]
    product = factors[0] * factors[1] * factors[2]
    assert _same_up_to_scalar(product, g)


def test_sum_of_squares_splits_only_where_minus_one_is_a_square():
    assert [f.degree for f in irreducible_factors(BinaryForm.from_ints(PrimeField(7), [1, 0, 1]))] == [2]
    assert sorted(f.degree for f in irreducible_factors(BinaryForm.from_ints(PrimeField(5), [1, 0, 1]))) == [1, 1]


def test_repeated_factors_keep_multiplicity(qq):
    x_plus_y = BinaryForm.from_ints(qq, [1, 1])
    g = x_plus_y * x_plus_y * BinaryForm.monomial(qq, 1, 0)
    assert len(irreducible_factors(g)) == 3


def test_divisor_of_degree(qq):
    g = BinaryForm.from_ints(qq, [1, 0, -1, 0])
    divisor = divisor_of_degree(g, 2, derive_rng(0))
    assert divisor.degree == 2
    assert divide_form(g, divisor).degree == 1
    assert divisor_of_degree(g, 0, derive_rng(0)).degree == 0
    assert divisor_of_degree(g, 4, derive_rng(0)) is None


def test_no_linear_divisor_over_small_prime():
    g = BinaryForm.from_ints(PrimeField(7), [1, 0, 1])
    assert divisor_of_degree(g, 1, derive_rng(3)) is None
    assert _same_up_to_scalar(divisor_of_degree(g, 2, derive_rng(3)), g)
