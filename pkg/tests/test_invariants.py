import pytest

from hstrata.models.errors import InputError
from hstrata.models.forms import BinaryForm, FormSpace
from hstrata.models.partition import Partition
from hstrata.models.strata import HilbertTail
from hstrata.services.binary_forms import gcd_form, product_space
from hstrata.services.combinatorics import all_strata
from hstrata.services.invariants import (
    ancestor_dims, degrees_from_hilbert_tail, degrees_from_syzygy_oracle, hilbert_burch_span, hilbert_tail,
    lambda_of, mu_basis, nose, relation_degrees, signed_minors, signed_minors_of, tail_reconstruction, tau,
    tau_from_ancestor,
)
from hstrata.services.sampling import random_form, random_form_space, sample_hilbert_burch
from hstrata.utils.common import derive_rng

from conftest import monomials


@pytest.fixture
def x6_x5y_y6(qq):
    return monomials(qq, 6, [0, 1, 6])


@pytest.fixture
def hb_4_2(qq):
    """Signed minors of [[x^4, 0], [y^4, x^2], [0, y^2]]: <y^6, -x^4 y^2, x^6>."""
    m = lambda t, deg: BinaryForm.monomial(qq, deg, t)
    zero = lambda deg: BinaryForm.zero(qq, deg)
    matrix = [[m(0, 4), zero(2)], [m(4, 4), m(0, 2)], [zero(4), m(2, 2)]]
    minors = signed_minors_of(matrix, [4, 2], qq)
    return FormSpace.span(qq, 6, minors)


def test_tail_of_monomial_space(x6_x5y_y6):
    tail = hilbert_tail(x6_x5y_y6)
    assert tail.values == (4, 3, 2, 1, 0)
    assert tau(x6_x5y_y6) == 2
    lam, c = lambda_of(tail)
    assert (lam, c) == (Partition((4,)), 0)
    assert relation_degrees(lam, 3) == Partition((5, 1))


def test_tail_of_whole_degree(qq):
    tail = hilbert_tail(FormSpace.full(qq, 2))
    assert tail.values == (0,)
    assert lambda_of(tail) == (Partition(), 0)


def test_base_points_show_up_as_stable_value(qq):
    V = monomials(qq, 6, [0, 3, 5])   # x · <x^5, x^2 y^3, y^5>
    tail = hilbert_tail(V)
    assert tail.c == 1
    assert mu_basis(V).c == 1


def test_zero_space_has_no_tail(qq):
    with pytest.raises(InputError):
        hilbert_tail(FormSpace.zero_space(qq, 3))


def test_hilbert_burch_example(hb_4_2):
    assert hilbert_tail(hb_4_2).values == (4, 2, 1, 0)
    assert tau(hb_4_2) == 3
    M = mu_basis(hb_4_2)
    assert M.col_degrees == Partition((4, 2))
    assert degrees_from_syzygy_oracle(hb_4_2) == degrees_from_hilbert_tail(hb_4_2)
    assert hilbert_burch_span(M) == hb_4_2
    assert len(signed_minors(M)) == 3


def test_mu_basis_columns_are_relations(hb_4_2):
    M = mu_basis(hb_4_2)
    forms = hb_4_2.forms()
    for col, deg in zip(M.columns, M.col_degrees):
        total = BinaryForm.zero(hb_4_2.field, 6 + deg)
        for a, f in zip(col, forms):
            total = total + a * f
        assert total.is_zero()


def test_mu_basis_of_single_form(qq):
    V = monomials(qq, 3, [1])
    M = mu_basis(V)
    assert M.col_degrees == Partition()
    assert M.c == 3


def test_nose_of_monomial_space(x6_x5y_y6):
    N, A = nose(x6_x5y_y6)
    assert N == (1, 2, 3, 4, 5, 5, 4)
    assert A == Partition((2, 1))
    assert tau_from_ancestor(x6_x5y_y6) == tau(x6_x5y_y6) == len(A)


def test_nose_of_hilbert_burch_example(hb_4_2):
    N, A = nose(hb_4_2)
    assert A == Partition((1, 1, 1))
    assert N[-1] == 4
    assert tau_from_ancestor(hb_4_2) == 3


def test_relation_degrees_pad_with_ones():
    assert relation_degrees(Partition(), 3) == Partition((1, 1))
    assert relation_degrees(Partition((2,)), 4) == Partition((3, 1, 1))
    with pytest.raises(InputError):
        relation_degrees(Partition((1, 1, 1)), 3)


def test_tail_reconstruction():
    assert tail_reconstruction(Partition((3, 1)), 0, 4) == (4, 2, 1, 0)
    assert tail_reconstruction(Partition((1, 1)), 2, 2) == (4, 2)


def test_hilbert_tail_collapses_repeats():
    tail = HilbertTail(6, (4, 2, 2, 2))
    assert tail.values == (4, 2)
    assert tail.value_at(10) == 2
    assert tail.differences() == (2,)


def _first_differences(N):
    return [a - b for a, b in zip(N, N[1:])]


def test_nose_of_generic_space(fp):
    V = random_form_space(fp, 9, 4, derive_rng(31))
    N, A = nose(V)
    assert A == Partition((1, 1, 1, 1))
    assert ancestor_dims(V)[6:] == (0, 0, 0, 4)
    assert N == (1, 2, 3, 4, 5, 6, 7, 8, 9, 6)


def test_nose_of_multiples_of_a_sextic(fp):
    f = random_form(fp, 6, derive_rng(32))
    V = FormSpace.span(fp, 9, [f * BinaryForm.monomial(fp, 3, t) for t in range(4)])
    N, A = nose(V)
    assert A == Partition((4,))
    assert ancestor_dims(V)[6:] == (1, 2, 3, 4)
    assert tau_from_ancestor(V) == tau(V) == 1


def test_nose_with_one_octic_ancestor_generator(fp):
    rng = derive_rng(33)
    F = FormSpace.span(fp, 8, [random_form(fp, 8, rng)])
    V = FormSpace.span(fp, 9, product_space(F, 1).forms() + [random_form(fp, 9, rng) for _ in range(2)])
    N, A = nose(V)
    assert ancestor_dims(V)[6:] == (0, 0, 1, 4)
    assert N == (1, 2, 3, 4, 5, 6, 7, 8, 8, 6)
    assert A == Partition((2, 1, 1))


@pytest.mark.parametrize("j,d", [(8, 3), (9, 4)])
def test_nose_and_gcd_agree_with_tail_on_samples(j, d):
    for s in all_strata(j, d):
        V = sample_hilbert_burch(j, d, s.D, s.c, seed=40).V
        N, A = nose(V)
        assert A.size == d
        assert len(A) == tau(V)
        diffs = _first_differences(N)
        assert diffs == sorted(diffs)
        assert gcd_form(V)[1] == hilbert_tail(V).c == s.c
