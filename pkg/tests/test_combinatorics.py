import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hstrata.models.errors import EmptyStratumError, InputError, OrderUndefinedError
from hstrata.models.partition import Partition
from hstrata.models.strata import HilbertTail
from hstrata.services.combinatorics import (
    admissible_tails, all_strata, bruhat_leq, cod_in_G, cod_in_tau, cod_mu, cod_tau, conjugate, dim_GH,
    dim_GH_full, dim_GH_terms, ell_partition, enumerate_partitions, full_hilbert_function, grass_dim,
    is_admissible_tail, nose_strata, stratum_count, stratum_descriptor, tail_from_lambda,
)
from hstrata.services.invariants import lambda_of, relation_degrees

TABLE_6_3 = [
    # lambda, c, tail, dim, cod
    ((2, 2), 0, (4, 2, 0), 12, 0),
    ((3, 1), 0, (4, 2, 1, 0), 11, 1),
    ((4,), 0, (4, 3, 2, 1, 0), 9, 3),
    ((2, 1), 1, (4, 2, 1), 10, 2),
    ((3,), 1, (4, 3, 2, 1), 8, 4),
    ((1, 1), 2, (4, 2), 8, 4),
    ((2,), 2, (4, 3, 2), 7, 5),
    ((1,), 3, (4, 3), 6, 6),
    ((), 4, (4,), 4, 8),
]

partitions = st.lists(st.integers(1, 6), max_size=5).map(Partition.of)


@given(partitions)
@settings(max_examples=80)
def test_conjugate_is_an_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).size == p.size


@given(st.integers(0, 9), st.integers(1, 4))
@settings(max_examples=40)
def test_bruhat_reverses_under_conjugation(n, k):
    parts = enumerate_partitions(n, k)
    for p in parts:
        for q in parts:
            assert bruhat_leq(p, q) == bruhat_leq(q.conjugate(), p.conjugate())


def test_bruhat_needs_equal_sizes():
    assert bruhat_leq(Partition((2, 2)), Partition((3, 1)))
    assert not bruhat_leq(Partition((3, 1)), Partition((2, 2)))
    assert not bruhat_leq(Partition((4, 1, 1)), Partition((3, 3)))
    assert not bruhat_leq(Partition((3, 3)), Partition((4, 1, 1)))
    with pytest.raises(OrderUndefinedError):
        bruhat_leq(Partition((2,)), Partition((1,)))


def test_partition_validation():
    with pytest.raises(InputError):
        Partition((1, 2))
    with pytest.raises(InputError):
        Partition((2, 0))
    assert Partition.of([0, 1, 3]) == Partition((3, 1))


def test_enumerate_partitions():
    assert [p.parts for p in enumerate_partitions(4, 2)] == [(2, 2), (3, 1), (4,)]
    assert [p.parts for p in enumerate_partitions(4, 2, exact=True)] == [(2, 2), (3, 1)]
    assert enumerate_partitions(0, 3) == [Partition()]
    assert enumerate_partitions(-1, 3) == []


@pytest.mark.parametrize("lam,c,tail,dim,cod", TABLE_6_3)
def test_table_6_3_rows(lam, c, tail, dim, cod):
    s = stratum_descriptor(6, 3, Partition(lam), c)
    assert s.tail.values == tail
    assert s.dim_stratum == dim
    assert s.cod_in_G == cod
    assert s.tau == len(lam) + 1
    assert lambda_of(s.tail) == (Partition(lam), c)


def test_table_6_3_order_and_count():
    strata = all_strata(6, 3)
    assert [(s.lam.parts, s.c) for s in strata] == [(row[0], row[1]) for row in TABLE_6_3]
    assert stratum_count(6, 3) == 9


def test_table_8_3_dimensions():
    dims = [s.dim_stratum for s in all_strata(8, 3)]
    assert dims == [18, 17, 15, 13, 16, 14, 12, 14, 13, 11, 12, 10, 10, 9, 8, 6]


def test_base_point_free_relation_degrees_8_3():
    free = [s.D.parts for s in all_strata(8, 3) if s.c == 0]
    assert free == [(4, 4), (5, 3), (6, 2), (7, 1)]


def test_worked_dimension_count():
    tail = HilbertTail(8, (6, 4, 3, 2, 1, 0))
    assert dim_GH(tail) == 15
    assert dim_GH_terms(tail) == [(3, 2), (3, 1), (2, 1), (2, 1), (2, 1)]


def test_full_hilbert_function_and_general_dimension():
    tail = HilbertTail(6, (4, 2, 0))
    assert full_hilbert_function(tail) == (1, 2, 3, 4, 5, 6, 4, 2, 0)
    # a quadric and a cubic: H = (1, 2, 2, 1, 0)
    assert dim_GH_full([1, 2, 2, 1, 0]) == 3
    with pytest.raises(InputError):
        dim_GH_full([1, 2, 3])


@pytest.mark.parametrize("j,d", [(j, d) for j in range(1, 11) for d in range(1, j + 2)])
def test_dimension_identities(j, d):
    for s in all_strata(j, d):
        assert s.dim_stratum + s.cod_in_G == grass_dim(j, d)
        assert s.cod_in_G == s.cod_tau + s.cod_in_tau
        assert s.D == relation_degrees(s.lam, d)
        assert s.D.size == j - s.c


def test_admissible_tails_match_criterion():
    tails = admissible_tails(8, 3)
    assert len(tails) == 16
    assert all(is_admissible_tail(t, 3) for t in tails)
    # e_(j+2) > e_(j+1): not a Hilbert function tail
    assert not is_admissible_tail(HilbertTail(8, (6, 5, 3, 0)), 3)
    # tau = 4 exceeds d = 3
    assert not is_admissible_tail(HilbertTail(8, (6, 3, 0)), 3)


def test_codimension_formulas():
    assert cod_in_G(Partition((5, 1)), 0, 3) == 3
    assert cod_in_G(Partition((3, 1)), 2, 3) == 5
    assert cod_tau(6, 3, 2) == 3
    assert cod_tau(6, 3, 3) == 0
    assert ell_partition(Partition((3, 1)), 0, 3) == 1
    assert cod_in_tau(Partition((2,)), 2) == 2
    with pytest.raises(EmptyStratumError):
        cod_tau(6, 3, 4)
    with pytest.raises(InputError):
        cod_in_G(Partition((5,)), 0, 3)


def test_tail_from_lambda_rejects_bad_labels():
    with pytest.raises(InputError):
        tail_from_lambda(Partition((2, 1, 1)), 0, 6, 3)
    with pytest.raises(InputError):
        tail_from_lambda(Partition((3,)), 0, 6, 3)


def test_single_stratum_when_d_is_j_plus_1():
    strata = all_strata(4, 5)
    assert len(strata) == 1
    assert strata[0].tail.values == (0,)
    assert strata[0].dim_stratum == 0


NOSE_9_4 = [
    ((1, 1, 1, 1), 4, 0, (7, 8, 9, 6), (0, 0, 0, 4), 24),
    ((2, 1, 1), 3, 0, (7, 8, 8, 6), (0, 0, 1, 4), 20),
    ((2, 2), 2, 0, (7, 8, 7, 6), (0, 0, 2, 4), 14),
    ((3, 1), 2, 0, (7, 7, 7, 6), (0, 1, 2, 4), 13),
    ((4,), 1, 6, (6, 6, 6, 6), (1, 2, 3, 4), 6),
]


def test_nose_strata_9_4():
    rows = nose_strata(9, 4)
    assert len(rows) == len(NOSE_9_4)
    for s, (A, tau, c, N, dims, dim) in zip(rows, NOSE_9_4):
        assert s.A == Partition(A)
        assert (s.tau, s.c, s.dim) == (tau, c, dim)
        assert s.window(6) == N
        assert s.ancestor_dims[6:] == dims
        assert s.N[:6] == (1, 2, 3, 4, 5, 6)


@pytest.mark.parametrize("n,mu,cod", [(6, 2, 1), (6, 3, 0), (5, 0, 4), (7, 3, 0)])
def test_cod_mu(n, mu, cod):
    assert cod_mu(n, mu) == cod
