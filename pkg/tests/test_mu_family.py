import pytest

from hstrata.models.errors import InputError
from hstrata.services.mu_family import dim_by_codimension, dim_by_direct_count, mu_family_dims


@pytest.mark.parametrize("n,mu,dim", [(6, 2, 20), (6, 3, 21), (5, 0, 14), (5, 2, 18)])
def test_worked_values(n, mu, dim):
    assert dim_by_codimension(n, mu) == dim
    assert dim_by_direct_count(n, mu) == dim


@pytest.mark.parametrize("n", range(1, 21))
def test_counts_agree(n):
    rows = mu_family_dims(n)
    assert [r['mu'] for r in rows] == list(range(n // 2 + 1))
    assert all(r['agree'] for r in rows)
    assert all(r['D'][0] + r['D'][1] == n for r in rows)


def test_closure_chain_is_downward():
    rows = mu_family_dims(7)
    assert rows[3]['closure'] == [0, 1, 2, 3]
    assert rows[0]['closure'] == [0]
    dims = [r['dim_theorem'] for r in rows]
    assert dims == sorted(dims)


def test_rejects_degree_zero():
    with pytest.raises(InputError):
        mu_family_dims(0)
