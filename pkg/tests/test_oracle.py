import pytest

from growthbound.oracle import CountTable, OracleBudgetExceeded, count_fixed, enumerate_fixed
from growthbound.polyalg import series_diagonal
from growthbound.bounds import general_weight_formula


def test_small_counts():
    t2 = count_fixed(2, 3)
    assert t2.counts == (1, 2, 6)
    assert count_fixed(3, 2)[2] == 3


@pytest.mark.parametrize("d,n_max", [(2, 14), (3, 10)])
def test_table_invariants(d, n_max):
    t = count_fixed(d, n_max)
    assert t[1] == 1 and t[2] == d
    assert all(a < b for a, b in zip(t.counts, t.counts[1:]))


@pytest.mark.parametrize("d,n", [(2, k) for k in range(1, 9)] + [(3, k) for k in range(1, 6)])
def test_stream_matches_counter(d, n):
    animals = list(enumerate_fixed(d, n))
    assert len(animals) == count_fixed(d, n)[n]
    assert len(set(animals)) == len(animals)
    assert all(len(p) == n for p in animals)


def test_superadditivity():
    t = count_fixed(2, 14)
    for n in range(1, 14):
        for m in range(1, 15 - n):
            assert t[n] * t[m] <= t[n + m]


def test_dominance_by_the_diagonal():
    t = count_fixed(2, 10)
    diag = series_diagonal(general_weight_formula(2), 10)
    assert diag[1:4] == [1, 4, 18]
    assert all(t[n] <= diag[n] for n in range(1, 11))


def test_csv_round_trip():
    t = count_fixed(3, 6)
    text = t.to_csv()
    assert text.splitlines()[0] == "n,count"
    assert CountTable.from_csv(3, text) == t


def test_budget_and_arguments():
    with pytest.raises(OracleBudgetExceeded):
        count_fixed(2, 12, budget=1000)
    with pytest.raises(ValueError):
        count_fixed(4, 3)
    assert list(enumerate_fixed(2, 0)) == []
