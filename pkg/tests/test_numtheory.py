import itertools
import math

import pytest
from hypothesis import given, strategies as st

from skeindim import numtheory as nt
from skeindim.errors import InputError

# Frozen value lists for N = 1, 2, ...
GL_VALUES = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297]
# N = 2, 3, ...
SL_T2_VALUES = [5, 11, 23, 31, 60, 63, 109, 126, 183, 176, 330, 269, 420, 496, 645, 585]
SL_T3_VALUES = [9, 29, 75, 131, 266, 357, 617, 810, 1207, 1386, 2272, 2297, 3318, 3954, 5145, 5209, 7745, 7348]


def brute_jordan(k, d):
    """Elements of exact order d in (Z/d)^k."""
    return sum(1 for v in itertools.product(range(d), repeat=k) if math.gcd(d, *v) == 1)


def test_partition_count_values():
    assert nt.partition_count(0) == 1
    assert nt.partition_count(5) == 7
    assert nt.partition_count(10) == 42
    assert [nt.partition_count(n) for n in range(1, 18)] == GL_VALUES
    assert nt.partition_count(100) == 190569292


def test_partition_count_rejects_negative():
    with pytest.raises(InputError):
        nt.partition_count(-1)


def test_partitions_order_and_count():
    assert nt.partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert nt.partitions(0) == [()]
    for n in range(0, 41):
        ps = nt.partitions(n) if n <= 25 else None
        if ps is not None:
            assert len(ps) == nt.partition_count(n)
            assert ps == sorted(ps, reverse=True)
            assert len(set(ps)) == len(ps)
            assert all(sum(p) == n and list(p) == sorted(p, reverse=True) for p in ps)
    assert len(nt.partitions(40)) == nt.partition_count(40)


@pytest.mark.parametrize("k,d,expected", [(2, 2, 3), (1, 6, 2), (3, 1, 1), (1, 1, 1), (3, 2, 7)])
def test_jordan_totient_examples(k, d, expected):
    assert nt.jordan_totient(k, d) == expected


@given(st.integers(1, 3), st.integers(1, 12))
def test_jordan_totient_matches_brute_count(k, d):
    assert nt.jordan_totient(k, d) == brute_jordan(k, d)


@given(st.integers(1, 4), st.integers(1, 400))
def test_jordan_sums_to_power(k, n):
    # sum over d | n of J_k(d) = n^k
    assert sum(nt.jordan_totient(k, d) for d in nt.divisors(n)) == n**k


def test_gcd_of_partition():
    assert nt.gcd_of_partition((4, 2, 2)) == 2
    assert nt.gcd_of_partition((7,)) == 7
    assert nt.gcd_of_partition((3, 2)) == 1
    with pytest.raises(InputError):
        nt.gcd_of_partition(())


def test_dirichlet_convolution_examples():
    assert nt.dirichlet_convolve(nt.PARTITIONS, nt.jordan(2), 2) == 5
    assert nt.dirichlet_convolve(nt.PARTITIONS, nt.jordan(3), 2) == 9
    for n in range(1, 30):
        assert nt.dirichlet_convolve(nt.PARTITIONS, nt.DELTA, n) == nt.partition_count(n)


SEQS = [nt.PARTITIONS, nt.jordan(1), nt.jordan(2), nt.ID2, nt.DELTA]


@given(st.sampled_from(SEQS), st.sampled_from(SEQS), st.sampled_from(SEQS), st.integers(1, 120))
def test_convolution_commutative_associative(f, g, h, n):
    assert nt.dirichlet_convolve(f, g, n) == nt.dirichlet_convolve(g, f, n)
    fg = nt.NatSequence("fg", lambda d: nt.dirichlet_convolve(f, g, d))
    gh = nt.NatSequence("gh", lambda d: nt.dirichlet_convolve(g, h, d))
    assert nt.dirichlet_convolve(fg, h, n) == nt.dirichlet_convolve(f, gh, n)


def test_unweighted_identity_is_literal_and_false_from_three():
    assert nt.verify_id2_j2_j3(1)
    assert nt.verify_id2_j2_j3(2)
    # 1*J2(3) + 9*J2(1) = 17, J3(3) = 26
    assert nt.dirichlet_convolve(nt.ID2, nt.jordan(2), 3) == 17
    assert nt.jordan_totient(3, 3) == 26
    assert not nt.verify_id2_j2_j3(3)
    assert not nt.verify_id2_j2_j3(12)
    assert nt.first_id2_j2_j3_counterexample(500) == 3


def test_weighted_identity_holds():
    assert all(nt.verify_weighted_id2_j2_j3(n) for n in range(1, 501))


def test_gcd_histogram_orbits():
    for n in range(1, 25):
        for k in (1, 2, 3):
            assert nt.orbit_count_matches_totient(n, k)


def test_gcd_histogram_cap():
    with pytest.raises(InputError):
        nt.gcd_histogram(300, 3)


def test_skein_dim_value_lists():
    assert [nt.skein_dim("GL", "T2", n) for n in range(1, 18)] == GL_VALUES
    assert [nt.skein_dim("GL", "T3", n) for n in range(1, 18)] == GL_VALUES
    assert [nt.skein_dim("SL", "T2", n) for n in range(2, 18)] == SL_T2_VALUES
    assert [nt.skein_dim("SL", "T3", n) for n in range(2, 20)] == SL_T3_VALUES


def test_three_routes_agree():
    for n in range(1, 31):
        for k in (2, 3):
            for group in ("GL", "SL"):
                routes = nt.dimension_routes(group, k, n)
                assert len(set(routes.values())) == 1, (group, k, n, routes)
                if n <= 30 and n**k <= nt.BRUTE_CAP:
                    assert set(routes) == {"convolution", "partition_gcds", "vectors"}


def test_skein_dim_input_errors():
    with pytest.raises(InputError):
        nt.skein_dim("PGL", "T2", 3)
    with pytest.raises(InputError):
        nt.skein_dim("SL", "T4", 3)
    with pytest.raises(InputError):
        nt.skein_dim("SL", "T2", 0)


def test_partition_count_thread_safe():
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(4) as pool:
        got = list(pool.map(nt.partition_count, range(300, 0, -7)))
    assert got == [nt.partition_count(n) for n in range(300, 0, -7)]
