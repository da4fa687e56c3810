"""Josephus tests: elimination orders, the three F_s routes, identities."""

import numpy as np
import pytest

from weighted_nim import (
    DomainError,
    elimination_order,
    elimination_order_naive,
    f_s_closed,
    f_s_recursive,
    f_s_simulated,
    survivor,
)
from weighted_nim.josephus import closed_row, recursive_row, simulated_row


@pytest.mark.parametrize(
    "v,want",
    [(1, (1,)), (5, (2, 4, 1, 5, 3)), (7, (2, 4, 6, 1, 5, 3, 7))],
)
def test_elimination_order(v, want):
    assert elimination_order(v).e == want
    assert elimination_order(v).survivor == want[-1]


def test_elimination_order_domain():
    with pytest.raises(DomainError):
        elimination_order(0)
    with pytest.raises(DomainError):
        elimination_order_naive(-3)


def test_removed_accessor_is_one_based():
    order = elimination_order(5)
    assert [order.removed(i) for i in range(1, 6)] == [2, 4, 1, 5, 3]
    for bad in (0, 6, -1):
        with pytest.raises(DomainError):
            order.removed(bad)


def test_linked_ring_matches_naive_scan():
    for v in range(1, 201):
        assert elimination_order(v).e == elimination_order_naive(v).e, v


def test_order_is_permutation_with_even_prefix():
    for v in range(1, 129):
        e = elimination_order(v).e
        assert sorted(e) == list(range(1, v + 1))
        half = v // 2
        assert e[:half] == tuple(range(2, 2 * half + 1, 2))


@pytest.mark.parametrize(
    "s,v,want",
    [
        (0, 1, 1),
        (0, 5, 3),
        (3, 7, 1),   # F_s(2s+1) = 1
        (3, 5, 4),   # F_s(s+k) = 2k with k = 2
        (2, 7, 5),
        (1, 6, 1),
        (1, 7, 3),
        (0, 2, 1),
    ],
)
def test_f_s_three_routes(s, v, want):
    assert f_s_simulated(s, v) == want
    assert f_s_closed(s, v) == want
    assert f_s_recursive(s, v) == want


def test_f_s_domain():
    for fn in (f_s_simulated, f_s_closed, f_s_recursive):
        with pytest.raises(DomainError):
            fn(5, 5)
        with pytest.raises(DomainError):
            fn(-1, 5)
        with pytest.raises(DomainError):
            fn(0, 0)


def test_small_v_base_formulas():
    # F_s(s+k) = 2k for 1 <= k <= s and F_s(2s+1) = 1
    for s in range(41):
        for k in range(1, s + 1):
            assert f_s_closed(s, s + k) == 2 * k
        assert f_s_closed(s, 2 * s + 1) == 1
    for s in range(15):
        for k in range(1, s + 1):
            assert f_s_simulated(s, s + k) == 2 * k
        assert f_s_simulated(s, 2 * s + 1) == 1


def test_power_decomposition_unique():
    # for every v >= 2s+1 exactly one n gives (2s+1)*2^n <= v <= (2s+1)*2^(n+1)-1
    for s in range(8):
        for v in range(2 * s + 1, 300):
            hits = [
                n
                for n in range(12)
                if (2 * s + 1) << n <= v < (2 * s + 1) << (n + 1)
            ]
            assert len(hits) == 1
            n = hits[0]
            m = v - ((2 * s + 1) << n)
            assert 0 <= m <= ((2 * s + 1) << n) - 1
            assert f_s_closed(s, v) == 2 * m + 1


def test_three_routes_agree_up_to_300():
    for v in range(1, 301):
        e_rev = elimination_order(v).e[::-1]
        for s in range(v):
            assert e_rev[s] == f_s_closed(s, v) == f_s_recursive(s, v), (s, v)


def test_rows_match_scalar_routes():
    rec_rows = [np.empty(0, dtype=np.int64)]
    for v in range(1, 151):
        srow = simulated_row(v)
        crow = closed_row(v)
        rrow = recursive_row(v, rec_rows[v // 2])
        rec_rows.append(rrow)
        for s in range(v):
            assert srow[s] == f_s_simulated(s, v)
        assert crow.tolist() == [f_s_closed(s, v) for s in range(v)]
        assert rrow.tolist() == [f_s_recursive(s, v) for s in range(v)]


def test_halving_residuals():
    # F_s(2v) = 2F_s(v) - 1 and F_s(2v+1) = 2F_s(v) + 1 wherever defined
    for v in range(1, 129):
        base = simulated_row(v)
        assert np.array_equal(simulated_row(2 * v)[:v], 2 * base - 1), v
        assert np.array_equal(simulated_row(2 * v + 1)[:v], 2 * base + 1), v


def test_survivor_classic_formula():
    for v in range(1, 2049):
        n = v.bit_length() - 1
        ell = v - (1 << n)
        assert survivor(v) == 2 * ell + 1
    with pytest.raises(DomainError):
        survivor(0)
