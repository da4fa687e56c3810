"""Rules-level tests: weights, bounds, move generation, move application."""

import math
from fractions import Fraction

import pytest

from weighted_nim import (
    DomainError,
    IllegalMove,
    MoveAction,
    Pile,
    Position,
    apply_move,
    is_terminal,
    legal_moves,
    min_pile2_removal,
    move_rejection_reason,
    removal_bound,
    total_weight,
)

P1, P2 = Pile.ONE, Pile.TWO


@pytest.mark.parametrize("pos,want", [((0, 0), 0), ((4, 1), 2), ((2, 3), -4)])
def test_total_weight(pos, want):
    assert total_weight(pos) == want


@pytest.mark.parametrize("pos,want", [((5, 0), 2), ((2, 3), -2), ((3, 1), 0)])
def test_removal_bound(pos, want):
    assert removal_bound(pos) == want


def test_removal_bound_floors_toward_minus_infinity():
    # W = -3 must give -2, not -1
    assert removal_bound((1, 2)) == -2
    assert removal_bound((0, 3)) == -3


@pytest.mark.parametrize(
    "pos,want",
    [
        ((0, 0), []),
        ((1, 0), []),  # bound 0 forbids the weight-1 removal
        ((4, 1), [(P1, 1), (P2, 1)]),
        ((2, 3), [(P2, 1), (P2, 2), (P2, 3)]),
        ((0, 5), [(P2, 3), (P2, 4), (P2, 5)]),
        ((5, 0), [(P1, 1), (P1, 2)]),
        ((2, 1), [(P2, 1)]),
    ],
)
def test_legal_moves(pos, want):
    assert legal_moves(pos) == [MoveAction(p, c) for p, c in want]


def brute_force_moves(x, y):
    """Independent enumeration: every (pile, count) pair filtered by the
    weight inequality, with the floor taken over exact rationals."""
    bound = math.floor(Fraction(x - 2 * y, 2))
    out = []
    for t in range(1, x + 1):
        if t <= bound:
            out.append(MoveAction(P1, t))
    for u in range(1, y + 1):
        if -2 * u <= bound:
            out.append(MoveAction(P2, u))
    return out


def test_legal_moves_match_brute_force_up_to_64():
    for x in range(65):
        for y in range(65):
            assert legal_moves((x, y)) == brute_force_moves(x, y), (x, y)


def test_move_invariants_on_box():
    for x in range(49):
        for y in range(49):
            p = Position(x, y)
            w = total_weight(p)
            b = removal_bound(p)
            moves = legal_moves(p)
            if w < 0:
                assert all(m.pile is P2 for m in moves)
            else:
                assert [m for m in moves if m.pile is P2] == [
                    MoveAction(P2, u) for u in range(1, y + 1)
                ]
            for m in moves:
                removed = m.count if m.pile is P1 else -2 * m.count
                assert removed <= b
                q = apply_move(p, m)
                assert q.x >= 0 and q.y >= 0
                assert q.x + q.y < x + y  # play always terminates


@pytest.mark.parametrize(
    "pos,move,want",
    [((4, 1), (P1, 1), (3, 1)), ((2, 3), (P2, 2), (2, 1)), ((5, 0), (P1, 2), (3, 0))],
)
def test_apply_move(pos, move, want):
    assert apply_move(pos, MoveAction(*move)) == want


@pytest.mark.parametrize(
    "pos,move",
    [
        ((1, 0), (P1, 1)),  # bound 0 forbids weight-1 removal
        ((4, 1), (P1, 0)),  # zero-stone removal is not a move
        ((4, 1), (P1, 5)),  # exceeds pile size
        ((4, 1), (P1, 2)),  # exceeds the weight bound
        ((0, 5), (P2, 2)),  # below the forced minimum
        ((3, 0), (P2, 1)),  # pile empty
    ],
)
def test_apply_move_rejects(pos, move):
    with pytest.raises(IllegalMove):
        apply_move(pos, MoveAction(*move))


def test_rejection_reasons():
    assert move_rejection_reason((3, 0), MoveAction(P2, 1)) == "pile 2 is empty"
    assert "only 3 stone" in move_rejection_reason((1, 3), MoveAction(P2, 4))
    assert "forced minimum" in move_rejection_reason((0, 5), MoveAction(P2, 1))
    assert "exceeds the weight bound" in move_rejection_reason((6, 0), MoveAction(P1, 4))
    assert "at least one stone" in move_rejection_reason((4, 1), MoveAction(P1, -1))
    assert move_rejection_reason((4, 1), MoveAction(P2, 1)) is None


def test_min_pile2_removal():
    assert min_pile2_removal((4, 1)) == 1
    assert min_pile2_removal((0, 5)) == 3
    assert min_pile2_removal((2, 3)) == 1


@pytest.mark.parametrize("pos,want", [((0, 0), True), ((1, 0), True), ((0, 5), False)])
def test_is_terminal(pos, want):
    assert is_terminal(pos) is want


def test_only_two_terminals_in_box():
    terminals = {(x, y) for x in range(65) for y in range(65) if is_terminal((x, y))}
    assert terminals == {(0, 0), (1, 0)}


def test_negative_coordinates_rejected():
    with pytest.raises(DomainError):
        total_weight((-1, 0))
    with pytest.raises(DomainError):
        legal_moves((0, -2))
