"""Rules of the two-pile weighted Nim game.

Pile 1 holds stones of weight +1 each, pile 2 stones of weight -2 each.
A move removes at least one stone from a single pile, and the total weight
removed must be at most floor(W/2), where W = x - 2y is the total weight on
the board before the move.  W may be negative; the floor always rounds
toward minus infinity, so with W < 0 pile 1 is frozen and pile 2 has a
forced minimum removal.  Normal play: whoever removes the last stone wins.
"""

from __future__ import annotations

from enum import IntEnum
from typing import NamedTuple, Optional


class GameError(Exception):
    """Base class for errors raised by this package."""


class DomainError(GameError, ValueError):
    """An argument lies outside an operation's domain."""


class IllegalMove(GameError):
    """A move that violates the removal rules."""


class NoMove(GameError):
    """Requested a move from a terminal position."""


class Pile(IntEnum):
    ONE = 1
    TWO = 2

    def __str__(self) -> str:
        return "p1" if self is Pile.ONE else "p2"


class Position(NamedTuple):
    x: int  # pile-1 stones, weight +1 each
    y: int  # pile-2 stones, weight -2 each


class MoveAction(NamedTuple):
    pile: Pile
    count: int

    def __str__(self) -> str:
        return f"{self.pile} {self.count}"


def as_position(p) -> Position:
    """Coerce an (x, y) pair to a Position, rejecting negative pile sizes."""
    x, y = p
    if x < 0 or y < 0:
        raise DomainError(f"pile sizes must be non-negative, got ({x}, {y})")
    return Position(int(x), int(y))


def total_weight(p) -> int:
    """Total weight W = x - 2y of all stones on the board."""
    x, y = as_position(p)
    return x - 2 * y


def removal_bound(p) -> int:
    """Maximum total weight a single move may remove: floor(W/2).

    Python's ``//`` floors toward minus infinity, which is exactly the
    convention required (e.g. floor(-3/2) = -2).
    """
    return total_weight(p) // 2


def min_pile2_removal(p) -> int:
    """Smallest legal pile-2 count: 1 when W >= 0, else the forced minimum."""
    b = removal_bound(p)
    if b >= 0:
        return 1
    # need -2u <= b, i.e. u >= ceil(-b / 2)
    return (-b + 1) // 2


def legal_moves(p) -> list[MoveAction]:
    """All legal moves from p, sorted by (pile, count).

    Pile 1: remove t with 1 <= t <= x and t <= floor(W/2).
    Pile 2: remove u with 1 <= u <= y and -2u <= floor(W/2); when W >= 0 any
    u works, when W < 0 there is a forced minimum removal.
    """
    x, y = as_position(p)
    b = (x - 2 * y) // 2
    moves = [MoveAction(Pile.ONE, t) for t in range(1, min(x, b) + 1)]
    u_lo = 1 if b >= 0 else (-b + 1) // 2
    moves.extend(MoveAction(Pile.TWO, u) for u in range(u_lo, y + 1))
    return moves


def move_rejection_reason(p, m: MoveAction) -> Optional[str]:
    """Why m is illegal from p, or None if it is legal."""
    x, y = as_position(p)
    pile, count = m
    if count < 1:
        return "a move must remove at least one stone"
    b = (x - 2 * y) // 2
    if pile == Pile.ONE:
        if x == 0:
            return "pile 1 is empty"
        if count > x:
            return f"pile 1 has only {x} stone(s)"
        if count > b:
            if b < 1:
                return f"the weight bound {b} forbids any pile-1 removal"
            return f"removing {count} from pile 1 exceeds the weight bound {b}"
        return None
    if pile == Pile.TWO:
        if y == 0:
            return "pile 2 is empty"
        if count > y:
            return f"pile 2 has only {y} stone(s)"
        if -2 * count > b:
            u_lo = (-b + 1) // 2
            return f"the forced minimum removal from pile 2 is {u_lo} stone(s)"
        return None
    return f"unknown pile {pile!r}"


def apply_move(p, m: MoveAction) -> Position:
    """Position after playing m from p; raises IllegalMove if m is not legal."""
    reason = move_rejection_reason(p, m)
    if reason is not None:
        raise IllegalMove(f"{m} from {tuple(p)}: {reason}")
    x, y = p
    if m.pile == Pile.ONE:
        return Position(x - m.count, y)
    return Position(x, y - m.count)


def is_terminal(p) -> bool:
    """True iff no move is legal from p (the player to move has lost)."""
    return not legal_moves(p)
