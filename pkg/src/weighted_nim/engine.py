"""Brute-force Sprague-Grundy oracle over the move graph.

Two memoization routes that must agree: an associative cache for ad-hoc
queries (pure Python, walks the move graph through the public rules API)
and a dense table fill for sweeps (numba-compiled when available).  The
closed-form module never feeds either; only the test suite compares them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .game import (
    DomainError,
    MoveAction,
    NoMove,
    Position,
    apply_move,
    as_position,
    legal_moves,
)


def mex(values: Iterable[int]) -> int:
    """Least non-negative integer absent from values."""
    seen = set(values)
    g = 0
    while g in seen:
        g += 1
    return g


_cache: dict[Position, int] = {}


def clear_cache() -> None:
    """Drop the associative memo (mainly for tests and benchmarks)."""
    _cache.clear()


def grundy(p) -> int:
    """Grundy value of p: mex over the values of all one-move successors.

    Iterative post-order walk, memoized in a shared associative cache;
    terminates because every move strictly shrinks x + y.
    """
    p = as_position(p)
    if p in _cache:
        return _cache[p]
    stack = [p]
    while stack:
        q = stack[-1]
        if q in _cache:
            stack.pop()
            continue
        succ = [apply_move(q, m) for m in legal_moves(q)]
        pending = [r for r in succ if r not in _cache]
        if pending:
            stack.extend(pending)
        else:
            _cache[q] = mex(_cache[r] for r in succ)
            stack.pop()
    return _cache[p]


def is_p_position(p) -> bool:
    """True iff p is a previous-player win (Grundy value 0)."""
    return grundy(p) == 0


def winning_moves(p) -> list[MoveAction]:
    """Moves to a Grundy-0 successor, sorted by (pile, count); empty at
    P-positions and terminals."""
    return [m for m in legal_moves(p) if grundy(apply_move(p, m)) == 0]


def best_move(p) -> MoveAction:
    """Deterministic perfect-play choice: the lexicographically least
    winning move, or the least legal move when none wins (the engine keeps
    playing from lost positions rather than resigning)."""
    moves = legal_moves(p)
    if not moves:
        raise NoMove(f"no move from terminal position {tuple(as_position(p))}")
    for m in moves:  # already in (pile, count) order
        if grundy(apply_move(p, m)) == 0:
            return m
    return moves[0]


@dataclass(frozen=True)
class GrundyTable:
    """Dense Grundy values for the box 0 <= x <= x_max, 0 <= y <= y_max."""

    x_max: int
    y_max: int
    values: np.ndarray  # shape (x_max+1, y_max+1), dtype int32

    def __getitem__(self, key) -> int:
        x, y = key
        return int(self.values[x, y])


def _fill_kernel(values, seen, x_max, y_max):
    # Bottom-up fill; cell (x, y) reads only cells with smaller x (same y)
    # or smaller y (same x).  `seen` is a scratch array used with a per-cell
    # stamp so it never needs clearing.  Written to be numba-compilable;
    # all divisions are on non-negative operands.
    for x in range(x_max + 1):
        for y in range(y_max + 1):
            stamp = x * (y_max + 1) + y + 1
            w = x - 2 * y
            if w >= 0:
                b = w // 2
                for t in range(1, b + 1):
                    seen[values[x - t, y]] = stamp
                for j in range(y):
                    seen[values[x, j]] = stamp
            else:
                nb = (-w + 1) // 2  # -floor(w/2)
                u_lo = (nb + 1) // 2
                for u in range(u_lo, y + 1):
                    seen[values[x, y - u]] = stamp
            g = 0
            while seen[g] == stamp:
                g += 1
            values[x, y] = g


try:
    from numba import njit

    _fill_fast = njit(cache=True)(_fill_kernel)
except ImportError:  # pragma: no cover - numba is a declared dependency
    _fill_fast = _fill_kernel


def grundy_table(x_max: int, y_max: int) -> GrundyTable:
    """Bottom-up dense fill of Grundy values for the given box."""
    if x_max < 0 or y_max < 0:
        raise DomainError(f"table bounds must be non-negative, got ({x_max}, {y_max})")
    values = np.zeros((x_max + 1, y_max + 1), dtype=np.int32)
    # a cell's value is at most its successor count, < x_max//2 + y_max + 2
    seen = np.zeros(x_max // 2 + y_max + 3, dtype=np.int64)
    _fill_fast(values, seen, x_max, y_max)
    return GrundyTable(x_max, y_max, values)
