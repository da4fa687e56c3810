"""Every-second-number Josephus process and the F_s value, three ways.

Numbers 1..v stand in a circle; counting starts so that 2 is removed first
(1 is skipped), then every second survivor falls.  e_i is the i-th removed
number, e_v the survivor, and F_s(v) = e_{v-s} is the s-th number from the
end of the order.  F_s(v) is defined for 0 <= s <= v - 1.

Three routes that must agree:
  * simulated  - play the elimination out on a linked ring (linear time),
  * closed     - 2(v - s) for s+1 <= v <= 2s, else 2m + 1 from the unique
                 decomposition v = (2s+1)*2^n + m with 0 <= m < (2s+1)*2^n,
  * recursive  - halving recursion F_s(2v) = 2F_s(v) - 1,
                 F_s(2v+1) = 2F_s(v) + 1 down to the small-v base cases.

A quadratic ring-scan simulation is kept as a second oracle for small v.
The *_row helpers are vectorized equivalents used by the big verification
sweeps; unit tests pin them to the scalar routes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .game import DomainError


@dataclass(frozen=True)
class EliminationOrder:
    """Removal order for circle size v: e[i-1] is e_i, e[-1] the survivor."""

    v: int
    e: tuple[int, ...]

    def removed(self, i: int) -> int:
        """e_i under the 1-based convention: the i-th number removed."""
        if not 1 <= i <= self.v:
            raise DomainError(f"removal index must be in 1..{self.v}, got {i}")
        return self.e[i - 1]

    @property
    def survivor(self) -> int:
        return self.e[-1]


def _check_v(v: int) -> None:
    if v < 1:
        raise DomainError(f"circle size must be positive, got {v}")


def _check_query(s: int, v: int) -> None:
    _check_v(v)
    if s < 0 or s >= v:
        raise DomainError(f"F_s(v) requires 0 <= s <= v-1, got s={s}, v={v}")


def elimination_order(v: int) -> EliminationOrder:
    """Simulate the circle with a successor array (constant-time deletion)."""
    _check_v(v)
    if v == 1:
        return EliminationOrder(1, (1,))
    nxt = list(range(1, v)) + [0]  # person i holds number i+1
    order = []
    prev = 0  # number 1 is skipped first
    for _ in range(v - 1):
        victim = nxt[prev]
        order.append(victim + 1)
        nxt[prev] = nxt[victim]
        prev = nxt[prev]  # skip one survivor
    order.append(prev + 1)
    return EliminationOrder(v, tuple(order))


def elimination_order_naive(v: int) -> EliminationOrder:
    """Quadratic ring-scan reference; independent check on the linked ring."""
    _check_v(v)
    alive = list(range(1, v + 1))
    order = []
    i = 0
    while len(alive) > 1:
        i = (i + 1) % len(alive)
        order.append(alive.pop(i))
    order.append(alive[0])
    return EliminationOrder(v, tuple(order))


def f_s_simulated(s: int, v: int) -> int:
    """F_s(v) read off a fresh elimination order: e_{v-s}."""
    _check_query(s, v)
    return elimination_order(v).removed(v - s)


def f_s_closed(s: int, v: int) -> int:
    """F_s(v) in closed form."""
    _check_query(s, v)
    if v <= 2 * s:
        return 2 * (v - s)
    q = v // (2 * s + 1)
    n = q.bit_length() - 1
    m = v - ((2 * s + 1) << n)
    return 2 * m + 1


def f_s_recursive(s: int, v: int) -> int:
    """F_s(v) by the halving recursion."""
    _check_query(s, v)

    def rec(w: int) -> int:
        if w == 2 * s + 1:
            return 1
        if w <= 2 * s:
            return 2 * (w - s)
        half = rec(w // 2)  # w >= 2s+2, so w//2 >= s+1 stays in range
        return 2 * half - 1 if w % 2 == 0 else 2 * half + 1

    return rec(v)


def survivor(v: int) -> int:
    """Last number standing, F_0(v); equals 2L+1 for v = 2^n + L."""
    _check_v(v)
    return f_s_closed(0, v)


def simulated_row(v: int) -> np.ndarray:
    """Array r with r[s] = F_s(v) for 0 <= s <= v-1 (the order, reversed)."""
    order = elimination_order(v)
    return np.array(order.e[::-1], dtype=np.int64)


def _floor_pow2(q: np.ndarray) -> np.ndarray:
    # largest power of two <= q (elementwise, q >= 1), integer-only
    q = q.astype(np.uint64).copy()
    for shift in (1, 2, 4, 8, 16, 32):
        q |= q >> np.uint64(shift)
    return (q - (q >> np.uint64(1))).astype(np.int64)


def closed_row(v: int) -> np.ndarray:
    """Vectorized f_s_closed over s = 0..v-1."""
    _check_v(v)
    s = np.arange(v, dtype=np.int64)
    out = np.empty(v, dtype=np.int64)
    small = v <= 2 * s  # the 2(v-s) branch
    out[small] = 2 * (v - s[small])
    st = s[~small]
    q = v // (2 * st + 1)
    base = (2 * st + 1) * _floor_pow2(q)
    out[~small] = 2 * (v - base) + 1
    return out


def recursive_row(v: int, half_row: np.ndarray) -> np.ndarray:
    """Vectorized f_s_recursive over s = 0..v-1.

    half_row must be the row for v//2 (ignored, may be empty, when v = 1).
    Entries s < v//2 come from the halving recursion, the rest are base
    cases (1 at v = 2s+1, else 2(v-s)).
    """
    _check_v(v)
    half = v // 2
    rec = 2 * half_row[:half] + (1 if v % 2 else -1)
    base_s = np.arange(half, v, dtype=np.int64)
    base = 2 * (v - base_s)
    if v % 2:
        base[0] = 1  # s = (v-1)/2, i.e. v = 2s+1
    return np.concatenate([rec, base])
