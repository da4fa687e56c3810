"""Closed-form classification of positions by Grundy value.

Every position (x, y) lies in exactly one of three families, and the
family's s parameter is its Grundy value:

  N(n, m): ((2s+1)*2^n - 1 + m, m), 0 <= m <= (2s+1)*2^n - 1   [x >= 2y]
  A(k, j): (2k, j),   0 <= k <= s-1, 2^(s-k-1)+k <= j <= 2^(s-k)+k-1
  B(k, j): (2k+1, j), same k and j windows                     [x < 2y]

The N union runs over n >= 0; the terminal (0, 0) sits in the s=0, n=0
slice.  Classification is pure algebra (inverting the family formulas) and
never consults the brute-force oracle; the test suite and the verification
sweeps compare the two routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .game import DomainError, Position, as_position


class Family(str, Enum):
    N = "N"
    A = "A"
    B = "B"


def odd_part(d: int) -> tuple[int, int]:
    """Factor d = odd * 2^n with odd odd; returns (odd, n)."""
    if d < 1:
        raise DomainError(f"odd_part requires a positive integer, got {d}")
    n = (d & -d).bit_length() - 1
    return d >> n, n


def floor_log2(n: int) -> int:
    """floor(log2(n)) for n >= 1, via bit length (exact near powers of two)."""
    if n < 1:
        raise DomainError(f"floor_log2 requires a positive integer, got {n}")
    return n.bit_length() - 1


@dataclass(frozen=True)
class GrundyClass:
    """One family slot: N carries (n, m) in (param1, param2), A/B carry (k, j).

    Parameter ranges are enforced on construction.
    """

    s: int
    family: Family
    param1: int
    param2: int

    def __post_init__(self) -> None:
        s, p1, p2 = self.s, self.param1, self.param2
        if s < 0:
            raise DomainError(f"Grundy value must be non-negative, got {s}")
        if self.family is Family.N:
            if p1 < 0:
                raise DomainError(f"family N requires n >= 0, got n={p1}")
            hi = (2 * s + 1) * (1 << p1) - 1
            if not 0 <= p2 <= hi:
                raise DomainError(f"family N requires 0 <= m <= {hi}, got m={p2}")
        else:
            if s < 1:
                raise DomainError("families A/B are empty for s = 0")
            if not 0 <= p1 <= s - 1:
                raise DomainError(f"families A/B require 0 <= k <= {s - 1}, got k={p1}")
            lo = (1 << (s - p1 - 1)) + p1
            hi = (1 << (s - p1)) + p1 - 1
            if not lo <= p2 <= hi:
                raise DomainError(f"family {self.family.value} requires {lo} <= j <= {hi}, got j={p2}")

    @property
    def n(self) -> int:
        assert self.family is Family.N
        return self.param1

    @property
    def m(self) -> int:
        assert self.family is Family.N
        return self.param2

    @property
    def k(self) -> int:
        assert self.family is not Family.N
        return self.param1

    @property
    def j(self) -> int:
        assert self.family is not Family.N
        return self.param2

    def __str__(self) -> str:
        if self.family is Family.N:
            return f"s={self.s} family=N n={self.param1} m={self.param2}"
        return f"s={self.s} family={self.family.value} k={self.param1} j={self.param2}"


def classify(p) -> GrundyClass:
    """The unique family slot containing p.

    For x >= 2y the position is in some N slice: with d = x - y + 1 and
    d = odd * 2^n, the slice is s = (odd-1)/2, n, m = y (then
    m <= (2s+1)*2^n - 1 is equivalent to x >= 2y).  Otherwise x < 2y forces
    an A/B slot with k = floor(x/2); j = y lands in the window of
    s = k + floor(log2(y - k)) + 1, and y - k >= 1 is guaranteed.
    """
    x, y = as_position(p)
    if x >= 2 * y:
        d = x - y + 1
        odd, n = odd_part(d)
        return GrundyClass((odd - 1) // 2, Family.N, n, y)
    k = x // 2
    s = k + floor_log2(y - k) + 1
    family = Family.A if x % 2 == 0 else Family.B
    return GrundyClass(s, family, k, y)


def grundy_closed(p) -> int:
    """Closed-form Grundy value: the s of the family containing p."""
    return classify(p).s


def class_position(c: GrundyClass) -> Position:
    """The position a family slot denotes; inverse of classify."""
    if c.family is Family.N:
        return Position((2 * c.s + 1) * (1 << c.param1) - 1 + c.param2, c.param2)
    if c.family is Family.A:
        return Position(2 * c.param1, c.param2)
    return Position(2 * c.param1 + 1, c.param2)


def family_memberships(p) -> list[Family]:
    """Which family definitions admit p, tested independently of classify.

    N membership <=> x >= 2y (the slice parameters are then forced);
    A membership <=> x even and y >= x/2 + 1; B likewise for x odd.
    Exactly one family should claim every position.
    """
    x, y = as_position(p)
    out = []
    if x >= 2 * y:
        out.append(Family.N)
    k = x // 2
    if y >= k + 1:
        out.append(Family.A if x % 2 == 0 else Family.B)
    return out


def enumerate_class(s: int, x_max: int, y_max: int) -> list[Position]:
    """All positions with Grundy value s inside the box, sorted by (x, y).

    The N union is taken over n >= 0, so the s = 0 family reaches the
    terminal (0, 0).
    """
    if s < 0:
        raise DomainError(f"Grundy value must be non-negative, got {s}")
    if x_max < 0 or y_max < 0:
        raise DomainError(f"box bounds must be non-negative, got ({x_max}, {y_max})")
    out: list[Position] = []
    n = 0
    while True:
        base = (2 * s + 1) << n
        x0 = base - 1
        if x0 > x_max:
            break
        for m in range(min(base - 1, y_max, x_max - x0) + 1):
            out.append(Position(x0 + m, m))
        n += 1
    for k in range(s):  # A/B families, empty for s = 0
        j_lo = (1 << (s - k - 1)) + k
        j_hi = min((1 << (s - k)) + k - 1, y_max)
        for j in range(j_lo, j_hi + 1):
            if 2 * k <= x_max:
                out.append(Position(2 * k, j))
            if 2 * k + 1 <= x_max:
                out.append(Position(2 * k + 1, j))
    return sorted(out)
