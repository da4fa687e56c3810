"""Exhaustive desk-scale verification sweeps.

Each check sweeps a declared finite range, counts every case in that range,
and reports the lexicographically least counterexample (in sweep order) if
any case fails.  Sweeps over grids are partitioned into chunks whose
results merge by taking the minimal counterexample key, so a chunked run
is indistinguishable from a sequential one; chunks are executed serially.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, Optional

import numpy as np

from . import engine, families, game, josephus
from .game import DomainError, Position
from .engine import GrundyTable

log = logging.getLogger(__name__)

DEFAULT_CHUNK = 64


@dataclass(frozen=True)
class Counterexample:
    inputs: dict[str, Any]
    expected: Any
    actual: Any

    def to_dict(self) -> dict[str, Any]:
        return {"inputs": dict(self.inputs), "expected": self.expected, "actual": self.actual}

    def __str__(self) -> str:
        ins = " ".join(f"{k}={v}" for k, v in self.inputs.items())
        return f"{ins} expected={self.expected} actual={self.actual}"


@dataclass(frozen=True)
class VerificationReport:
    check_name: str
    range_spec: str
    cases_checked: int
    passed: bool
    first_counterexample: Optional[Counterexample]
    elapsed_seconds: float

    def __post_init__(self) -> None:
        assert self.passed == (self.first_counterexample is None)

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check_name,
            "range": self.range_spec,
            "cases_checked": self.cases_checked,
            "passed": self.passed,
            "first_counterexample": (
                None if self.first_counterexample is None else self.first_counterexample.to_dict()
            ),
            "elapsed_seconds": self.elapsed_seconds,
        }

    def format_text(self) -> str:
        head = "[PASS]" if self.passed else "[FAIL]"
        line = (
            f"{head} {self.check_name}  range={self.range_spec}"
            f"  cases={self.cases_checked}  elapsed={self.elapsed_seconds:.2f}s"
        )
        if self.first_counterexample is not None:
            line += f"\n       counterexample: {self.first_counterexample}"
        return line


@dataclass
class _Sweep:
    """Collects per-chunk counterexamples and merges them by minimal key."""

    found: list[tuple[tuple, Counterexample]] = field(default_factory=list)

    def record(self, key: tuple, cx: Counterexample) -> None:
        self.found.append((key, cx))

    def merged(self) -> Optional[Counterexample]:
        if not self.found:
            return None
        return min(self.found, key=lambda kc: kc[0])[1]


def chunk_spans(lo: int, hi: int, size: int) -> Iterator[tuple[int, int]]:
    """Inclusive [a, b] spans of at most `size` covering lo..hi."""
    if size < 1:
        raise DomainError(f"chunk size must be positive, got {size}")
    a = lo
    while a <= hi:
        yield a, min(a + size - 1, hi)
        a += size


def _check_box(x_max: int, y_max: int) -> None:
    if x_max < 0 or y_max < 0:
        raise DomainError(f"box bounds must be non-negative, got ({x_max}, {y_max})")


def _report(name: str, range_spec: str, cases: int, sweep: _Sweep, t0: float) -> VerificationReport:
    cx = sweep.merged()
    return VerificationReport(
        check_name=name,
        range_spec=range_spec,
        cases_checked=cases,
        passed=cx is None,
        first_counterexample=cx,
        elapsed_seconds=time.perf_counter() - t0,
    )


def verify_grundy_equivalence(
    x_max: int,
    y_max: int,
    *,
    table: Optional[GrundyTable] = None,
    chunk_size: int = DEFAULT_CHUNK,
) -> VerificationReport:
    """grundy_closed(p) == brute-force grundy(p) for every p in the box.

    `table` may inject a pre-built (possibly perturbed) oracle table; it
    must cover the box.  This is the hook the fault-injection self-test
    uses.
    """
    _check_box(x_max, y_max)
    t0 = time.perf_counter()
    if table is None:
        table = engine.grundy_table(x_max, y_max)
    if table.x_max < x_max or table.y_max < y_max:
        raise DomainError("provided table does not cover the requested box")
    values = table.values
    sweep = _Sweep()
    for a, b in chunk_spans(0, x_max, chunk_size):
        for x in range(a, b + 1):
            hit = False
            for y in range(y_max + 1):
                oracle = int(values[x, y])
                closed = families.grundy_closed((x, y))
                if oracle != closed:
                    sweep.record(
                        (x, y),
                        Counterexample({"x": x, "y": y}, expected=oracle, actual=closed),
                    )
                    hit = True
                    break
            if hit:
                break
    cases = (x_max + 1) * (y_max + 1)
    return _report("grundy-equivalence", f"x<={x_max},y<={y_max}", cases, sweep, t0)


def verify_partition(
    x_max: int,
    y_max: int,
    s_max: int,
    *,
    chunk_size: int = DEFAULT_CHUNK,
) -> VerificationReport:
    """The families partition the box and classify/class_position invert.

    Per position: exactly one family definition admits it, and
    class_position(classify(p)) == p.  Per family s <= s_max: the
    enumerations are pairwise disjoint and contain exactly the box
    positions that classify to that s.
    """
    _check_box(x_max, y_max)
    if s_max < 0:
        raise DomainError(f"s_max must be non-negative, got {s_max}")
    t0 = time.perf_counter()
    enums = {s: families.enumerate_class(s, x_max, y_max) for s in range(s_max + 1)}
    enum_sets = {s: set(lst) for s, lst in enums.items()}
    sweep = _Sweep()

    total = sum(len(lst) for lst in enums.values())
    union: set[Position] = set()
    for lst in enums.values():
        union.update(lst)
    if len(union) != total:
        seen: dict[Position, int] = {}
        for s in range(s_max + 1):
            for p in enums[s]:
                if p in seen:
                    sweep.record(
                        (p.x, p.y, s),
                        Counterexample(
                            {"x": p.x, "y": p.y, "s_first": seen[p], "s_second": s},
                            expected="disjoint family enumerations",
                            actual="position enumerated twice",
                        ),
                    )
                seen[p] = s

    claimed = 0
    for a, b in chunk_spans(0, x_max, chunk_size):
        for x in range(a, b + 1):
            for y in range(y_max + 1):
                p = Position(x, y)
                members = families.family_memberships(p)
                if len(members) != 1:
                    sweep.record(
                        (x, y, -1),
                        Counterexample(
                            {"x": x, "y": y},
                            expected="exactly one family",
                            actual=[f.value for f in members],
                        ),
                    )
                    continue
                c = families.classify(p)
                back = families.class_position(c)
                if back != p:
                    sweep.record(
                        (x, y, c.s),
                        Counterexample(
                            {"x": x, "y": y, "class": str(c)},
                            expected=tuple(p),
                            actual=tuple(back),
                        ),
                    )
                    continue
                if c.s <= s_max:
                    claimed += 1
                    if p not in enum_sets[c.s]:
                        sweep.record(
                            (x, y, c.s),
                            Counterexample(
                                {"x": x, "y": y, "s": c.s},
                                expected="position present in its family enumeration",
                                actual="missing",
                            ),
                        )
    if claimed != total and not sweep.found:
        # some enumerated position classifies elsewhere; locate it
        for s in range(s_max + 1):
            for p in enums[s]:
                got = families.classify(p).s
                if got != s:
                    sweep.record(
                        (p.x, p.y, s),
                        Counterexample(
                            {"x": p.x, "y": p.y, "enumerated_s": s},
                            expected=s,
                            actual=got,
                        ),
                    )
    cases = (x_max + 1) * (y_max + 1) + total
    return _report("partition", f"x<={x_max},y<={y_max},s<={s_max}", cases, sweep, t0)


def verify_move_lemmas(
    x_max: int,
    y_max: int,
    *,
    chunk_size: int = 32,
) -> VerificationReport:
    """The mex property over the real move generator, per position:

    (a) no one-move successor shares the position's Grundy value, and
    (b) every value below it is reached by some successor.

    Successor sets come from legal_moves/apply_move, so this cross-checks
    the move generator against the dense table fill.  The two reachability
    regimes (x >= 2s' vs x <= 2s'-1) are tallied and logged for coverage.
    """
    _check_box(x_max, y_max)
    t0 = time.perf_counter()
    table = engine.grundy_table(x_max, y_max)
    values = table.values
    sweep = _Sweep()
    regime_counts = {"x>=2s": 0, "x<=2s-1": 0}
    for a, b in chunk_spans(0, x_max, chunk_size):
        for x in range(a, b + 1):
            hit = False
            for y in range(y_max + 1):
                p = Position(x, y)
                s = int(values[x, y])
                succ_vals = {int(values[q.x, q.y]) for q in
                             (game.apply_move(p, m) for m in game.legal_moves(p))}
                if s in succ_vals:
                    sweep.record(
                        (x, y, s),
                        Counterexample(
                            {"x": x, "y": y, "s": s},
                            expected="no successor with the same Grundy value",
                            actual="some successor reaches it",
                        ),
                    )
                    hit = True
                    break
                missing = next((sp for sp in range(s) if sp not in succ_vals), None)
                if missing is not None:
                    sweep.record(
                        (x, y, missing),
                        Counterexample(
                            {"x": x, "y": y, "s": s, "target": missing},
                            expected="some successor with the target value",
                            actual="unreachable",
                        ),
                    )
                    hit = True
                    break
                for sp in range(s):
                    regime_counts["x>=2s" if x >= 2 * sp else "x<=2s-1"] += 1
            if hit:
                break
    log.info(
        "move-lemmas reachability coverage: x>=2s' in %d cases, x<=2s'-1 in %d cases",
        regime_counts["x>=2s"],
        regime_counts["x<=2s-1"],
    )
    cases = (x_max + 1) * (y_max + 1)
    return _report("move-lemmas", f"x<={x_max},y<={y_max}", cases, sweep, t0)


def verify_correspondence(x_max: int, *, chunk_size: int = 256) -> VerificationReport:
    """F_s(x+1) = 2y + 1 for every family-N position (x, y) with x <= x_max.

    Family-N positions are exactly those with x >= 2y; F_s comes from one
    simulated elimination order per circle size x + 1.
    """
    if x_max < 0:
        raise DomainError(f"x_max must be non-negative, got {x_max}")
    t0 = time.perf_counter()
    sweep = _Sweep()
    for a, b in chunk_spans(0, x_max, chunk_size):
        for x in range(a, b + 1):
            e = josephus.elimination_order(x + 1).e
            v = x + 1
            hit = False
            for y in range(x // 2 + 1):
                s = families.classify((x, y)).s
                got = e[v - s - 1]
                if got != 2 * y + 1:
                    sweep.record(
                        (x, y),
                        Counterexample(
                            {"x": x, "y": y, "s": s, "v": v},
                            expected=2 * y + 1,
                            actual=got,
                        ),
                    )
                    hit = True
                    break
            if hit:
                break
    cases = sum(x // 2 + 1 for x in range(x_max + 1))
    return _report("correspondence", f"x<={x_max}", cases, sweep, t0)


def verify_josephus_forms(v_max: int) -> VerificationReport:
    """All three F_s routes agree, plus the halving-recursion residuals.

    Route agreement is swept for every 1 <= v <= v_max, 0 <= s <= v-1,
    batched with one elimination order per v.  The residual identities
    F_s(2v) = 2F_s(v) - 1 and F_s(2v+1) = 2F_s(v) + 1 are swept for
    v <= v_max // 2 (the odd side may need one extra order at v_max + 1).
    """
    if v_max < 1:
        raise DomainError(f"v_max must be positive, got {v_max}")
    t0 = time.perf_counter()
    sweep = _Sweep()
    sim_rows: list[np.ndarray] = [np.empty(0, dtype=np.int64)]  # index by v
    rec_rows: list[np.ndarray] = [np.empty(0, dtype=np.int64)]
    for v in range(1, v_max + 1):
        srow = josephus.simulated_row(v)
        crow = josephus.closed_row(v)
        rrow = josephus.recursive_row(v, rec_rows[v // 2])
        sim_rows.append(srow)
        rec_rows.append(rrow)
        for name, row in (("closed", crow), ("recursive", rrow)):
            if not np.array_equal(srow, row):
                s = int(np.nonzero(srow != row)[0][0])
                sweep.record(
                    (v, s, name),
                    Counterexample(
                        {"v": v, "s": s, "route": name},
                        expected=int(srow[s]),
                        actual=int(row[s]),
                    ),
                )
    residual_max = v_max // 2
    if residual_max >= 1 and 2 * residual_max + 1 > v_max:
        sim_rows.append(josephus.simulated_row(v_max + 1))
    for v in range(1, residual_max + 1):
        base = sim_rows[v]
        for side, idx, shift in (("even", 2 * v, -1), ("odd", 2 * v + 1, 1)):
            doubled = sim_rows[idx][:v]
            want = 2 * base + shift
            if not np.array_equal(doubled, want):
                s = int(np.nonzero(doubled != want)[0][0])
                sweep.record(
                    (v_max + v, s, side),  # residuals sort after the route sweep
                    Counterexample(
                        {"v": v, "s": s, "identity": f"F_s({idx}) = 2*F_s({v}) {'+' if shift > 0 else '-'} 1"},
                        expected=int(want[s]),
                        actual=int(doubled[s]),
                    ),
                )
    cases = v_max * (v_max + 1) // 2 + residual_max * (residual_max + 1)
    return _report(
        "josephus-forms",
        f"v<={v_max},s<=v-1 (residuals v<={residual_max})",
        cases,
        sweep,
        t0,
    )


def verify_lemma_inclusions(s_max: int) -> VerificationReport:
    """The three family-inclusion properties behind the move lemmas.

    (a) (2h, j) and (2h+1, j) with h <= s-2, h+1 <= j <= 2^(s-h-1)+h-1
        classify into family A resp. B with h+1 <= s' <= s-1;
    (b) (2h, xc) and (2h+1, xc) with xc <= h classify into family N with
        s' <= h;
    (c) every A/B slot position satisfies x <= 2s-1 and 2y > x.
    """
    if s_max < 1:
        raise DomainError(f"s_max must be at least 1, got {s_max}")
    t0 = time.perf_counter()
    sweep = _Sweep()
    cases = 0

    def expect_ab(s: int, h: int, j: int, x: int) -> None:
        nonlocal cases
        cases += 1
        c = families.classify((x, j))
        want_family = families.Family.A if x % 2 == 0 else families.Family.B
        ok = c.family is want_family and h + 1 <= c.s <= s - 1
        if not ok:
            sweep.record(
                (0, s, h, j, x),
                Counterexample(
                    {"s": s, "h": h, "j": j, "x": x},
                    expected=f"family {want_family.value} with {h + 1} <= s' <= {s - 1}",
                    actual=str(c),
                ),
            )

    for s in range(s_max + 1):
        for h in range(max(s - 1, 0)):
            for j in range(h + 1, (1 << (s - h - 1)) + h):
                expect_ab(s, h, j, 2 * h)
                expect_ab(s, h, j, 2 * h + 1)

    for h in range(s_max + 1):
        for xc in range(h + 1):
            for x in (2 * h, 2 * h + 1):
                cases += 1
                c = families.classify((x, xc))
                if c.family is not families.Family.N or c.s > h:
                    sweep.record(
                        (1, h, xc, x, 0),
                        Counterexample(
                            {"h": h, "xc": xc, "x": x},
                            expected=f"family N with s' <= {h}",
                            actual=str(c),
                        ),
                    )

    for s in range(1, s_max + 1):
        for k in range(s):
            for j in range((1 << (s - k - 1)) + k, (1 << (s - k)) + k):
                for fam in (families.Family.A, families.Family.B):
                    cases += 1
                    x, y = families.class_position(families.GrundyClass(s, fam, k, j))
                    if not (x <= 2 * s - 1 and 2 * y > x):
                        sweep.record(
                            (2, s, k, j, int(fam is families.Family.B)),
                            Counterexample(
                                {"s": s, "k": k, "j": j, "family": fam.value},
                                expected="x <= 2s-1 and 2y > x",
                                actual=f"x={x}, y={y}",
                            ),
                        )

    return _report("lemma-inclusions", f"s<={s_max}", cases, sweep, t0)


def fault_injection_self_test(
    x_max: int = 64,
    y_max: int = 64,
    seed: int = 0,
) -> VerificationReport:
    """Prove the equivalence sweep can fail: perturb one oracle table entry
    and require a counterexample at exactly that cell."""
    _check_box(x_max, y_max)
    t0 = time.perf_counter()
    table = engine.grundy_table(x_max, y_max)
    rng = random.Random(seed)
    px, py = rng.randint(0, x_max), rng.randint(0, y_max)
    perturbed = table.values.copy()
    perturbed[px, py] += 1
    inner = verify_grundy_equivalence(
        x_max, y_max, table=GrundyTable(x_max, y_max, perturbed)
    )
    cx = inner.first_counterexample
    ok = (
        not inner.passed
        and cx is not None
        and cx.inputs.get("x") == px
        and cx.inputs.get("y") == py
    )
    found = None
    if not ok:
        found = Counterexample(
            {"perturbed_x": px, "perturbed_y": py},
            expected="sweep fails at the perturbed cell",
            actual="passed" if inner.passed else f"failed elsewhere: {cx}",
        )
    return VerificationReport(
        check_name="fault-injection",
        range_spec=f"x<={x_max},y<={y_max},seed={seed}",
        cases_checked=inner.cases_checked,
        passed=ok,
        first_counterexample=found,
        elapsed_seconds=time.perf_counter() - t0,
    )


# named suites for the CLI; each takes the bounds mapping with keys
# xmax/ymax/vmax/smax and picks what it needs
SuiteRunner = Callable[[dict], VerificationReport]

SUITES: dict[str, SuiteRunner] = {
    "grundy-equivalence": lambda b: verify_grundy_equivalence(b["xmax"], b["ymax"]),
    "partition": lambda b: verify_partition(b["xmax"], b["ymax"], b["smax"]),
    "move-lemmas": lambda b: verify_move_lemmas(b["xmax"], b["ymax"]),
    "correspondence": lambda b: verify_correspondence(b["xmax"]),
    "josephus-forms": lambda b: verify_josephus_forms(b["vmax"]),
    "lemma-inclusions": lambda b: verify_lemma_inclusions(b["smax"]),
    "fault-injection": lambda b: fault_injection_self_test(b["xmax"], b["ymax"]),
}
