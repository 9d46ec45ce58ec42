"""Ground truth: explicit Dyck paths, their statistics, and counting oracles.

A Dyck path is a sequence of up-steps (+1) and down-steps (-1) that starts
and ends at height 0 and never dips below it. A peak at height k is an
interior lattice point at height k entered by an up-step and left by a
down-step; a valley swaps the two steps. Endpoints are never peaks or
valleys.

This module provides two independent counting routes, exhaustive enumeration
and a polynomial-time dynamic program, plus the two statistic-preserving
rewrites used to certify count identities:

* ``psi``: simultaneously lowers every peak apex at height k by 2 and raises
  every valley bottom at height k - 2 by 2. It is an involution exchanging
  (peaks at k) with (valleys at k - 2).
* ``theta_forward``: strips the outer arch of a path with no valleys at
  height 0, a bijection onto paths one unit of semilength shorter.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from io import StringIO
from typing import Iterator, Literal

from .series import catalan_series

DEFAULT_ENUM_GUARD = 14

UP = 1
DOWN = -1

_CHAR_TO_STEP = {"U": UP, "u": UP, "(": UP, "D": DOWN, "d": DOWN, ")": DOWN}


class StatKind(enum.Enum):
    """Which interior pattern is being counted."""

    PEAK = "peak"
    VALLEY = "valley"


class PathError(ValueError):
    """A step sequence is not a valid Dyck path; ``index`` locates the offense."""

    def __init__(self, message: str, index: int):
        super().__init__(f"{message} (index {index})")
        self.index = index


@dataclass(frozen=True)
class DyckPath:
    """An explicit up/down step sequence, validated on construction."""

    steps: tuple[int, ...]

    def __post_init__(self) -> None:
        height = 0
        for i, s in enumerate(self.steps):
            if s not in (UP, DOWN):
                raise PathError(f"step must be +1 or -1, got {s!r}", i)
            height += s
            if height < 0:
                raise PathError("path dips below the axis", i)
        if height != 0:
            first_unmatched = self._first_unmatched_up()
            raise PathError(f"path ends at height {height}, not 0", first_unmatched)

    def _first_unmatched_up(self) -> int:
        stack: list[int] = []
        for i, s in enumerate(self.steps):
            if s == UP:
                stack.append(i)
            elif stack:
                stack.pop()
        return stack[0] if stack else len(self.steps)

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def heights(self) -> tuple[int, ...]:
        """Lattice heights of the 2n + 1 path points."""
        out = [0]
        h = 0
        for s in self.steps:
            h += s
            out.append(h)
        return tuple(out)

    def to_text(self) -> str:
        return "".join("U" if s == UP else "D" for s in self.steps)

    def __str__(self) -> str:
        return self.to_text()


def parse_path(text: str) -> DyckPath:
    """Parse a path over U/D (or u/d, or parentheses); whitespace is ignored.

    Raises :class:`PathError` carrying the first offending index into the
    original text: an alien character, the first step to dip below the axis,
    or the first up-step left unmatched.
    """
    steps: list[int] = []
    positions: list[int] = []
    for i, ch in enumerate(text):
        if ch.isspace():
            continue
        step = _CHAR_TO_STEP.get(ch)
        if step is None:
            raise PathError(f"unexpected character {ch!r}", i)
        steps.append(step)
        positions.append(i)
    height = 0
    stack: list[int] = []
    for j, s in enumerate(steps):
        height += s
        if height < 0:
            raise PathError("path dips below the axis", positions[j])
        if s == UP:
            stack.append(positions[j])
        else:
            stack.pop()
    if height != 0:
        raise PathError(f"path ends at height {height}, not 0", stack[0])
    return DyckPath(tuple(steps))


@dataclass(frozen=True)
class StatProfile:
    """Peak and valley counts, keyed by height; only nonzero counts stored."""

    peaks_by_height: dict[int, int]
    valleys_by_height: dict[int, int]
    max_height: int

    def count(self, kind: StatKind, height: int) -> int:
        table = self.peaks_by_height if kind is StatKind.PEAK else self.valleys_by_height
        return table.get(height, 0)


def statistics(path: DyckPath) -> StatProfile:
    """Scan a path once and tally its peaks and valleys by height."""
    peaks: dict[int, int] = {}
    valleys: dict[int, int] = {}
    steps = path.steps
    h = 0
    max_h = 0
    for j in range(len(steps)):
        h += steps[j]
        if h > max_h:
            max_h = h
        if j + 1 == len(steps):
            break
        if steps[j] == UP and steps[j + 1] == DOWN:
            peaks[h] = peaks.get(h, 0) + 1
        elif steps[j] == DOWN and steps[j + 1] == UP:
            valleys[h] = valleys.get(h, 0) + 1
    return StatProfile(peaks, valleys, max_h)


def enumerate_paths(n: int, *, guard: int = DEFAULT_ENUM_GUARD) -> Iterator[DyckPath]:
    """Yield every Dyck path of semilength n exactly once.

    Enumeration is exponential (there are catalan(n) paths); n above
    ``guard`` is refused unless the caller raises the guard deliberately.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > guard:
        raise ValueError(
            f"semilength {n} exceeds the enumeration guard {guard}; "
            f"pass guard={n} to override deliberately"
        )
    steps: list[int] = []

    def rec(height: int, ups_left: int, downs_left: int) -> Iterator[DyckPath]:
        if ups_left == 0 and downs_left == 0:
            yield DyckPath(tuple(steps))
            return
        if ups_left > 0:
            steps.append(UP)
            yield from rec(height + 1, ups_left - 1, downs_left)
            steps.pop()
        if downs_left > 0 and height > 0:
            steps.append(DOWN)
            yield from rec(height - 1, ups_left, downs_left - 1)
            steps.pop()

    yield from rec(0, n, n)


def _dp_distribution(n: int, k: int, kind: StatKind, cap: int) -> list[int]:
    """Counts of semilength-n paths by number of occurrences of the statistic.

    Returns a list of length cap + 1: index c < cap is the exact count of
    paths with c occurrences at height k, index cap collects "cap or more".
    State is (height, occurrences-so-far capped, last step direction).
    """
    if n == 0:
        out = [0] * (cap + 1)
        out[0] = 1
        return out
    peak = kind is StatKind.PEAK
    # last-step axis: 0 = start of path, 1 = up, 2 = down
    states: dict[tuple[int, int, int], int] = {(0, 0, 0): 1}
    total_steps = 2 * n
    for pos in range(total_steps):
        nxt: dict[tuple[int, int, int], int] = {}
        remaining = total_steps - pos
        for (h, c, last), ways in states.items():
            # up-step; a down-then-up corner is a valley at the current height
            if h + 1 <= remaining - 1:
                c2 = c
                if not peak and last == 2 and h == k:
                    c2 = min(c + 1, cap)
                key = (h + 1, c2, 1)
                nxt[key] = nxt.get(key, 0) + ways
            # down-step; an up-then-down corner is a peak at the current height
            if h > 0:
                c2 = c
                if peak and last == 1 and h == k:
                    c2 = min(c + 1, cap)
                key = (h - 1, c2, 2)
                nxt[key] = nxt.get(key, 0) + ways
        states = nxt
    out = [0] * (cap + 1)
    for (h, c, _last), ways in states.items():
        if h == 0:
            out[c] += ways
    return out


def count_exact_dp(n: int, k: int, r: int, kind: StatKind) -> int:
    """Number of semilength-n paths with exactly r occurrences at height k.

    Polynomial-time dynamic program; the occurrence axis is capped at r + 1
    (an overflow bucket), so the cost does not grow with n beyond the state
    space.
    """
    if n < 0 or k < 0 or r < 0:
        raise ValueError("n, k, r must be >= 0")
    if r > n:
        return 0
    return _dp_distribution(n, k, kind, r + 1)[r]


def bounded_height_count(n_steps: int, k: int, end_height: int) -> int:
    """Paths of ``n_steps`` single steps from height 0 to ``end_height``
    confined to the band [0, k]."""
    if end_height > k:
        raise ValueError("end_height must be <= k")
    if n_steps < 0 or end_height < 0 or k < 0:
        raise ValueError("arguments must be >= 0")
    cur = [0] * (k + 1)
    cur[0] = 1
    for _ in range(n_steps):
        nxt = [0] * (k + 1)
        for h, ways in enumerate(cur):
            if not ways:
                continue
            if h + 1 <= k:
                nxt[h + 1] += ways
            if h - 1 >= 0:
                nxt[h - 1] += ways
        cur = nxt
    return cur[end_height]


def psi(path: DyckPath, k: int) -> DyckPath:
    """Height-swap involution: peaks at height k trade places with valleys
    at height k - 2.

    All positions are classified on the input path first, then rewritten in
    one pass: every peak apex at height k drops by 2 and every valley bottom
    at height k - 2 rises by 2. Requires k >= 2 so a lowered apex stays on or
    above the axis.
    """
    if k < 2:
        raise ValueError("psi requires k >= 2")
    steps = path.steps
    heights = path.heights()
    delta = [0] * len(heights)
    for j in range(1, len(heights) - 1):
        is_peak = steps[j - 1] == UP and steps[j] == DOWN and heights[j] == k
        is_valley = steps[j - 1] == DOWN and steps[j] == UP and heights[j] == k - 2
        if is_peak and is_valley:
            raise RuntimeError(f"point {j} classified as both peak and valley")
        if is_peak:
            delta[j] = -2
        elif is_valley:
            delta[j] = 2
    new_heights = [h + d for h, d in zip(heights, delta)]
    new_steps = []
    for j in range(len(steps)):
        diff = new_heights[j + 1] - new_heights[j]
        if diff not in (UP, DOWN):
            raise RuntimeError(f"rewrite produced a non-unit step at {j}")
        new_steps.append(diff)
    return DyckPath(tuple(new_steps))


def theta_forward(path: DyckPath) -> DyckPath | None:
    """Strip the outer arch of a path with no valleys at height 0.

    Such a path touches the axis only at its endpoints, so it is an up-step,
    an inner path shifted up by one, and a down-step; the inner path is
    returned (None for the empty path). Raises ValueError if the input has a
    valley at height 0.
    """
    if statistics(path).count(StatKind.VALLEY, 0) != 0:
        raise ValueError("path has a valley at height 0; the outer arch is not unique")
    if not path.steps:
        return None
    return DyckPath(path.steps[1:-1])


def theta_inverse(path: DyckPath) -> DyckPath:
    """Re-wrap a path in an outer arch; inverse of :func:`theta_forward`."""
    return DyckPath((UP,) + path.steps + (DOWN,))


Method = Literal["enum", "dp", "gf"]


@dataclass
class CountTable:
    """Exact counts keyed by (semilength, height, occurrences, statistic)."""

    entries: dict[tuple[int, int, int, StatKind], int] = field(default_factory=dict)

    def get(self, n: int, k: int, r: int, kind: StatKind) -> int:
        return self.entries.get((n, k, r, kind), 0)

    def sorted_items(self) -> list[tuple[tuple[int, int, int, StatKind], int]]:
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2], kv[0][3].value))

    def to_csv(self) -> str:
        out = StringIO()
        out.write("n,k,r,kind,count\n")
        for (n, k, r, kind), count in self.sorted_items():
            out.write(f"{n},{k},{r},{kind.value},{count}\n")
        return out.getvalue()

    def to_json(self) -> str:
        rows = [
            {"n": n, "k": k, "r": r, "kind": kind.value, "count": str(count)}
            for (n, k, r, kind), count in self.sorted_items()
        ]
        return json.dumps({"entries": rows}, indent=2)

    def check_sum_rule(self) -> None:
        """Every (n, k, kind) row must sum to the total path count."""
        ns = sorted({key[0] for key in self.entries})
        if not ns:
            return
        catalan = catalan_series(max(ns)).coeffs
        sums: dict[tuple[int, int, StatKind], int] = {}
        for (n, k, _r, kind), count in self.entries.items():
            key = (n, k, kind)
            sums[key] = sums.get(key, 0) + count
        for (n, k, kind), total in sorted(sums.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2].value)):
            if total != catalan[n]:
                raise AssertionError(
                    f"sum over r at (n={n}, k={k}, kind={kind.value}) is {total}, "
                    f"expected {catalan[n]}"
                )


def build_table(
    n_max: int,
    k_max: int,
    method: Method,
    *,
    guard: int = DEFAULT_ENUM_GUARD,
) -> CountTable:
    """Full table of counts for n <= n_max, k <= k_max, r <= n, both kinds.

    The three methods are independent routes to the same numbers:
    exhaustive enumeration, the dynamic program, and generating-function
    coefficients.
    """
    table = CountTable()
    for n in range(n_max + 1):
        for k in range(k_max + 1):
            for r in range(n + 1):
                for kind in StatKind:
                    table.entries[(n, k, r, kind)] = 0
    if method == "enum":
        for n in range(n_max + 1):
            for path in enumerate_paths(n, guard=guard):
                profile = statistics(path)
                for k in range(k_max + 1):
                    for kind in StatKind:
                        r = profile.count(kind, k)
                        table.entries[(n, k, r, kind)] += 1
    elif method == "dp":
        for n in range(n_max + 1):
            for k in range(k_max + 1):
                for kind in StatKind:
                    dist = _dp_distribution(n, k, kind, n + 1)
                    for r in range(n + 1):
                        table.entries[(n, k, r, kind)] = dist[r]
    elif method == "gf":
        from .gfcount import stat_gf

        for k in range(k_max + 1):
            for kind in StatKind:
                for r in range(n_max + 1):
                    coeffs = stat_gf(kind, k, r, n_max).as_integer_sequence()
                    for n in range(n_max + 1):
                        if r <= n:
                            table.entries[(n, k, r, kind)] = coeffs[n]
    else:
        raise ValueError(f"unknown method {method!r}")
    return table
