"""Brute-force enumeration of closed walks on the integer line.

This is the ground truth for small lengths: every closed step sequence is
generated depth-first and tested against the definition (every site other
than the origin occupied an even number of times).  Nothing here uses the
binomial formulas in :mod:`evenwalk.counting`.
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .counting import ExponentProfile

DEFAULT_STEP_CAP = 24


@dataclass(frozen=True)
class WalkPath:
    steps: tuple[int, ...]
    positions: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        steps = tuple(self.steps)
        pos = [0]
        for s in steps:
            if s not in (1, -1):
                raise ValueError(f"steps must be +1 or -1, got {s!r}")
            pos.append(pos[-1] + s)
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "positions", tuple(pos))

    @classmethod
    def from_string(cls, text: str) -> "WalkPath":
        """``"UDUD"`` style constructor."""
        table = {"U": 1, "D": -1}
        return cls(tuple(table[c] for c in text.upper()))

    def __len__(self):
        return len(self.steps)

    @property
    def closed(self) -> bool:
        return self.positions[-1] == 0

    @property
    def width(self) -> int:
        return max(self.positions) - min(self.positions)


@dataclass(frozen=True)
class VisitStats:
    visit_count: dict[int, int]
    up_step_count: dict[int, int]


def visit_stats(w: WalkPath) -> VisitStats:
    visits = Counter(w.positions)
    ups = Counter(p for p, s in zip(w.positions, w.steps) if s == 1)
    return VisitStats(dict(visits), dict(ups))


def is_even_visiting(w: WalkPath) -> bool:
    """True iff every site other than the origin is occupied an even number of times.

    Cross-checks the answer against the edge criterion (every edge climbed
    an even number of times) and, for accepted walks, that the origin
    itself is occupied an odd number of times.
    """
    if not w.closed:
        raise ValueError("walk is not closed")
    stats = visit_stats(w)
    by_sites = all(c % 2 == 0 for s, c in stats.visit_count.items() if s != 0)
    by_edges = all(c % 2 == 0 for c in stats.up_step_count.values())
    assert by_sites == by_edges, f"visit/edge parity disagree on {w.steps}"
    if by_sites:
        assert stats.visit_count[0] % 2 == 1
    return by_sites


def exponent_profile(w: WalkPath) -> ExponentProfile:
    """Climb counts per edge, split into edges below and above the origin."""
    ups = visit_stats(w).up_step_count
    lo = min(w.positions)
    hi = max(w.positions)
    below = tuple(ups.get(i, 0) for i in range(lo, 0))
    above = tuple(ups.get(i, 0) for i in range(0, hi))
    return ExponentProfile(below, above)


def _check_length(length: int, cap: int) -> None:
    if length < 0:
        raise ValueError("length must be nonnegative")
    if length > cap:
        raise ValueError(f"length {length} exceeds enumeration cap {cap}")


def _dfs(length: int, prefix: Sequence[int], visit: Callable[[list[int], int], None]) -> None:
    """Depth-first over closed walks of ``length`` steps starting with ``prefix``.

    ``visit(steps, odd)`` receives every closed walk, where ``odd`` is the
    number of sites other than the origin occupied an odd number of times.
    ``steps`` is reused between calls.
    """
    visits = [0] * (2 * length + 1)
    steps = list(prefix)
    pos = 0
    for s in steps:
        pos += s
        visits[pos + length] += 1
    odd = sum(v % 2 for i, v in enumerate(visits) if i != length)

    def rec(pos: int, left: int, odd: int) -> None:
        if left == 0:
            if pos == 0:
                visit(steps, odd)
            return
        # must be able to get back
        for s in (1, -1):
            nxt = pos + s
            if abs(nxt) > left - 1:
                continue
            i = nxt + length
            visits[i] += 1
            steps.append(s)
            if nxt == 0:
                rec(nxt, left - 1, odd)
            else:
                rec(nxt, left - 1, odd + (1 if visits[i] % 2 else -1))
            steps.pop()
            visits[i] -= 1

    if abs(pos) <= length - len(steps):
        rec(pos, length - len(steps), odd)


def _prefixes(length: int, depth: int) -> list[tuple[int, ...]]:
    depth = min(depth, length)
    out = [()]
    for _ in range(depth):
        out = [p + (s,) for p in out for s in (1, -1)]
    return out


def iter_closed_walks(length: int, cap: int = DEFAULT_STEP_CAP) -> Iterator[WalkPath]:
    """Every closed walk of ``length`` steps (there are C(length, length/2))."""
    _check_length(length, cap)
    found = []
    _dfs(length, (), lambda steps, odd: found.append(tuple(steps)))
    for steps in found:
        yield WalkPath(steps)


def _count_subtree(length: int, prefix: tuple[int, ...]) -> tuple[int, int]:
    closed = 0
    even = 0

    def visit(steps, odd):
        nonlocal closed, even
        closed += 1
        if odd == 0:
            even += 1

    _dfs(length, prefix, visit)
    return closed, even


def count_closed_and_even(length: int, cap: int = DEFAULT_STEP_CAP, threads: int = 1) -> tuple[int, int]:
    """``(closed walks, even-visiting walks)`` of ``length`` steps.

    Subtrees under fixed 4-step prefixes are counted independently and
    summed, so the result does not depend on ``threads``.
    """
    _check_length(length, cap)
    prefixes = _prefixes(length, 4)
    if threads <= 1:
        results = [_count_subtree(length, p) for p in prefixes]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda p: _count_subtree(length, p), prefixes))
    return sum(r[0] for r in results), sum(r[1] for r in results)


def count_even_visiting(length: int, cap: int = DEFAULT_STEP_CAP, threads: int = 1) -> int:
    """Number of even-visiting closed walks of ``length`` steps."""
    return count_closed_and_even(length, cap, threads)[1]


def count_by_profile(length: int, cap: int = DEFAULT_STEP_CAP) -> dict[ExponentProfile, int]:
    """Even-visiting walks of ``length`` steps bucketed by exponent profile."""
    _check_length(length, cap)
    buckets: Counter[ExponentProfile] = Counter()
    for w in iter_closed_walks(length, cap):
        if is_even_visiting(w):
            buckets[exponent_profile(w)] += 1
    return dict(buckets)
