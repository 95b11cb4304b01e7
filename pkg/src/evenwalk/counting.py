"""Exact counting of even-visiting closed walks on the integer line.

A closed walk is described by how many times it climbs each edge
``i -> i+1``.  For an even-visiting walk every such count is even, so a
walk of ``4k`` steps carries counts ``2*n_1, ..., 2*n_t`` on ``t``
consecutive edges with ``n_1 + ... + n_t == k``.  The tuple
``(n_1, ..., n_t)`` is a composition of ``k``; summing the class sums
over all compositions gives ``c_k``.

Two routes are provided:

* :func:`ck_by_composition` walks the ``2**(k-1)`` compositions directly
  (optionally split over worker processes);
* :func:`ck_fast` contracts the same sum with a first-part recurrence in
  ``O(k**3)`` big-integer operations.

All counts are Python ``int`` so nothing overflows.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence


class ConsistencyError(ArithmeticError):
    """An exact division left a remainder; the formula code is wrong."""


# ---------------------------------------------------------------------------
# Binomials
# ---------------------------------------------------------------------------

class BinomialTable:
    """Pascal triangle of exact binomials, rows ``0..max_row``.

    Every factor needed for ``c_k`` has a top argument below ``4k``, so a
    table built once for ``4 * k_max`` rows covers a whole run.  The table
    only ever grows; reading it is safe from several threads.
    """

    def __init__(self, max_row: int = 0):
        self._rows: list[list[int]] = [[1]]
        self.extend(max_row)

    @property
    def max_row(self) -> int:
        return len(self._rows) - 1

    def extend(self, max_row: int) -> None:
        rows = self._rows
        while len(rows) <= max_row:
            prev = rows[-1]
            row = [1] * (len(prev) + 1)
            for j in range(1, len(prev)):
                row[j] = prev[j - 1] + prev[j]
            rows.append(row)

    def __call__(self, a: int, b: int) -> int:
        if a < 0 or b < 0:
            raise ValueError(f"binomial arguments must be nonnegative, got ({a}, {b})")
        if b > a:
            return 0
        if a > self.max_row:
            self.extend(a)
        return self._rows[a][b]


_TABLE = BinomialTable(64)


def binomial(a: int, b: int) -> int:
    """C(a, b) from the shared Pascal table; zero when ``b > a``."""
    return _TABLE(a, b)


def prepare_binomials(k_max: int) -> None:
    """Build the shared table up to row ``4 * k_max`` before any parallel work."""
    _TABLE.extend(4 * k_max)


# ---------------------------------------------------------------------------
# Compositions
# ---------------------------------------------------------------------------

def composition_count(k: int) -> int:
    if k < 1:
        return 0
    return 1 << (k - 1)


def unrank_composition(k: int, rank: int) -> tuple[int, ...]:
    """Composition of ``k`` at position ``rank`` in lexicographic order.

    Bit ``i`` (counting from the high end, ``i = 1..k-1``) of the cut mask
    says whether a part ends after unit ``i``.  Lexicographic order of the
    parts is descending order of the mask, so rank 0 is ``(1, 1, ..., 1)``
    and the last rank is ``(k,)``.
    """
    total = composition_count(k)
    if not 0 <= rank < total:
        raise IndexError(f"rank {rank} out of range for k={k}")
    mask = total - 1 - rank
    parts = []
    run = 1
    for bit in range(k - 2, -1, -1):
        if mask >> bit & 1:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return tuple(parts)


def compositions(k: int, start: int = 0, stop: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield compositions of ``k`` in lexicographic order.

    ``start``/``stop`` select a contiguous slice of ranks, which is how the
    stream is cut into disjoint chunks for a parallel reduction.

    >>> list(compositions(3))
    [(1, 1, 1), (1, 2), (2, 1), (3,)]
    """
    if k < 1:
        raise ValueError("k must be >= 1; c_0 has no compositions")
    total = composition_count(k)
    stop = total if stop is None else min(stop, total)
    for rank in range(max(start, 0), stop):
        yield unrank_composition(k, rank)


def chunk_bounds(total: int, chunks: int) -> list[tuple[int, int]]:
    """Split ``range(total)`` into at most ``chunks`` contiguous nonempty pieces."""
    chunks = max(1, min(chunks, total))
    base, extra = divmod(total, chunks)
    bounds = []
    lo = 0
    for i in range(chunks):
        hi = lo + base + (i < extra)
        bounds.append((lo, hi))
        lo = hi
    return bounds


# ---------------------------------------------------------------------------
# Multiplicities
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class ExponentProfile:
    """Even climb counts of a walk, split at its starting site.

    ``below`` lists the counts on edges under the origin, farthest first;
    ``above`` lists the counts on edges from the origin upwards.
    """

    below: tuple[int, ...] = ()
    above: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "below", tuple(self.below))
        object.__setattr__(self, "above", tuple(self.above))

    @property
    def exponents(self) -> tuple[int, ...]:
        return self.below + self.above

    @property
    def width(self) -> int:
        return len(self.below) + len(self.above)

    def composition(self) -> tuple[int, ...]:
        return tuple(e // 2 for e in self.exponents)


def adjacency_product(parts: Sequence[int]) -> int:
    """Walks with climb counts ``2*parts`` whose lowest site is the start.

    One factor ``C(2n_{i+1} + 2n_i - 1, 2n_{i+1})`` per adjacent pair: the
    ``2n_{i+1}`` excursions to the next level are spread over the ``2n_i``
    visits to the current top.
    """
    if not parts:
        raise ValueError("empty composition")
    total = 1
    for lo, hi in zip(parts, parts[1:]):
        total *= binomial(2 * hi + 2 * lo - 1, 2 * hi)
    return total


def _chain_product(exps: Sequence[int]) -> int:
    # exps run from the origin outwards
    total = 1
    for inner, outer in zip(exps, exps[1:]):
        total *= binomial(outer + inner - 1, outer)
    return total


def class_multiplicity(profile: ExponentProfile) -> int:
    """Number of even-visiting walks from the origin with exactly this profile."""
    exps = profile.exponents
    if not exps:
        raise ValueError("empty exponent profile")
    for e in exps:
        if e < 2 or e % 2:
            raise ValueError(f"exponents must be even and >= 2, got {exps}")
    above = profile.above
    below = profile.below[::-1]
    total = _chain_product(above)
    if below:
        # the first level below the origin hangs off the origin's
        # above[0] + 1 visits (one visit if nothing is above)
        top = above[0] if above else 0
        total *= binomial(below[0] + top, below[0])
        total *= _chain_product(below)
    return total


def origin_placements(parts: Sequence[int]) -> list[ExponentProfile]:
    """The ``t + 1`` profiles of a width-``t`` composition, origin at the bottom last."""
    exps = tuple(2 * n for n in parts)
    t = len(exps)
    return [ExponentProfile(exps[: t - s], exps[t - s:]) for s in range(t + 1)]


def class_sum(parts: Sequence[int]) -> int:
    """Total multiplicity over all origin placements of a composition.

    Equals ``2k * adjacency_product(parts) / parts[0]``; the product is
    taken before dividing and the division must be exact.
    """
    k = sum(parts)
    num = 2 * k * adjacency_product(parts)
    q, r = divmod(num, parts[0])
    if r:
        raise ConsistencyError(f"2k*prod not divisible by n_1 for {tuple(parts)}")
    return q


# ---------------------------------------------------------------------------
# c_k
# ---------------------------------------------------------------------------

def _class_sum_range(k: int, lo: int, hi: int) -> int:
    prepare_binomials(k)
    return sum(class_sum(c) for c in compositions(k, lo, hi))


def ck_by_composition(k: int, workers: int = 1) -> int:
    """``c_k`` as the sum of class sums over every composition of ``k``.

    With ``workers > 1`` the rank range is split into contiguous chunks
    summed in separate processes; integer addition makes the result
    independent of the split.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return 1
    prepare_binomials(k)
    total = composition_count(k)
    if workers <= 1 or total < 1024:
        return _class_sum_range(k, 0, total)
    bounds = chunk_bounds(total, 4 * workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_class_sum_range, [k] * len(bounds), *zip(*bounds))
        return sum(parts)


def first_part_sums(k: int) -> list[list[int]]:
    """``g[m][a]``: sum of adjacency products over compositions of ``m`` starting with ``a``.

    ``g[m][a] = [m == a] + sum_b C(2b + 2a - 1, 2b) * g[m - a][b]``.
    """
    prepare_binomials(k)
    g = [[0] * (k + 1) for _ in range(k + 1)]
    for m in range(1, k + 1):
        row = g[m]
        for a in range(1, m + 1):
            rest = m - a
            acc = 1 if rest == 0 else 0
            sub = g[rest]
            for b in range(1, rest + 1):
                acc += binomial(2 * b + 2 * a - 1, 2 * b) * sub[b]
            row[a] = acc
    return g


def ck_fast(k: int) -> int:
    """``c_k`` via the first-part recurrence; same value as :func:`ck_by_composition`."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return 1
    g = first_part_sums(k)[k]
    total = 0
    for a in range(1, k + 1):
        q, r = divmod(2 * k * g[a], a)
        if r:
            raise ConsistencyError(f"2k*g(k,{a}) not divisible by {a}")
        total += q
    return total


def ck_series(k_max: int, method: str = "dp", workers: int = 1) -> list[int]:
    """``[c_0, ..., c_k_max]``."""
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    if method == "dp":
        # one table serves every k <= k_max
        g = first_part_sums(k_max)
        out = [1]
        for k in range(1, k_max + 1):
            total = 0
            for a in range(1, k + 1):
                q, r = divmod(2 * k * g[k][a], a)
                if r:
                    raise ConsistencyError(f"2k*g({k},{a}) not divisible by {a}")
                total += q
            out.append(total)
        return out
    if method == "compose":
        return [ck_by_composition(k, workers) for k in range(k_max + 1)]
    raise ValueError(f"unknown method {method!r}")
