"""Moments of the random ring matrix and the resolvent series.

The matrix has ones on the subdiagonal, random signs ``x_1..x_{N-1}`` on
the superdiagonal and two corner entries closing the chain into a ring:
``M[0, N-1] = 1`` and ``M[N-1, 0] = x_N``.  Row ``i`` of ``M @ v`` is
therefore ``v[i-1] + x[i] * v[i+1]`` with indices taken mod ``N``.

``(1/N) <Tr M^(4k)>`` over uniform signs equals ``c_k`` once ``N >= 4k+2``;
below that, walks can wind around the ring and the value differs.

Traces are exact integers throughout.  Batched evaluation uses ``int64``
while ``N * 2**m`` fits and falls back to Python ints otherwise.

Monte-Carlo sample ``i`` of seed ``s`` draws its signs from
``numpy.random.default_rng(SeedSequence(s, spawn_key=(i,)))``, so any
subset of samples can be evaluated in any order or thread and the totals
are identical.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .counting import ck_series
from .series import SeriesTable

DEFAULT_EXHAUSTIVE_CAP = 20
_BATCH = 4096


@dataclass(frozen=True)
class SignConfig:
    x: tuple[int, ...]

    def __post_init__(self):
        x = tuple(int(v) for v in self.x)
        if len(x) < 2:
            raise ValueError("matrix order must be at least 2")
        if any(v not in (1, -1) for v in x):
            raise ValueError("sign entries must be +1 or -1")
        object.__setattr__(self, "x", x)

    @property
    def N(self) -> int:
        return len(self.x)

    @classmethod
    def from_index(cls, N: int, index: int) -> "SignConfig":
        """Bit ``i`` of ``index`` set means ``x_{i+1} = -1``."""
        return cls(tuple(-1 if index >> i & 1 else 1 for i in range(N)))


def ring_matrix(s: SignConfig) -> np.ndarray:
    """Dense integer form of the ring matrix.

    Entries are accumulated, so for ``N == 2`` the corner and off-diagonal
    terms that share a cell add up, matching :func:`apply_ring`.
    """
    N = s.N
    M = np.zeros((N, N), dtype=np.int64)
    for i in range(N):
        M[i, (i - 1) % N] += 1
        M[i, (i + 1) % N] += s.x[i]
    return M


def apply_ring(x: Sequence[int], v: Sequence[int]) -> list[int]:
    """``M @ v`` using the two nonzeros per row."""
    N = len(x)
    return [v[i - 1] + x[i] * v[(i + 1) % N] for i in range(N)]


def trace_power(s: SignConfig, m: int) -> int:
    """Exact ``Tr(M^m)``, one column at a time."""
    if m < 0:
        raise ValueError("power must be nonnegative")
    N = s.N
    total = 0
    for j in range(N):
        v = [0] * N
        v[j] = 1
        for _ in range(m):
            v = apply_ring(s.x, v)
        total += v[j]
    return total


def batch_traces(X: np.ndarray, m: int) -> list[int]:
    """``Tr(M^m)`` for every row of sign matrix ``X`` (shape ``(B, N)``)."""
    B, N = X.shape
    exact = N * 2.0 ** m < 2.0 ** 62
    dtype = np.int64 if exact else object
    h = m // 2
    if m >= N:
        X = X.astype(dtype)[:, :, None]
        V = np.broadcast_to(np.eye(N, dtype=dtype), (B, N, N)).copy()
        for _ in range(m):
            V = np.roll(V, 1, axis=1) + X * np.roll(V, -1, axis=1)
        diag = np.trace(V, axis1=1, axis2=2)
        return [int(t) for t in diag]
    # With m < N nothing winds around the ring, and a walk back to column j
    # within m steps stays inside offsets -h..h; keep only that window.
    offsets = np.arange(-h, h + 1)
    Xw = X.astype(dtype)[:, (np.arange(N)[:, None] + offsets) % N]
    V = np.zeros((B, N, 2 * h + 3), dtype=dtype)
    V[:, :, h + 1] = 1
    for _ in range(m):
        nxt = np.zeros_like(V)
        nxt[:, :, 1:-1] = V[:, :, :-2] + Xw * V[:, :, 2:]
        V = nxt
    return [int(t) for t in V[:, :, h + 1].sum(axis=1)]


def _config_block(N: int, lo: int, hi: int) -> np.ndarray:
    idx = np.arange(lo, hi, dtype=np.int64)[:, None]
    bits = (idx >> np.arange(N, dtype=np.int64)) & 1
    return 1 - 2 * bits


def _sample_block(N: int, seed: int, lo: int, hi: int) -> np.ndarray:
    rows = []
    for i in range(lo, hi):
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(i,)))
        rows.append(rng.integers(0, 2, size=N))
    return 1 - 2 * np.array(rows, dtype=np.int64).reshape(hi - lo, N)


def _run_blocks(work: Callable[[int, int], tuple[int, int]], total: int, threads: int) -> tuple[int, int]:
    blocks = [(lo, min(lo + _BATCH, total)) for lo in range(0, total, _BATCH)]
    if threads <= 1:
        parts = [work(lo, hi) for lo, hi in blocks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda b: work(*b), blocks))
    return sum(p[0] for p in parts), sum(p[1] for p in parts)


@dataclass(frozen=True)
class MomentEstimate:
    """``(1/N) <Tr M^power>`` from exhaustive averaging or sampling.

    Exhaustive results carry an exact ``Fraction`` in ``value`` and zero
    ``stderr``.  Sampled results carry the float mean and its standard error
    (sample standard deviation over ``sqrt(samples)``), together with the
    exact integer trace sums they were computed from.
    """

    k: int
    N: int
    power: int
    mode: str
    value: Fraction | float
    stderr: float
    samples: int
    seed: int | None = None
    trace_sum: int = 0
    trace_sq_sum: int = 0

    @property
    def winding_free(self) -> bool:
        """True when no closed walk of this length can wrap around the ring."""
        return self.N >= self.power + 2

    def z_score(self, target: float) -> float:
        if self.stderr == 0:
            return 0.0 if self.value == target else math.copysign(math.inf, float(self.value) - target)
        return (float(self.value) - target) / self.stderr


def exact_trace_sum(N: int, m: int, cap: int = DEFAULT_EXHAUSTIVE_CAP, threads: int = 1) -> int:
    """Sum of ``Tr(M^m)`` over all ``2**N`` sign configurations."""
    if N < 2:
        raise ValueError("matrix order must be at least 2")
    if N > cap:
        raise ValueError(f"N={N} exceeds exhaustive cap {cap}")

    def work(lo, hi):
        return sum(batch_traces(_config_block(N, lo, hi), m)), 0

    return _run_blocks(work, 1 << N, threads)[0]


def exact_trace_average(N: int, m: int, cap: int = DEFAULT_EXHAUSTIVE_CAP, threads: int = 1) -> Fraction:
    """``(1/N) <Tr M^m>`` as an exact fraction."""
    return Fraction(exact_trace_sum(N, m, cap, threads), N << N)


def exact_moment(N: int, k: int, cap: int = DEFAULT_EXHAUSTIVE_CAP, threads: int = 1) -> MomentEstimate:
    total = exact_trace_sum(N, 4 * k, cap, threads)
    value = Fraction(total, N << N)
    return MomentEstimate(k, N, 4 * k, "exact", value, 0.0, 1 << N, trace_sum=total)


def mc_moment(N: int, k: int, samples: int, seed: int, threads: int = 1) -> MomentEstimate:
    """Sampled ``(1/N) <Tr M^(4k)>`` with its standard error."""
    if samples < 2:
        raise ValueError("need at least two samples")
    if N < 2:
        raise ValueError("matrix order must be at least 2")
    m = 4 * k

    def work(lo, hi):
        traces = batch_traces(_sample_block(N, seed, lo, hi), m)
        return sum(traces), sum(t * t for t in traces)

    s1, s2 = _run_blocks(work, samples, threads)
    mean = Fraction(s1, N * samples)
    var = Fraction(s2 * samples - s1 * s1, samples * (samples - 1) * N * N)
    stderr = math.sqrt(var / samples)
    return MomentEstimate(k, N, m, "mc", float(mean), stderr, samples, seed, s1, s2)


def resolvent_series(kmax: int, source: Callable[[int], Sequence[int]] = ck_series) -> SeriesTable:
    """Coefficients of ``G(z) = sum_k c_k / z^(4k+1)`` up to ``k = kmax``.

    ``source(kmax)`` must return ``[c_0, ..., c_kmax]``.
    """
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    return SeriesTable.from_values(list(source(kmax)), kmax=kmax)

