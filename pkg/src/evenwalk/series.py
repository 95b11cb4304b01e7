"""Coefficient tables: rows of ``(k, c_k, ratio, growth)`` plus metadata."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

# Published values of c_0 .. c_16; shipped for --verify-table.
PUBLISHED_CK: tuple[int, ...] = (
    1,
    2,
    14,
    116,
    1110,
    11372,
    123020,
    1384168,
    16058982,
    190948796,
    2317085924,
    28602719576,
    358298116092,
    4545807497272,
    58321701832408,
    755700271652816,
    9878971460641414,
)


@dataclass(frozen=True)
class SeriesRow:
    k: int
    ck: int
    ratio: Fraction | None = None
    growth: float | None = None

    @property
    def exponent(self) -> int:
        """Power of ``1/z`` this coefficient multiplies in the resolvent."""
        return 4 * self.k + 1


@dataclass
class SeriesTable:
    rows: list[SeriesRow]
    meta: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_values(cls, values: Sequence[int], **meta) -> "SeriesTable":
        rows = []
        for k, ck in enumerate(values):
            if k == 0 or values[k - 1] == 0:
                rows.append(SeriesRow(k, ck))
            else:
                ratio = Fraction(ck, values[k - 1])
                rows.append(SeriesRow(k, ck, ratio, float(ratio) ** 0.25))
        return cls(rows, dict(meta))

    @property
    def values(self) -> list[int]:
        return [r.ck for r in self.rows]

    def resolvent_terms(self) -> list[tuple[int, int]]:
        """``(exponent, coefficient)`` pairs of ``G(z) = sum c_k z^-(4k+1)``."""
        return [(r.exponent, r.ck) for r in self.rows]


def mismatches(values: Sequence[int], reference: Sequence[int] = PUBLISHED_CK) -> list[int]:
    """Indices where ``values`` and ``reference`` overlap but disagree."""
    return [k for k, (a, b) in enumerate(zip(values, reference)) if a != b]
