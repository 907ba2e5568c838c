"""Segmented enumeration of sums of two squares.

Marks every value x^2 + y^2 inside a half-open window by walking lattice
columns with x <= y, then stitches windows into an ordered stream of
consecutive representable pairs.  Integer square roots come from
math.isqrt throughout; flooring a floating-point root is never safe once
x^2 + y^2 approaches 2^53.
"""

import math
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DEFAULT_SEGMENT_SIZE",
    "DEFAULT_MEMORY_CAP",
    "MAX_VALUE",
    "Segment",
    "GapPair",
    "mark_segment",
    "gap_stream",
]

DEFAULT_SEGMENT_SIZE = 1 << 24

# Cap on the per-window bitmap, in bitmap entries (one byte each).
DEFAULT_MEMORY_CAP = 1 << 30

MAX_VALUE = 2**63 - 1


@dataclass(frozen=True)
class Segment:
    """Membership bitmap for the window [lo, hi)."""

    lo: int
    hi: int
    bits: np.ndarray

    def values(self) -> np.ndarray:
        """Representable values in the window, ascending int64."""
        return np.flatnonzero(self.bits).astype(np.int64) + self.lo


@dataclass(frozen=True)
class GapPair:
    """Consecutive representable integers s < s_next; nothing representable between."""

    s: int
    s_next: int

    @property
    def gap(self) -> int:
        return self.s_next - self.s


def _ceil_sqrt(v: int) -> int:
    # least y >= 0 with y*y >= v
    if v <= 0:
        return 0
    return math.isqrt(v - 1) + 1


def mark_segment(
    lo: int,
    hi: int,
    *,
    allow_zero: bool = True,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> Segment:
    """Mark every sum of two squares in [lo, hi).

    For each column x the marked run starts at the least y >= x with
    x^2 + y^2 >= lo and stops before x^2 + y^2 >= hi.  Enumerating only
    y >= x halves the lattice work; marking is idempotent so values hit by
    several columns are harmless.  With allow_zero=False both summands must
    be at least 1.
    """
    if not isinstance(lo, int) or not isinstance(hi, int):
        raise ValueError("mark_segment: lo and hi must be integers")
    if lo < 0 or hi <= lo or hi > MAX_VALUE:
        raise ValueError(
            f"mark_segment: need 0 <= lo < hi <= 2**63 - 1, got lo={lo}, hi={hi}"
        )
    if hi - lo > memory_cap:
        raise ValueError(
            f"mark_segment: window of {hi - lo} values exceeds memory cap {memory_cap}"
        )
    bits = np.zeros(hi - lo, dtype=bool)
    x = 0 if allow_zero else 1
    while True:
        x2 = x * x
        if 2 * x2 >= hi:
            # columns beyond sqrt(hi/2) only revisit y < x territory
            break
        y0 = x if lo <= 2 * x2 else _ceil_sqrt(lo - x2)
        y1 = math.isqrt(hi - 1 - x2)
        if y0 <= y1:
            ys = np.arange(y0, y1 + 1, dtype=np.int64)
            bits[ys * ys + (x2 - lo)] = True
        x += 1
    return Segment(lo, hi, bits)


def gap_stream(
    start: int,
    limit: int,
    *,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    allow_zero: bool = True,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> Iterator[GapPair]:
    """Yield every GapPair with start <= s <= limit, in increasing s order.

    The final pair may have s_next beyond limit; the stream reads ahead into
    following windows until that successor appears.  Windows with no set
    bits simply carry the pending predecessor forward.
    """
    if start < 0:
        raise ValueError(f"gap_stream: start must be >= 0, got {start}")
    if start >= limit:
        raise ValueError(f"gap_stream: need start < limit, got {start} >= {limit}")
    if segment_size < 2:
        raise ValueError(f"gap_stream: segment_size must be >= 2, got {segment_size}")
    prev = None
    lo = start
    while True:
        if lo >= MAX_VALUE:
            raise ValueError("gap_stream: window ran past 2**63 - 1")
        hi = min(lo + segment_size, MAX_VALUE)
        seg = mark_segment(lo, hi, allow_zero=allow_zero, memory_cap=memory_cap)
        for v in seg.values().tolist():
            if prev is not None and prev >= 1:
                yield GapPair(prev, v)
            prev = v
            if prev > limit:
                return
        lo = hi
