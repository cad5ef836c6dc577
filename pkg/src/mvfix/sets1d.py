"""Compact subsets of the real line and the Hausdorff metric.

A set is a finite union of closed intervals, kept sorted and disjoint.
Every sup/inf in the metric computations reduces to a finite candidate
enumeration (interval endpoints plus gap midpoints), so distances are
exact up to binary64 rounding; nothing here relies on sampling.

Glossary used throughout the package:

* ``dist_point_set(x, B)``  is  D(x, B) = inf over b in B of |x - b|
* ``excess(A, B)``          is  sup over a in A of D(a, B)
* ``hausdorff(A, B)``       is  max(excess(A, B), excess(B, A))
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InvariantError

__all__ = [
    "CompactSet",
    "dist_point_set",
    "nearest_point",
    "excess",
    "hausdorff",
    "domain_grid",
    "sample_point",
]


def _normalize(raw: Iterable[Sequence[float]]) -> tuple[tuple[float, float], ...]:
    pairs = []
    for item in raw:
        lo, hi = float(item[0]), float(item[1])
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise InvariantError(f"interval endpoints must be finite, got ({lo}, {hi})")
        if lo > hi:
            raise InvariantError(f"interval has lo > hi: ({lo}, {hi})")
        pairs.append((lo, hi))
    if not pairs:
        raise InvariantError("a compact set needs at least one interval")
    pairs.sort()
    merged = [pairs[0]]
    for lo, hi in pairs[1:]:
        plo, phi = merged[-1]
        # touching intervals merge, so the remaining gaps are strictly positive
        if lo <= phi:
            merged[-1] = (plo, max(phi, hi))
        else:
            merged.append((lo, hi))
    return tuple(merged)


@dataclass(frozen=True)
class CompactSet:
    """Finite union of closed intervals ``[lo, hi]``, sorted and disjoint.

    Construction normalizes its input: intervals are sorted, overlapping or
    touching intervals are merged, and non-finite or reversed endpoint pairs
    are rejected.  Singletons are intervals with ``lo == hi``.
    """

    intervals: tuple[tuple[float, float], ...]

    def __init__(self, intervals: Iterable[Sequence[float]]):
        object.__setattr__(self, "intervals", _normalize(intervals))

    @classmethod
    def point(cls, x: float) -> "CompactSet":
        return cls([(x, x)])

    @classmethod
    def interval(cls, lo: float, hi: float) -> "CompactSet":
        return cls([(lo, hi)])

    @classmethod
    def from_points(cls, xs: Iterable[float]) -> "CompactSet":
        return cls([(x, x) for x in xs])

    @property
    def min(self) -> float:
        return self.intervals[0][0]

    @property
    def max(self) -> float:
        return self.intervals[-1][1]

    @property
    def total_length(self) -> float:
        return sum(hi - lo for lo, hi in self.intervals)

    def contains(self, x: float) -> bool:
        return any(lo <= x <= hi for lo, hi in self.intervals)

    __contains__ = contains

    def __iter__(self) -> Iterator[tuple[float, float]]:
        return iter(self.intervals)

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{{{lo}}}" if lo == hi else f"[{lo}, {hi}]" for lo, hi in self.intervals
        )
        return f"CompactSet({parts})"


def _nearest(x: float, B: CompactSet) -> tuple[float, float]:
    # Candidate per interval is the clamp of x onto it; candidates are
    # nondecreasing along a sorted set, so strict improvement keeps the
    # smaller point on ties.
    best_p = B.intervals[0][0]
    best_d = math.inf
    for lo, hi in B.intervals:
        p = lo if x < lo else (hi if x > hi else x)
        d = abs(x - p)
        if d < best_d:
            best_p, best_d = p, d
    return best_p, best_d


def dist_point_set(x: float, B: CompactSet) -> float:
    """Distance from the point ``x`` to the set ``B`` (0 iff ``x`` is in ``B``)."""
    return _nearest(x, B)[1]


def nearest_point(x: float, B: CompactSet) -> float:
    """Point of ``B`` closest to ``x``; ties resolve to the smaller point."""
    return _nearest(x, B)[0]


def excess(A: CompactSet, B: CompactSet) -> float:
    """One-sided excess of ``A`` over ``B``: sup over a in A of D(a, B).

    D(., B) is piecewise linear with local maxima only at the midpoints of
    B's gaps, so the sup over A is attained either at an interval endpoint
    of A or at a gap midpoint of B that lies inside A.  Enumerating those
    candidates makes the result exact.
    """
    candidates = []
    for lo, hi in A.intervals:
        candidates.append(lo)
        candidates.append(hi)
    for (_, prev_hi), (next_lo, _) in zip(B.intervals, B.intervals[1:]):
        mid = 0.5 * (prev_hi + next_lo)
        candidates.append(nearest_point(mid, A))
    return max(dist_point_set(c, B) for c in candidates)


def hausdorff(A: CompactSet, B: CompactSet) -> float:
    """Hausdorff distance: the larger of the two one-sided excesses."""
    return max(excess(A, B), excess(B, A))


def domain_grid(A: CompactSet, size: int) -> list[float]:
    """Deterministic evenly spaced grid over ``A`` with roughly ``size`` points.

    Every interval endpoint is included.  For a single interval this is
    exactly ``numpy.linspace(lo, hi, size)``; for unions the points are
    split across intervals in proportion to length, with at least two per
    interval of positive length and one per singleton.
    """
    if size < 1:
        raise ValueError("grid size must be at least 1")
    total = A.total_length
    if total == 0.0:
        return [lo for lo, _ in A.intervals][:size] or [A.min]
    points: list[float] = []
    for lo, hi in A.intervals:
        if hi == lo:
            points.append(lo)
            continue
        n = max(2, round(size * (hi - lo) / total))
        points.extend(float(t) for t in np.linspace(lo, hi, n))
    return points


def sample_point(A: CompactSet, rng: np.random.Generator) -> float:
    """Draw a point uniformly from ``A`` (by length, or uniformly over
    the points when the set is finite)."""
    total = A.total_length
    if total == 0.0:
        pts = [lo for lo, _ in A.intervals]
        return pts[int(rng.integers(len(pts)))]
    u = float(rng.random()) * total
    for lo, hi in A.intervals:
        w = hi - lo
        if u <= w:
            return min(lo + u, hi)
        u -= w
    return A.intervals[-1][1]
