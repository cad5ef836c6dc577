"""Shared test utilities: random set generation and sampling-based oracles.

The oracles here deliberately avoid the library's candidate-enumeration
code path: point-to-set distances use the clamp formula directly and
sups are taken over dense grids, so they provide an independent check of
the exact metric implementation.
"""

import numpy as np

from mvfix import CompactSet


def random_compact_set(rng, max_intervals=4, lo=-10.0, hi=10.0):
    count = int(rng.integers(1, max_intervals + 1))
    points = np.sort(rng.uniform(lo, hi, size=2 * count))
    intervals = []
    for i in range(count):
        a, b = float(points[2 * i]), float(points[2 * i + 1])
        if rng.random() < 0.25:
            b = a  # collapse to a singleton now and then
        intervals.append((a, b))
    return CompactSet(intervals)


def point_dist_oracle(x, B):
    """Clamp-formula distance from x to B, independent of the library."""
    return min(max(lo - x, x - hi, 0.0) for lo, hi in B.intervals)


def grid_over(A, n):
    """Dense grid over A: every endpoint plus evenly spaced interior points."""
    pts = []
    per = max(2, n // len(A.intervals))
    for lo, hi in A.intervals:
        if hi > lo:
            pts.extend(float(t) for t in np.linspace(lo, hi, per))
        else:
            pts.append(lo)
    return pts


def excess_by_sampling(A, B, n=10_000):
    return max(point_dist_oracle(a, B) for a in grid_over(A, n))


def hausdorff_by_sampling(A, B, n=10_000):
    return max(excess_by_sampling(A, B, n), excess_by_sampling(B, A, n))


def sampling_gap(A, n=10_000):
    """Worst-case discretization error of grid_over: half the grid spacing
    would do, a full spacing is a safe bound (the distance has slope <= 1)."""
    per = max(2, n // len(A.intervals))
    return max(
        (hi - lo) / (per - 1) if hi > lo else 0.0 for lo, hi in A.intervals
    )


def random_points_in(A, rng, n):
    """n points of A drawn uniformly by length (all intervals if length 0)."""
    total = sum(hi - lo for lo, hi in A.intervals)
    if total == 0.0:
        choices = [lo for lo, _ in A.intervals]
        return [choices[int(rng.integers(len(choices)))] for _ in range(n)]
    pts = []
    for _ in range(n):
        u = float(rng.random()) * total
        for lo, hi in A.intervals:
            w = hi - lo
            if u <= w:
                pts.append(min(lo + u, hi))
                break
            u -= w
        else:
            pts.append(A.intervals[-1][1])
    return pts
