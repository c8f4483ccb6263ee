"""Exact geometry of the integer lattice and the king grid.

Points are plain tuples of ints.  Two graph metrics are supported: the
rectilinear metric on Z^n (edges between points at coordinate-sum
distance 1) and the king metric (8-neighbour adjacency), which is only
defined on Z^2.  Everything here is pure, deterministic, and uses exact
integer arithmetic.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Iterator

Point = tuple[int, ...]


class Metric(Enum):
    """Which adjacency the lattice carries."""

    L1 = "l1"
    KING = "king"


def _check_point(u: Point, metric: Metric) -> None:
    if len(u) == 0:
        raise ValueError("points must have dimension >= 1")
    if metric is Metric.KING and len(u) != 2:
        raise ValueError("king metric is only defined on Z^2")


def distance(u: Point, v: Point, metric: Metric = Metric.L1) -> int:
    """Graph distance between two lattice points."""
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    _check_point(u, metric)
    if metric is Metric.L1:
        return sum(abs(a - b) for a, b in zip(u, v))
    return max(abs(a - b) for a, b in zip(u, v))


def _l1_ball(center: Point, radius: int) -> Iterator[Point]:
    # First coordinate varies outermost and ascending, so the stream is
    # lexicographically sorted.
    if not center:
        yield ()
        return
    head = center[0]
    tail = center[1:]
    for x in range(head - radius, head + radius + 1):
        left = radius - abs(x - head)
        for rest in _l1_ball(tail, left):
            yield (x,) + rest


def ball(center: Point, radius: int, metric: Metric = Metric.L1) -> list[Point]:
    """All points at distance <= radius from center, lexicographically sorted."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    _check_point(center, metric)
    if metric is Metric.L1:
        return list(_l1_ball(center, radius))
    cx, cy = center
    return [
        (x, y)
        for x in range(cx - radius, cx + radius + 1)
        for y in range(cy - radius, cy + radius + 1)
    ]


def ball_size(n: int, radius: int) -> int:
    """Number of integer points with |x_1| + ... + |x_n| <= radius.

    Uses the closed form sum_k 2^k C(n,k) C(radius,k).  These are the
    Delannoy numbers, so the function is symmetric in (n, radius) and
    satisfies D(n, r) = D(n-1, r) + D(n, r-1) + D(n-1, r-1).  Python
    integers make the arithmetic exact at any size.
    """
    if n < 1:
        raise ValueError("dimension must be positive")
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    return sum(
        2**k * math.comb(n, k) * math.comb(radius, k)
        for k in range(min(n, radius) + 1)
    )
