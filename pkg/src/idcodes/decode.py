"""Recover a vertex from its identifying set under a spaced parity grid.

The codes built by construct.grid_code admit an explicit decoder, which
is what makes them identifying: the identifying set alone pins down the
vertex.  Decoding runs in two stages.

Last coordinate: codewords sharing a grid corner form a contiguous run
along the last axis, symmetric about the vertex's own last coordinate;
the midpoint of any run recovers it, and the run length tells the
rectilinear distance from the vertex to the corner.

Remaining coordinates: corners that agree everywhere except along axis
i sit 2s apart on that axis.  Distances to them are |v_i - x| plus a
shared constant, so the two closest straddle v_i, and
v_i = (d(v,a) - d(v,b) + a_i + b_i) / 2 for that consecutive pair a, b.

The decoder validates its input rather than trusting it and finishes
with a round-trip check, so feeding it anything that is not a genuine
identifying set raises MalformedIdentifyingSet.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .construct import GridCodeParams, grid_code
from .lattice import Point


class MalformedIdentifyingSet(ValueError):
    """The given point set is not an identifying set of the code."""


@dataclass(frozen=True)
class DecodeResult:
    vertex: Point
    distances: Mapping[Point, int]


def _columns(points: Iterable[Point], params: GridCodeParams) -> dict[Point, list[int]]:
    s, n = params.s, params.n
    columns: dict[Point, list[int]] = {}
    seen = set()
    for pt in points:
        pt = tuple(pt)
        if len(pt) != n:
            raise MalformedIdentifyingSet(f"{pt} has dimension {len(pt)}, expected {n}")
        if pt in seen:
            raise MalformedIdentifyingSet(f"duplicate point {pt}")
        seen.add(pt)
        prefix, last = pt[:-1], pt[-1]
        if any(c % s for c in prefix) or sum(c // s for c in prefix) % 2 == 0:
            raise MalformedIdentifyingSet(f"{pt} is not a codeword of this grid")
        columns.setdefault(prefix, []).append(last)
    if not columns:
        raise MalformedIdentifyingSet("identifying sets are never empty")
    return columns


def decode_last_coordinate(
    points: Iterable[Point], params: GridCodeParams
) -> tuple[int, dict[Point, int]]:
    """Common last coordinate and the distance to each column anchor.

    Returns (last, distances) where distances maps each anchor point
    (column prefix, last) to the rectilinear distance between the
    encoded vertex and that anchor.
    """
    columns = _columns(points, params)
    r = params.r
    last: int | None = None
    distances: dict[Point, int] = {}
    for prefix, entries in sorted(columns.items()):
        entries.sort()
        low, high = entries[0], entries[-1]
        if entries != list(range(low, high + 1)):
            raise MalformedIdentifyingSet(f"gap in column {prefix}")
        if (low + high) % 2:
            raise MalformedIdentifyingSet(
                f"column {prefix} has even length; no integer midpoint"
            )
        mid = (low + high) // 2
        if last is None:
            last = mid
        elif mid != last:
            raise MalformedIdentifyingSet(
                f"columns disagree on the last coordinate: {last} vs {mid}"
            )
        d = r - (high - mid)
        if d < 0:
            raise MalformedIdentifyingSet(f"column {prefix} is longer than the radius allows")
        distances[prefix + (mid,)] = d
    assert last is not None
    return last, distances


def decode_vertex(points: Iterable[Point], params: GridCodeParams) -> DecodeResult:
    """The unique vertex whose identifying set is `points`.

    Every coordinate is recovered independently from each eligible pair
    of anchors; disagreement anywhere, or a failed final round trip
    through the code itself, raises MalformedIdentifyingSet.
    """
    points = [tuple(pt) for pt in points]
    last, anchor_distance = decode_last_coordinate(points, params)
    n, s = params.n, params.s
    prefix_distance = {anchor[:-1]: d for anchor, d in anchor_distance.items()}

    coords: list[int] = []
    for axis in range(n - 1):
        groups: dict[tuple[int, ...], list[tuple[int, int]]] = {}
        for prefix, d in prefix_distance.items():
            key = prefix[:axis] + prefix[axis + 1 :]
            groups.setdefault(key, []).append((d, prefix[axis]))
        value: int | None = None
        for key, members in sorted(groups.items()):
            if len(members) < 2:
                continue
            # Two smallest distances; ties resolve to the smaller
            # position, and either choice yields the same coordinate.
            (d_first, x_first), (d_second, x_second) = sorted(members)[:2]
            if x_first < x_second:
                a, b = (x_first, d_first), (x_second, d_second)
            else:
                a, b = (x_second, d_second), (x_first, d_first)
            if b[0] - a[0] != 2 * s:
                raise MalformedIdentifyingSet(
                    f"anchors along axis {axis} are not consecutive on the grid"
                )
            numerator = a[1] - b[1] + a[0] + b[0]
            if numerator % 2:
                raise MalformedIdentifyingSet(f"axis {axis}: non-integer coordinate")
            candidate = numerator // 2
            if value is None:
                value = candidate
            elif candidate != value:
                raise MalformedIdentifyingSet(
                    f"axis {axis}: anchor groups disagree ({value} vs {candidate})"
                )
        if value is None:
            raise MalformedIdentifyingSet(f"axis {axis}: no anchor pair to decode from")
        coords.append(value)

    vertex = tuple(coords) + (last,)
    code = grid_code(params)
    if code.identifying_set(vertex, params.r) != tuple(sorted(points)):
        raise MalformedIdentifyingSet(
            "round-trip failed: the set is not the identifying set of any vertex"
        )
    distances = {
        pt: prefix_distance[pt[:-1]] + abs(pt[-1] - last) for pt in sorted(points)
    }
    return DecodeResult(vertex, distances)
