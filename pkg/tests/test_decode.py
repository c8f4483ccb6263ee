import random

import pytest

from idcodes.construct import grid_code, grid_code_params, reference_set
from idcodes.decode import (
    MalformedIdentifyingSet,
    decode_last_coordinate,
    decode_vertex,
)
from idcodes.lattice import distance

PARAMS_22 = grid_code_params(2, 2)
PARAMS_35 = grid_code_params(3, 5)


def identifying_set_of(params, v):
    return grid_code(params).identifying_set(v, params.r)


def test_last_coordinate_hand_case():
    # I_2((0,0)) under the pitch-1 code: columns at first coordinate -1
    # and 1, each the run -1..1, so the midpoint is 0 and both column
    # anchors are at distance 2 - 1 = 1.
    points = identifying_set_of(PARAMS_22, (0, 0))
    assert points == ((-1, -1), (-1, 0), (-1, 1), (1, -1), (1, 0), (1, 1))
    last, anchors = decode_last_coordinate(points, PARAMS_22)
    assert last == 0
    assert anchors == {(-1, 0): 1, (1, 0): 1}


def test_last_coordinate_translation_equivariance():
    base = identifying_set_of(PARAMS_35, (1, -2, 5))
    last0, _ = decode_last_coordinate(base, PARAMS_35)
    for t in (-7, 3, 40):
        shifted = [pt[:-1] + (pt[-1] + t,) for pt in base]
        last, _ = decode_last_coordinate(shifted, PARAMS_35)
        assert last == last0 + t


def test_even_length_column_is_rejected():
    with pytest.raises(MalformedIdentifyingSet):
        decode_last_coordinate([(1, 3), (1, 4)], PARAMS_22)


def test_decode_hand_case():
    points = identifying_set_of(PARAMS_22, (0, 0))
    result = decode_vertex(points, PARAMS_22)
    assert result.vertex == (0, 0)
    assert result.distances == {
        (-1, -1): 2, (-1, 0): 1, (-1, 1): 2, (1, -1): 2, (1, 0): 1, (1, 1): 2,
    }


def test_decode_reference_anchor():
    # The all-zero anchor of the even-parity grid is an ordinary vertex.
    assert reference_set(PARAMS_35).contains((0, 0, 0))
    result = decode_vertex(identifying_set_of(PARAMS_35, (0, 0, 0)), PARAMS_35)
    assert result.vertex == (0, 0, 0)


@pytest.mark.parametrize("n,r", [(2, 2), (2, 4), (3, 5), (4, 3), (4, 7)])
def test_decode_round_trip_random(n, r):
    params = grid_code_params(n, r)
    code = grid_code(params)
    rng = random.Random(1000 + 10 * n + r)
    for _ in range(200):
        v = tuple(rng.randint(-50, 50) for _ in range(n))
        result = decode_vertex(code.identifying_set(v, r), params)
        assert result.vertex == v
        for c, d in result.distances.items():
            assert distance(v, c) == d


def test_decode_translation_equivariance():
    # The code is invariant under 2s shifts of the grid axes and any
    # shift of the last axis, and the decoder commutes with both.
    params = PARAMS_35
    base = identifying_set_of(params, (3, -1, 4))
    for axis, step in [(0, 2 * params.s), (1, -4 * params.s), (2, 9)]:
        shift = tuple(step if i == axis else 0 for i in range(params.n))
        moved = [tuple(a + b for a, b in zip(pt, shift)) for pt in base]
        assert decode_vertex(moved, params).vertex == (3 + shift[0], -1 + shift[1], 4 + shift[2])


def test_decoded_distances_are_unimodal_along_runs():
    params = grid_code_params(3, 6)
    code = grid_code(params)
    rng = random.Random(77)
    for _ in range(50):
        v = tuple(rng.randint(-30, 30) for _ in range(3))
        result = decode_vertex(code.identifying_set(v, params.r), params)
        anchors = {c[:-1]: d for c, d in result.distances.items() if c[-1] == result.vertex[-1]}
        for axis in range(2):
            groups = {}
            for prefix, d in anchors.items():
                key = prefix[:axis] + prefix[axis + 1 :]
                groups.setdefault(key, []).append((prefix[axis], d))
            for run in groups.values():
                run.sort()
                dists = [d for _, d in run]
                low = dists.index(min(dists))
                assert dists[: low + 1] == sorted(dists[: low + 1], reverse=True)
                assert dists[low:] == sorted(dists[low:])


def test_malformed_inputs_fail_loudly():
    points = list(identifying_set_of(PARAMS_35, (1, 2, 3)))

    with pytest.raises(MalformedIdentifyingSet):
        decode_vertex([], PARAMS_35)
    with pytest.raises(MalformedIdentifyingSet):
        decode_vertex([(1, 1, 0)], PARAMS_35)  # not a codeword (not on the grid)
    with pytest.raises(MalformedIdentifyingSet):
        decode_vertex(points + [points[0]], PARAMS_35)  # duplicate

    columns = {}
    for pt in points:
        columns.setdefault(pt[:-1], []).append(pt)
    longest = max(columns.values(), key=len)
    assert len(longest) >= 3

    # gap in a column
    with pytest.raises(MalformedIdentifyingSet):
        decode_last_coordinate(
            [pt for pt in points if pt != sorted(longest)[len(longest) // 2]],
            PARAMS_35,
        )

    # a whole missing column decodes to the right vertex but fails the
    # round trip, which is the point of the final check
    broken = [pt for pt in points if pt[:-1] != longest[0][:-1]]
    with pytest.raises(MalformedIdentifyingSet):
        decode_vertex(broken, PARAMS_35)

    # columns disagreeing on the last coordinate
    other = [
        pt[:-1] + (pt[-1] + 2,) if pt[:-1] == longest[0][:-1] else pt for pt in points
    ]
    with pytest.raises(MalformedIdentifyingSet):
        decode_vertex(other, PARAMS_35)
