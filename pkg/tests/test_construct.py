import random
from fractions import Fraction
from itertools import product

import pytest

from idcodes.code import FileFormatError, PeriodicCode
from idcodes.construct import (
    GridCodeParams,
    dumps_dominating_set,
    grid_code,
    grid_code_params,
    hamming_code,
    is_dominating_set,
    lift_dominating_set,
    lift_king_to_4d,
    load_dominating_set,
    project_to_king,
    reference_set,
)
from idcodes.lattice import Metric, ball, distance
from idcodes.verify import verify_identifying


def hamming_distance(a, b):
    return sum(x != y for x, y in zip(a, b))


# -- hamming codes and dominating sets ---------------------------------


def test_hamming_code_small():
    assert hamming_code(2) == [(0, 0, 0), (1, 1, 1)]
    h3 = hamming_code(3)
    assert len(h3) == 16
    assert all(len(w) == 7 for w in h3)
    with pytest.raises(ValueError):
        hamming_code(1)


def test_hamming_codes_are_perfect():
    for m in (2, 3):
        words = hamming_code(m)
        n = 2**m - 1
        for v in product((0, 1), repeat=n):
            assert min(hamming_distance(v, w) for w in words) <= 1


def test_is_dominating_set():
    assert is_dominating_set([(0, 0, 0), (1, 1, 1)], 3)
    assert not is_dominating_set([(0, 0, 0)], 3)
    assert is_dominating_set(hamming_code(3), 7)
    with pytest.raises(ValueError):
        is_dominating_set([(0, 1)], 3)


def test_lift_dominating_set():
    line = lift_dominating_set([(0,)])
    assert line.periods == (2,) and line.density() == Fraction(1, 2)
    assert verify_identifying(line, 1).identifying

    cube = lift_dominating_set([(0, 0, 0), (1, 1, 1)])
    assert cube.density() == Fraction(1, 4)
    assert verify_identifying(cube, 1).identifying

    with pytest.raises(ValueError):
        lift_dominating_set([(0, 0, 0)])


def test_dominating_set_file_round_trip(tmp_path):
    words = hamming_code(2)
    path = tmp_path / "domset.txt"
    path.write_text(dumps_dominating_set(words))
    assert load_dominating_set(path) == words
    path.write_text("01\n011\n")
    with pytest.raises(FileFormatError):
        load_dominating_set(path)
    path.write_text("0x1\n")
    with pytest.raises(FileFormatError):
        load_dominating_set(path)
    path.write_text("")
    with pytest.raises(FileFormatError):
        load_dominating_set(path)


# -- king-grid projection and lift --------------------------------------


def test_projection_examples():
    assert project_to_king((3, -4, 0, 0)) == (3, -4)
    assert project_to_king((1, 1, 1, 0)) == (0, 0)
    assert project_to_king((1, -1, 0, 1)) == (0, 0)
    assert project_to_king((0, 0, 1, 0)) == (-1, -1)
    with pytest.raises(ValueError):
        project_to_king((1, 2, 3))


def test_projection_maps_balls_onto_king_balls():
    rng = random.Random(31)
    for _ in range(50):
        v = tuple(rng.randint(-20, 20) for _ in range(4))
        image = {project_to_king(u) for u in ball(v, 1)}
        assert image == set(ball(project_to_king(v), 1, Metric.KING))


def test_fiber_distance():
    # Points with the same projection are at rectilinear distance
    # |i+j| + |i-j| + |i| + |j| >= 3 from each other.
    rng = random.Random(32)
    for _ in range(200):
        i, j = rng.randint(-5, 5), rng.randint(-5, 5)
        if (i, j) == (0, 0):
            continue
        x, y = rng.randint(-9, 9), rng.randint(-9, 9)
        u = (x, y, 0, 0)
        v = (x + i + j, y + i - j, i, j)
        assert project_to_king(u) == project_to_king(v)
        d = distance(u, v)
        assert d == abs(i + j) + abs(i - j) + abs(i) + abs(j)
        assert d >= 3


def test_lift_king_structure():
    king = PeriodicCode(2, Metric.KING, (3, 3), ((0, 0), (1, 0)))
    lifted = lift_king_to_4d(king)
    assert lifted.periods == (3, 3, 3, 3)
    assert len(lifted.words) == 18
    assert lifted.density() == king.density() == Fraction(2, 9)
    rng = random.Random(33)
    for _ in range(100):
        v = tuple(rng.randint(-15, 15) for _ in range(4))
        assert lifted.contains(v) == king.contains(project_to_king(v))
    with pytest.raises(ValueError):
        lift_king_to_4d(lifted)


def test_lift_king_uneven_periods():
    king = PeriodicCode(2, Metric.KING, (2, 3), ((0, 0), (1, 2)))
    lifted = lift_king_to_4d(king)
    assert lifted.periods == (2, 3, 6, 6)
    assert lifted.density() == king.density()


# -- spaced parity grids -------------------------------------------------


def test_grid_code_params():
    assert grid_code_params(3, 5) == GridCodeParams(3, 5, 0, 5, 2)
    assert grid_code_params(2, 2) == GridCodeParams(2, 2, 0, 2, 1)
    assert grid_code_params(4, 7) == GridCodeParams(4, 7, 1, 6, 2)
    with pytest.raises(ValueError):
        grid_code_params(3, 4)  # below the odd-dimension minimum n+2
    with pytest.raises(ValueError):
        grid_code_params(2, 1)  # below the even-dimension minimum (n+2)/2
    with pytest.raises(ValueError):
        grid_code_params(1, 10)


def test_grid_code_words():
    code = grid_code(grid_code_params(2, 2))
    assert code.periods == (2, 1)
    assert code.words == ((1, 0),)
    assert code.density() == Fraction(1, 2)

    code = grid_code(grid_code_params(3, 5))
    assert code.periods == (4, 4, 1)
    assert code.words == ((0, 2, 0), (2, 0, 0))
    assert code.density() == Fraction(1, 8)


def test_grid_code_density_closed_form():
    for n, r in [(2, 2), (2, 5), (3, 5), (3, 11), (4, 3), (4, 8), (5, 7)]:
        params = grid_code_params(n, r)
        density = grid_code(params).density()
        assert density == Fraction(1, 2 * params.s ** (n - 1))
        assert density == Fraction((n + 2) ** (n - 1), 2**n * params.r0 ** (n - 1))


def test_grid_code_identifies_at_base_radius_too():
    # A code built for radius r identifies at every radius >= r0.
    params = grid_code_params(3, 6)
    assert params.r0 == 5
    code = grid_code(params)
    assert verify_identifying(code, 6).identifying
    assert verify_identifying(code, 5).identifying


def test_reference_set_and_corners():
    params = grid_code_params(3, 5)
    anchors = reference_set(params)
    assert anchors.words == ((0, 0, 0), (2, 2, 0))
    code = grid_code(params)
    n, s = params.n, params.s
    for anchor in anchors.words:
        corners = []
        for i in range(n - 1):
            for sign in (1, -1):
                corner = list(anchor)
                corner[i] += sign * s
                corners.append(tuple(corner))
        assert len(corners) == 2 * (n - 1)
        assert all(code.contains(c) for c in corners)


def nearest_anchor_distance(v, anchors):
    # L1 distance to a periodic set splits per coordinate as wrapped
    # distances, minimised over the words.
    best = None
    for w in anchors.words:
        total = 0
        for a, b, p in zip(v, w, anchors.periods):
            d = (a - b) % p
            total += min(d, p - d)
        best = total if best is None else min(best, total)
    return best


def test_every_vertex_is_near_a_reference_anchor():
    params = grid_code_params(3, 5)
    anchors = reference_set(params)
    limit = params.n * params.s // 2
    rng = random.Random(34)
    for _ in range(1000):
        v = tuple(rng.randint(-60, 60) for _ in range(params.n))
        assert nearest_anchor_distance(v, anchors) <= limit
