import random
from itertools import product

import pytest

from idcodes.code import PeriodicCode
from idcodes.construct import lift_dominating_set
from idcodes.lattice import Metric
from idcodes.verify import (
    EmptyBall,
    Indistinguishable,
    verify_identifying,
    verify_torus_naive,
)

EVEN_INTEGERS = PeriodicCode(1, Metric.L1, (2,), ((0,),))


def random_code(rng):
    periods = (rng.randint(1, 4), rng.randint(1, 4))
    box = list(product(range(periods[0]), range(periods[1])))
    return PeriodicCode(2, Metric.L1, periods, tuple(rng.sample(box, rng.randint(1, len(box)))))


def replay(code, radius, witness):
    """A witness must re-fail when recomputed from scratch."""
    if isinstance(witness, EmptyBall):
        assert code.identifying_set(witness.vertex, radius) == ()
    else:
        assert witness.u != witness.v
        assert code.identifying_set(witness.u, radius) == code.identifying_set(
            witness.v, radius
        )


def test_even_integers_identify():
    # Hand oracle: I_1 of an even vertex v is {v}; of an odd vertex, {v-1, v+1}.
    # All patterns are nonempty and pairwise distinct as absolute sets.
    report = verify_identifying(EVEN_INTEGERS, 1)
    assert report.identifying
    assert report.witness is None
    assert report.vertices_checked == 2


def test_full_lattice_is_identifying_at_radius_one():
    everything = PeriodicCode(1, Metric.L1, (1,), ((0,),))
    assert verify_identifying(everything, 1).identifying


def test_sparse_code_fails_with_empty_ball():
    code = PeriodicCode(1, Metric.L1, (4,), ((0,),))
    report = verify_identifying(code, 1)
    assert not report.identifying
    assert report.witness == EmptyBall((2,))
    replay(code, 1, report.witness)


def test_indistinguishable_witness():
    # Period 4, words {0, 1}: I_1(0) = I_1(1) = {0, 1} while every
    # identifying set is nonempty, so the failure is a collision.
    code = PeriodicCode(1, Metric.L1, (4,), ((0,), (1,)))
    report = verify_identifying(code, 1)
    assert not report.identifying
    assert report.witness == Indistinguishable((0,), (1,))
    replay(code, 1, report.witness)


def test_dominating_lift_verifies():
    code = lift_dominating_set([(0, 0, 0), (1, 1, 1)])
    report = verify_identifying(code, 1)
    assert report.identifying


def test_radius_must_be_positive():
    with pytest.raises(ValueError):
        verify_identifying(EVEN_INTEGERS, 0)


def test_torus_oracle_basic():
    assert verify_torus_naive(EVEN_INTEGERS.inflate((4,)), 1).identifying
    report = verify_torus_naive(PeriodicCode(1, Metric.L1, (8,), ((0,),)), 1)
    assert not report.identifying
    assert isinstance(report.witness, EmptyBall)


def test_torus_oracle_rejects_small_periods():
    with pytest.raises(ValueError):
        verify_torus_naive(EVEN_INTEGERS.inflate((3,)), 1)  # period 6 < 7


def test_verifier_and_oracle_agree_on_random_codes():
    rng = random.Random(424242)
    for _ in range(10):
        code = random_code(rng)
        lattice_report = verify_identifying(code, 1)
        factors = tuple(-(-7 // p) for p in code.periods)
        torus_report = verify_torus_naive(code.inflate(factors), 1)
        assert lattice_report.identifying == torus_report.identifying
        if lattice_report.witness is not None:
            replay(code, 1, lattice_report.witness)
        if torus_report.witness is not None:
            replay(code.inflate(factors), 1, torus_report.witness)


def test_torus_pair_witness_replays_as_absolute_sets():
    # The colliding partner is reported at the translate realising the
    # torus distance, not at its box representative: here (0,0) ~ (0,-2),
    # whose box representative (0,6) would anchor the wrong absolute set.
    code = PeriodicCode(2, Metric.L1, (2, 4), ((0, 3), (1, 1)))
    inflated = code.inflate((4, 2))
    report = verify_torus_naive(inflated, 1)
    assert report.witness == Indistinguishable((0, 0), (0, -2))
    replay(inflated, 1, report.witness)


def test_reports_are_deterministic():
    rng = random.Random(99)
    for _ in range(5):
        code = random_code(rng)
        assert verify_identifying(code, 1) == verify_identifying(code, 1)


def test_adding_codewords_never_creates_empty_balls():
    # Coverage is monotone: growing the code can break identifiability
    # only through collisions, never through condition (a).
    rng = random.Random(7)
    for _ in range(20):
        code = random_code(rng)
        if not verify_identifying(code, 1).identifying:
            continue
        box = [
            w
            for w in product(range(code.periods[0]), range(code.periods[1]))
            if w not in code.words
        ]
        if not box:
            continue
        grown = PeriodicCode(2, Metric.L1, code.periods, code.words + (rng.choice(box),))
        report = verify_identifying(grown, 1)
        assert not isinstance(report.witness, EmptyBall)
