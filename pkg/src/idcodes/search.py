"""Exhaustive searches for small codes.

Two searches live here: periodic 1-identifying codes on the king grid
with a prescribed word count per period box, and minimum dominating
sets of the hypercube.  Both are deterministic backtracking searches
with explicit node budgets, and both distinguish "proven absent /
proven minimal" from "budget hit".

The king search encodes the infinite-lattice conditions exactly as
hitting constraints over codeword residues: a residue class w covers a
vertex u iff some translate of w lies in B_r(u), and separates a pair
(u, v) iff some translate lies in the symmetric difference of their
balls.  Both sets are just the residues of the corresponding absolute
point sets, so every constraint is a bitmask over box cells and a
candidate code is feasible iff it intersects all of them.  This is
exact, not a relaxation: a leaf that satisfies every mask is an
identifying code (the verifier is still run on it as a certificate).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .code import PeriodicCode
from .lattice import Metric, Point, ball
from .verify import verify_identifying

DEFAULT_SCHEDULE: tuple[tuple[int, int], ...] = (
    (3, 3),
    (6, 3),
    (3, 6),
    (6, 6),
    (9, 9),
)


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 20_000_000
    period_schedule: tuple[tuple[int, int], ...] = DEFAULT_SCHEDULE

    def __post_init__(self) -> None:
        if self.max_nodes < 1:
            raise ValueError("node budget must be positive")
        if not self.period_schedule or any(
            p < 1 or q < 1 for p, q in self.period_schedule
        ):
            raise ValueError("schedule must be nonempty with positive periods")


@dataclass(frozen=True)
class KingSearchResult:
    """code is None on failure; complete tells proven absence from budget out."""

    code: PeriodicCode | None
    complete: bool
    nodes: int


@dataclass(frozen=True)
class DomsetSearchResult:
    words: tuple[Point, ...]
    proven_minimal: bool
    nodes: int


class _BudgetExhausted(Exception):
    pass


def search_periodic_king_code(
    target_words: int,
    periods: tuple[int, int],
    budget: SearchBudget | None = None,
) -> KingSearchResult:
    """First (p, q)-periodic king code with target_words words per box
    that is 1-identifying on the infinite lattice, or proven absence.

    Candidate word sets grow in lexicographic cell order with the first
    codeword pinned at the origin; any solution can be translated into
    that form, so the restriction is lossless.  Sets lexicographically
    dominated by one of their own torus translates are pruned as well.
    """
    budget = budget or SearchBudget()
    p, q = periods
    if p < 1 or q < 1:
        raise ValueError("periods must be positive")
    n_cells = p * q
    if target_words < 1 or target_words > n_cells:
        raise ValueError("target word count must be between 1 and the box size")

    def cell(v: Point) -> int:
        return (v[0] % p) * q + (v[1] % q)

    def residue_mask(points: frozenset[Point]) -> int:
        mask = 0
        for v in points:
            mask |= 1 << cell(v)
        return mask

    # Constraint masks: coverage for every box vertex, separation for
    # every pair within distance 2 (farther pairs have disjoint balls
    # and are separated by coverage alone).
    balls = {}
    constraints = set()
    box = [(x, y) for x in range(p) for y in range(q)]
    for u in box:
        balls[u] = frozenset(ball(u, 1, Metric.KING))
        constraints.add(residue_mask(balls[u]))
    for u in box:
        for v in ball(u, 2, Metric.KING):
            if v <= u:
                continue
            diff = balls[u] ^ frozenset(ball(v, 1, Metric.KING))
            constraints.add(residue_mask(diff))
    # Sort by highest cell so that the first unsatisfied constraint is
    # the one whose candidates run out soonest.
    ordered = sorted(constraints, key=lambda m: (m.bit_length(), m))

    nodes = 0
    found: list[Point] | None = None

    def dominated(chosen: list[int]) -> bool:
        # A canonical set is lexicographically minimal among its torus
        # translates.  If translating by a chosen word already yields a
        # cell strictly between 0 and the second-smallest chosen cell,
        # the final set cannot be canonical.
        second = chosen[1]
        for w in chosen[1:]:
            wx, wy = divmod(w, q)
            for s in chosen:
                sx, sy = divmod(s, q)
                t = ((sx - wx) % p) * q + (sy - wy) % q
                if 0 < t < second:
                    return True
        return False

    def extend(start: int, chosen: list[int], unsat: list[int], left: int) -> bool:
        nonlocal nodes, found
        nodes += 1
        if nodes > budget.max_nodes:
            raise _BudgetExhausted
        if left == 0:
            if unsat:
                return False
            found = [divmod(c, q) for c in chosen]
            return True
        if unsat and unsat[0].bit_length() <= start:
            return False  # some constraint has no remaining candidate
        if n_cells - start < left:
            return False
        for i in range(start, n_cells - left + 1):
            bit = 1 << i
            chosen.append(i)
            if len(chosen) < 2 or not dominated(chosen):
                remaining = [m for m in unsat if not m & bit]
                if extend(i + 1, chosen, remaining, left - 1):
                    return True
            chosen.pop()
        return False

    try:
        unsat0 = [m for m in ordered if not m & 1]
        hit = extend(1, [0], unsat0, target_words - 1)
        complete = True
    except _BudgetExhausted:
        hit = False
        complete = False
    if not hit:
        return KingSearchResult(None, complete, nodes)
    code = PeriodicCode(2, Metric.KING, (p, q), tuple(found))
    report = verify_identifying(code, 1)
    if not report.identifying:  # the masks are exact; this cannot happen
        raise AssertionError(f"search produced a non-identifying code: {report}")
    return KingSearchResult(code, True, nodes)


def search_king_schedule(
    target_density: Fraction, budget: SearchBudget | None = None
) -> KingSearchResult:
    """Walk the period schedule until some box admits a code of the
    exact target density.  Entries whose box size is incompatible with
    the density are skipped."""
    budget = budget or SearchBudget()
    total_nodes = 0
    all_complete = True
    for p, q in budget.period_schedule:
        words = target_density * p * q
        if words.denominator != 1 or not 1 <= words.numerator <= p * q:
            continue
        result = search_periodic_king_code(int(words), (p, q), budget)
        total_nodes += result.nodes
        if result.code is not None:
            return KingSearchResult(result.code, result.complete, total_nodes)
        all_complete = all_complete and result.complete
    return KingSearchResult(None, all_complete, total_nodes)


# -- hypercube dominating sets ---------------------------------------------


def _greedy_domset(n: int, balls: list[int], full: int) -> list[int]:
    chosen: list[int] = []
    covered = 0
    while covered != full:
        best = max(range(2**n), key=lambda v: ((balls[v] | covered).bit_count(), -v))
        chosen.append(best)
        covered |= balls[best]
    return chosen


def search_min_dominating_set(
    n: int, budget: SearchBudget | None = None
) -> DomsetSearchResult:
    """Branch-and-bound minimum dominating set of the hypercube {0,1}^n.

    Branches on an uncovered vertex with the fewest allowed dominators,
    with vertex 0 pinned into the set (any dominating set translates to
    one containing 0).  The bound is the larger of a counting bound and
    a greedy packing of pairwise-disjoint uncovered balls.  If the node
    budget runs out the best set found so far is returned with
    proven_minimal False.
    """
    if n < 1:
        raise ValueError("dimension must be positive")
    budget = budget or SearchBudget()
    size = 2**n
    full = (1 << size) - 1
    balls = [
        (1 << v) | sum(1 << (v ^ (1 << i)) for i in range(n)) for v in range(size)
    ]

    best: list[int] = _greedy_domset(n, balls, full)
    nodes = 0

    def lower_bound(uncovered: int) -> int:
        count = (uncovered.bit_count() + n) // (n + 1)
        packing = 0
        taken = 0
        rest = uncovered
        while rest:
            v = (rest & -rest).bit_length() - 1
            if not balls[v] & taken:
                packing += 1
                taken |= balls[v]
            rest &= rest - 1
        return max(count, packing)

    def descend(chosen: list[int], covered: int, forbidden: int) -> None:
        nonlocal nodes, best
        nodes += 1
        if nodes > budget.max_nodes:
            raise _BudgetExhausted
        if covered == full:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + lower_bound(full & ~covered) >= len(best):
            return
        # most-constrained uncovered vertex
        branch_vertex = -1
        branch_options: list[int] = []
        rest = full & ~covered
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            options = [
                w
                for w in ([v] + [v ^ (1 << i) for i in range(n)])
                if not forbidden & (1 << w)
            ]
            if branch_vertex < 0 or len(options) < len(branch_options):
                branch_vertex = v
                branch_options = options
                if not options:
                    return
        branch_options.sort(key=lambda w: (-(balls[w] & ~covered).bit_count(), w))
        banned = forbidden
        for w in branch_options:
            chosen.append(w)
            descend(chosen, covered | balls[w], banned)
            chosen.pop()
            banned |= 1 << w
    proven = True
    try:
        descend([0], balls[0], 0)
    except _BudgetExhausted:
        proven = False

    words = tuple(tuple((v >> i) & 1 for i in range(n)) for v in sorted(best))
    return DomsetSearchResult(words, proven, nodes)
