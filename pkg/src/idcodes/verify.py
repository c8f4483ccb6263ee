"""Exhaustive verification that a periodic code identifies every vertex.

A code C is r-identifying when every vertex has a nonempty identifying
set I_r(v) = B_r(v) & C and no two vertices share one.  Verifying this
on the infinite lattice reduces to finitely many checks:

* Periodicity.  Membership is invariant under translation by period
  multiples, so I_r(v + t) = I_r(v) + t for any period-multiple t.
  Every vertex is such a translate of a vertex of the fundamental box,
  and translation preserves both emptiness and equality of identifying
  sets, so scanning the box covers every vertex.

* Pair radius.  If d(u, v) >= 2r + 1 then B_r(u) and B_r(v) are
  disjoint; two nonempty sets contained in disjoint balls cannot be
  equal, so once every identifying set is nonempty only pairs with
  d(u, v) <= 2r can collide.

* Candidate restriction.  If I_r(u) = I_r(v) then every codeword of
  I_r(u) is within distance r of v, so v lies in B_r(c0) for the first
  codeword c0 of I_r(u).  Scanning B_r(c0) therefore finds every
  colliding partner of u, and in lexicographic order.

The independent oracle `verify_torus_naive` does none of this: it
compares all pairs of a torus under the wrapped metric.  With every
period at least 4r + 3 a torus identifying set is the residue image of
the lattice one and equal residue sets force equal absolute sets, so
the two verdicts must agree; disagreement would expose a bug.
"""

from __future__ import annotations

from dataclasses import dataclass

from .code import PeriodicCode
from .lattice import Metric, Point, ball


@dataclass(frozen=True)
class EmptyBall:
    """Witness: this vertex has no codeword within the radius."""

    vertex: Point


@dataclass(frozen=True)
class Indistinguishable:
    """Witness: two distinct vertices with identical identifying sets."""

    u: Point
    v: Point


Witness = EmptyBall | Indistinguishable


@dataclass(frozen=True)
class VerificationReport:
    """Verdict plus the first failure found and work statistics.

    `witness` is present exactly when `identifying` is False.  The
    witness is canonical: the empty-ball scan runs first over the whole
    fundamental box in lexicographic order, then the pair scan, with
    candidate partners of each box vertex visited in lexicographic
    order.  Serial and repeated runs therefore agree bit for bit.
    """

    identifying: bool
    witness: Witness | None
    vertices_checked: int
    pairs_checked: int

    def __post_init__(self) -> None:
        if self.identifying == (self.witness is not None):
            raise ValueError("witness must be present iff the code fails")

    def describe(self) -> str:
        if self.identifying:
            return "identifying"
        if isinstance(self.witness, EmptyBall):
            return f"NOT identifying: empty identifying set at {self.witness.vertex}"
        return (
            "NOT identifying: indistinguishable pair "
            f"{self.witness.u} ~ {self.witness.v}"
        )


def _translate(p: Point, t: Point) -> Point:
    return tuple(a + b for a, b in zip(p, t))


def verify_identifying(code: PeriodicCode, radius: int) -> VerificationReport:
    """Sound and complete check on the infinite lattice (see module docs)."""
    if radius < 1:
        raise ValueError("radius must be at least 1")
    box = code.box()
    signatures = {u: code.identifying_set(u, radius) for u in box}
    vertices = len(box)

    for u in box:
        if not signatures[u]:
            return VerificationReport(False, EmptyBall(u), vertices, 0)

    origin = (0,) * code.dimension
    offsets = ball(origin, radius, code.metric)
    pairs = 0
    for u in box:
        sig_u = signatures[u]
        anchor = sig_u[0]
        size_u = len(sig_u)
        for off in offsets:
            v = _translate(anchor, off)
            if v == u:
                continue
            pairs += 1
            residue = code.reduce(v)
            sig_v = signatures[residue]
            if len(sig_v) != size_u:
                continue
            shift = tuple(a - b for a, b in zip(v, residue))
            if _translate(sig_v[0], shift) != sig_u[0]:
                continue
            if all(_translate(c, shift) == d for c, d in zip(sig_v, sig_u)):
                return VerificationReport(False, Indistinguishable(u, v), vertices, pairs)
    return VerificationReport(True, None, vertices, pairs)


def _torus_distance(u: Point, v: Point, periods: tuple[int, ...], metric: Metric) -> int:
    per_axis = (
        min(d, p - d)
        for d, p in zip(((a - b) % p for a, b, p in zip(u, v, periods)), periods)
    )
    if metric is Metric.L1:
        return sum(per_axis)
    return max(per_axis)


def verify_torus_naive(code: PeriodicCode, radius: int) -> VerificationReport:
    """Independent oracle: compare all pairs of the torus directly.

    Requires every period >= 4r + 3 so that balls cannot wrap into
    themselves and equal residue identifying sets imply equal absolute
    ones; inflate the code first if needed.  Deliberately naive --
    quadratic in the box and sharing no logic with verify_identifying.
    """
    if radius < 1:
        raise ValueError("radius must be at least 1")
    required = 4 * radius + 3
    if any(p < required for p in code.periods):
        raise ValueError(
            f"torus oracle needs every period >= {required}; inflate the code first"
        )
    box = code.box()
    periods = code.periods
    signatures = {
        v: tuple(
            c
            for c in code.words
            if _torus_distance(v, c, periods, code.metric) <= radius
        )
        for v in box
    }
    vertices = len(box)

    for v in box:
        if not signatures[v]:
            return VerificationReport(False, EmptyBall(v), vertices, 0)

    def nearest_translate(u: Point, v: Point) -> Point:
        # The translate of v's residue class realising the torus
        # distance from u; colliding identifying sets are equal as
        # absolute sets at this representative (periods >= 4r + 3 keep
        # shared codewords within wrap-free range), so the witness
        # replays through identifying_set.
        wrapped = []
        for a, b, p in zip(u, v, periods):
            d = (b - a) % p
            wrapped.append(a + (d if d <= p - d else d - p))
        return tuple(wrapped)

    pairs = 0
    for i, u in enumerate(box):
        sig_u = signatures[u]
        for v in box[i + 1 :]:
            pairs += 1
            if signatures[v] == sig_u:
                witness = Indistinguishable(u, nearest_translate(u, v))
                return VerificationReport(False, witness, vertices, pairs)
    return VerificationReport(True, None, vertices, pairs)
