"""Code constructions.

Three families:

* Dominating-set lifts: any dominating set of the n-dimensional
  hypercube, repeated with period 2 in every coordinate, gives a
  1-identifying lattice code of density |D| / 2^n.  The lift is always
  machine-verified downstream, never taken on faith.

* King-grid lift: a 1-identifying code on the king grid is copied onto
  the two-dimensional cross-sections of Z^4 via the projection
  project_to_king, producing a 1-identifying code of the same density.

* Spaced parity grids: for any radius r large enough, codewords on a
  pitch-s grid in the first n-1 coordinates (odd parity corners, full
  lines along the last axis) form an r-identifying code whose density
  is 1 / (2 s^(n-1)).  These codes are decodable; see decode.py.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Iterable, Sequence

from .code import FileFormatError, PeriodicCode, box_points
from .lattice import Metric, Point

# -- hypercube dominating sets ------------------------------------------


def hamming_code(m: int) -> list[Point]:
    """The perfect single-error-correcting code of length 2^m - 1.

    Parity positions sit at powers of two; the parity bit at position
    2^j checks all positions with bit j set.  Returns 2^(2^m - 1 - m)
    binary words as 0/1 tuples, sorted.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    length = 2**m - 1
    parity_positions = [2**j for j in range(m)]
    data_positions = [i for i in range(1, length + 1) if i not in parity_positions]
    words = []
    for data in product((0, 1), repeat=len(data_positions)):
        bits = dict(zip(data_positions, data))
        for j, pos in enumerate(parity_positions):
            bits[pos] = 0
            parity = 0
            for i, b in bits.items():
                if i & pos:
                    parity ^= b
            bits[pos] = parity
        words.append(tuple(bits[i] for i in range(1, length + 1)))
    return sorted(words)


def is_dominating_set(words: Iterable[Point], n: int) -> bool:
    """Whether every vertex of the hypercube {0,1}^n is at Hamming
    distance <= 1 from some word."""
    if n < 1:
        raise ValueError("dimension must be positive")
    masks = set()
    for w in words:
        if len(w) != n or any(b not in (0, 1) for b in w):
            raise ValueError(f"{w} is not a binary word of length {n}")
        masks.add(sum(b << i for i, b in enumerate(w)))
    dominated = set()
    for m in masks:
        dominated.add(m)
        for i in range(n):
            dominated.add(m ^ (1 << i))
    return len(dominated) == 2**n


def lift_dominating_set(words: Sequence[Point]) -> PeriodicCode:
    """Period-2 lattice code whose box words are the dominating set."""
    words = [tuple(w) for w in words]
    if not words:
        raise ValueError("dominating set must be nonempty")
    n = len(words[0])
    if not is_dominating_set(words, n):
        raise ValueError("the given words do not dominate the hypercube")
    return PeriodicCode(n, Metric.L1, (2,) * n, tuple(words))


# -- dominating-set file format (one binary word per line) ----------------


def load_dominating_set(path: str | Path) -> list[Point]:
    words = []
    length = None
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if set(line) - {"0", "1"}:
            raise FileFormatError(f"line {lineno}: not a binary word: {line!r}")
        if length is None:
            length = len(line)
        elif len(line) != length:
            raise FileFormatError(f"line {lineno}: word length differs from {length}")
        words.append(tuple(int(c) for c in line))
    if not words:
        raise FileFormatError("dominating-set file contains no words")
    if len(set(words)) != len(words):
        raise FileFormatError("duplicate word in dominating-set file")
    return words


def dumps_dominating_set(words: Iterable[Point]) -> str:
    return "\n".join("".join(str(b) for b in w) for w in sorted(words)) + "\n"


def dump_dominating_set(words: Iterable[Point], path: str | Path) -> None:
    Path(path).write_text(dumps_dominating_set(words))


# -- king grid to Z^4 ------------------------------------------------------


def project_to_king(v: Point) -> Point:
    """Collapse Z^4 onto the king grid.

    Each v decomposes uniquely as (x, y, 0, 0) + i*(1,1,1,0) +
    j*(1,-1,0,1) with i = v3 and j = v4; the image is (x, y).
    """
    if len(v) != 4:
        raise ValueError("projection is defined on dimension 4 only")
    return (v[0] - v[2] - v[3], v[1] - v[2] + v[3])


def lift_king_to_4d(king: PeriodicCode) -> PeriodicCode:
    """Pull a king-grid code back through project_to_king.

    The lifted code {v : project_to_king(v) in C} keeps the original
    density.  Its period along axis i is the least m > 0 for which
    project_to_king(m * e_i) is a period multiple of the king code, so
    membership inside one box determines the whole lift.
    """
    if king.dimension != 2 or king.metric is not Metric.KING:
        raise ValueError("expected a 2-dimensional king-metric code")
    p, q = king.periods
    periods = []
    for axis in range(4):
        e = tuple(1 if i == axis else 0 for i in range(4))
        m = 1
        while True:
            img = project_to_king(tuple(m * c for c in e))
            if img[0] % p == 0 and img[1] % q == 0:
                break
            m += 1
        periods.append(m)
    words = tuple(
        v for v in box_points(periods) if king.contains(project_to_king(v))
    )
    return PeriodicCode(4, Metric.L1, tuple(periods), words)


# -- spaced parity grids ----------------------------------------------------


@dataclass(frozen=True)
class GridCodeParams:
    """Parameters of the spaced parity-grid family.

    n is the dimension, r the target radius.  The base radius r0 is the
    largest usable radius not exceeding r (a multiple of n+2 for odd n,
    of (n+2)/2 for even n), k = r - r0 the leftover residue, and
    s = 2*r0/(n+2) the grid pitch.  A code built for r0 identifies at
    every radius >= r0, which is what makes the leftover harmless.
    """

    n: int
    r: int
    k: int
    r0: int
    s: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("dimension must be at least 2")
        if self.r0 < 1 or self.r0 + self.k != self.r:
            raise ValueError("inconsistent radius split")
        if 2 * self.r0 != self.s * (self.n + 2):
            raise ValueError("pitch does not match the base radius")
        if self.n % 2 == 1 and self.s % 2 == 1:
            raise ValueError("pitch must be even when the dimension is odd")


def grid_code_params(n: int, r: int) -> GridCodeParams:
    """Split a radius into base radius, residue and pitch."""
    if n < 2:
        raise ValueError("dimension must be at least 2")
    modulus = (n + 2) if n % 2 == 1 else (n + 2) // 2
    if r < modulus:
        raise ValueError(f"radius must be at least {modulus} for dimension {n}")
    r0 = modulus * (r // modulus)
    k = r - r0
    s = 2 * r0 // (n + 2)
    return GridCodeParams(n, r, k, r0, s)


def grid_code(params: GridCodeParams) -> PeriodicCode:
    """The r-identifying code for these parameters.

    Codewords have first n-1 coordinates in {0, s} with an odd number
    of s entries and run along every value of the last coordinate, so
    the periods are (2s, ..., 2s, 1) and the density is exactly
    1 / (2 s^(n-1)).
    """
    n, s = params.n, params.s
    words = tuple(
        corner + (0,)
        for corner in product((0, s), repeat=n - 1)
        if sum(c == s for c in corner) % 2 == 1
    )
    return PeriodicCode(n, Metric.L1, (2 * s,) * (n - 1) + (1,), words)


def reference_set(params: GridCodeParams) -> PeriodicCode:
    """The even-parity companion grid.

    Not itself an identifying code; its points are the anchors whose
    2(n-1) corners (anchor +- s*e_i) all are codewords, which is what
    guarantees coverage and makes decoding work.
    """
    n, s = params.n, params.s
    words = tuple(
        corner + (0,)
        for corner in product((0, s), repeat=n - 1)
        if sum(c == s for c in corner) % 2 == 0
    )
    return PeriodicCode(n, Metric.L1, (2 * s,) * (n - 1) + (1,), words)
