"""Periodic codes on the integer lattice.

An infinite code is stored by per-coordinate periods p_1..p_n together
with its codewords inside the fundamental box prod [0, p_i); the code is
the set of all translates of these words by period multiples.  The
density of such a code is exactly |words| / (p_1 * ... * p_n), and
membership, identifying sets and so on are computed by reducing points
into the box.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import prod
from pathlib import Path
from typing import Iterable

from .lattice import Metric, Point, ball


class FileFormatError(ValueError):
    """A code or dominating-set file violates its declared format."""


def box_points(periods: Iterable[int]) -> list[Point]:
    """All points of the fundamental box prod [0, p_i), lexicographically."""
    return list(product(*(range(p) for p in periods)))


@dataclass(frozen=True)
class PeriodicCode:
    """A periodic code, immutable and safe to share.

    Invariants enforced at construction: periods are positive, every
    word lies inside the fundamental box, words are nonempty, distinct
    and stored sorted (so equality is structural).
    """

    dimension: int
    metric: Metric
    periods: tuple[int, ...]
    words: tuple[Point, ...]
    _word_set: frozenset[Point] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ValueError("dimension must be positive")
        if self.metric is Metric.KING and self.dimension != 2:
            raise ValueError("king metric codes must have dimension 2")
        periods = tuple(int(p) for p in self.periods)
        if len(periods) != self.dimension:
            raise ValueError("periods must match the dimension")
        if any(p < 1 for p in periods):
            raise ValueError("periods must be positive")
        words = sorted(tuple(int(c) for c in w) for w in self.words)
        if not words:
            raise ValueError("a code must have at least one codeword")
        for w in words:
            if len(w) != self.dimension:
                raise ValueError(f"codeword {w} does not match the dimension")
            if any(not 0 <= c < p for c, p in zip(w, periods)):
                raise ValueError(f"codeword {w} lies outside the fundamental box")
        if len(set(words)) != len(words):
            raise ValueError("duplicate codeword")
        object.__setattr__(self, "periods", periods)
        object.__setattr__(self, "words", tuple(words))
        object.__setattr__(self, "_word_set", frozenset(words))

    # -- membership ---------------------------------------------------

    def reduce(self, v: Point) -> Point:
        """Residue of v inside the fundamental box (nonnegative modulus)."""
        if len(v) != self.dimension:
            raise ValueError(f"dimension mismatch: {len(v)} vs {self.dimension}")
        return tuple(c % p for c, p in zip(v, self.periods))

    def contains(self, v: Point) -> bool:
        """Whether v belongs to the infinite periodic code."""
        return self.reduce(v) in self._word_set

    # -- derived quantities -------------------------------------------

    def density(self) -> Fraction:
        """Exact fraction of lattice points that are codewords."""
        return Fraction(len(self.words), prod(self.periods))

    def identifying_set(self, v: Point, radius: int) -> tuple[Point, ...]:
        """Codewords within distance radius of v, as absolute points, sorted."""
        return tuple(c for c in ball(v, radius, self.metric) if self.contains(c))

    def box(self) -> list[Point]:
        return box_points(self.periods)

    def inflate(self, factors: Iterable[int]) -> PeriodicCode:
        """The same infinite code with each period multiplied by a factor."""
        factors = tuple(int(f) for f in factors)
        if len(factors) != self.dimension or any(f < 1 for f in factors):
            raise ValueError("factors must be positive, one per coordinate")
        words = [
            tuple(c + a * p for c, a, p in zip(w, shift, self.periods))
            for w in self.words
            for shift in product(*(range(f) for f in factors))
        ]
        periods = tuple(f * p for f, p in zip(factors, self.periods))
        return PeriodicCode(self.dimension, self.metric, periods, tuple(words))

    # -- file format ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "metric": self.metric.value,
            "periods": list(self.periods),
            "codewords": [list(w) for w in self.words],
        }

    @classmethod
    def from_json(cls, obj: object) -> PeriodicCode:
        if not isinstance(obj, dict):
            raise FileFormatError("code file must contain a JSON object")
        missing = {"dimension", "metric", "periods", "codewords"} - obj.keys()
        if missing:
            raise FileFormatError(f"missing fields: {sorted(missing)}")
        try:
            metric = Metric(obj["metric"])
        except ValueError:
            raise FileFormatError(f"unknown metric {obj['metric']!r}") from None
        dimension = obj["dimension"]
        periods = obj["periods"]
        words = obj["codewords"]
        if not isinstance(dimension, int):
            raise FileFormatError("dimension must be an integer")
        if not isinstance(periods, list) or not all(isinstance(p, int) for p in periods):
            raise FileFormatError("periods must be a list of integers")
        if not isinstance(words, list) or not all(
            isinstance(w, list) and all(isinstance(c, int) for c in w) for w in words
        ):
            raise FileFormatError("codewords must be a list of integer lists")
        try:
            return cls(dimension, metric, tuple(periods), tuple(tuple(w) for w in words))
        except ValueError as exc:
            raise FileFormatError(str(exc)) from None


def dumps_code(code: PeriodicCode) -> str:
    return json.dumps(code.to_json(), indent=1, sort_keys=True)


def dump_code(code: PeriodicCode, path: str | Path) -> None:
    Path(path).write_text(dumps_code(code) + "\n")


def loads_code(text: str) -> PeriodicCode:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid JSON: {exc}") from None
    return PeriodicCode.from_json(obj)


def load_code(path: str | Path) -> PeriodicCode:
    return loads_code(Path(path).read_text())
