"""Identifying codes on the n-dimensional integer lattice and the king grid.

A code C on a graph is r-identifying when every vertex sees a nonempty,
unique set of codewords within distance r.  This package constructs
such codes on Z^n (dominating-set lifts, a king-grid lift into Z^4, and
a spaced parity-grid family for arbitrary radius), verifies them
exhaustively with machine-checked witnesses, decodes vertices from
their identifying sets, searches for small codes, and evaluates exact
rational density bounds.
"""

from .bounds import (
    BoundEntry,
    BoundKind,
    bound_ratio,
    bounds_table_csv,
    bounds_table_text,
    grid_code_upper_bound,
    known_bounds_table,
    radius_one_lower_bound,
    shell_bound_limit,
    shell_lower_bound,
)
from .code import (
    FileFormatError,
    PeriodicCode,
    box_points,
    dump_code,
    dumps_code,
    load_code,
    loads_code,
)
from .construct import (
    GridCodeParams,
    dump_dominating_set,
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
from .decode import DecodeResult, MalformedIdentifyingSet, decode_last_coordinate, decode_vertex
from .lattice import Metric, Point, ball, ball_size, distance
from .search import (
    DomsetSearchResult,
    KingSearchResult,
    SearchBudget,
    search_king_schedule,
    search_min_dominating_set,
    search_periodic_king_code,
)
from .verify import (
    EmptyBall,
    Indistinguishable,
    VerificationReport,
    verify_identifying,
    verify_torus_naive,
)

__all__ = [
    "BoundEntry",
    "BoundKind",
    "DecodeResult",
    "DomsetSearchResult",
    "EmptyBall",
    "FileFormatError",
    "GridCodeParams",
    "Indistinguishable",
    "KingSearchResult",
    "MalformedIdentifyingSet",
    "Metric",
    "PeriodicCode",
    "Point",
    "SearchBudget",
    "VerificationReport",
    "ball",
    "ball_size",
    "bound_ratio",
    "bounds_table_csv",
    "bounds_table_text",
    "box_points",
    "decode_last_coordinate",
    "decode_vertex",
    "distance",
    "dump_code",
    "dump_dominating_set",
    "dumps_code",
    "dumps_dominating_set",
    "grid_code",
    "grid_code_params",
    "grid_code_upper_bound",
    "hamming_code",
    "is_dominating_set",
    "known_bounds_table",
    "lift_dominating_set",
    "lift_king_to_4d",
    "load_code",
    "load_dominating_set",
    "loads_code",
    "project_to_king",
    "radius_one_lower_bound",
    "reference_set",
    "search_king_schedule",
    "search_min_dominating_set",
    "search_periodic_king_code",
    "shell_bound_limit",
    "shell_lower_bound",
    "verify_identifying",
    "verify_torus_naive",
]
