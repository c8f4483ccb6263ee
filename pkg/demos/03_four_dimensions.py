"""A density-2/9 identifying code for Z^4, built from the king grid.

The best known 1-identifying density on Z^4 comes from a detour through
two dimensions: find a 1-identifying code on the king grid (8-neighbour
adjacency) of density 2/9, then pull it back through the projection
(x, y, i, j) -> (x - i - j, y - i + j).  Radius-1 balls in Z^4 map onto
king-grid balls, and distinct points with the same image are far apart,
so the lift inherits both identification and density.

Run:  python demos/03_four_dimensions.py   (about 5 seconds)
"""

import time
from fractions import Fraction

from idcodes import (
    Metric,
    ball,
    lift_king_to_4d,
    project_to_king,
    search_king_schedule,
    verify_identifying,
    verify_torus_naive,
)

print("Searching the period schedule for an exact density-2/9 king code...")
start = time.monotonic()
result = search_king_schedule(Fraction(2, 9))
assert result.code is not None
king = result.code
print(
    f"  found in {time.monotonic() - start:.1f}s after {result.nodes} nodes:"
    f" periods {king.periods}, {len(king.words)} words per box"
)
for x in range(king.periods[0]):
    row = "".join("#" if king.contains((x, y)) else "." for y in range(king.periods[1]))
    print("   ", row)

print("  lattice verifier:", verify_identifying(king, 1).describe())
print(
    "  independent torus oracle (inflated to 12x12):",
    verify_torus_naive(king.inflate((2, 2)), 1).describe(),
)
print()

print("The projection sends radius-1 balls onto radius-1 king balls:")
v = (3, -1, 2, 5)
image = sorted({project_to_king(u) for u in ball(v, 1)})
print(f"  project(B_1({v})) = {image}")
print(f"  B_1(project({v}))  = {ball(project_to_king(v), 1, Metric.KING)}")
print()

print("Lifting to dimension 4...")
lifted = lift_king_to_4d(king)
report = verify_identifying(lifted, 1)
print(
    f"  periods {lifted.periods}, {len(lifted.words)} words,"
    f" density {lifted.density()}"
)
print(f"  {report.describe()} ({report.pairs_checked} pairs checked)")
