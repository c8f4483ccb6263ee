"""Lattice balls, exact counting, and the radius-1 bounds table.

Run:  python demos/01_balls_and_bounds.py
"""

from fractions import Fraction

from idcodes import (
    Metric,
    ball,
    ball_size,
    bounds_table_text,
    known_bounds_table,
    shell_bound_limit,
    shell_lower_bound,
    grid_code_upper_bound,
)

# -- balls in two metrics --------------------------------------------------

print("A radius-1 ball in the rectilinear metric is a cross:")
print("  ", ball((0, 0), 1))
print("In the king metric it is the full 3x3 square:")
print("  ", ball((0, 0), 1, Metric.KING))
print()

# ball_size(n, r) counts |B_r| in dimension n without enumerating.
# The values form the Delannoy table, symmetric in (n, r):
print("ball_size(n, r) for n, r = 1..6:")
for n in range(1, 7):
    print("  ", [ball_size(n, r) for r in range(1, 7)])
print()

# -- what density does an identifying code need? ---------------------------

print("Shell lower bound vs. grid-construction upper bound, n = 3:")
print("  r   lower          upper    r^2*lower  r^2*upper")
for r in range(5, 45, 5):
    lo, hi = shell_lower_bound(3, r), grid_code_upper_bound(3, r)
    print(
        f"  {r:2d}  {str(lo):12s}  {str(hi):7s}  {float(r**2 * lo):.4f}     "
        f"{float(r**2 * hi):.4f}"
    )
print(
    "  the scaled lower bound approaches",
    shell_bound_limit(3),
    f"= {float(shell_bound_limit(3)):.4f},"
)
print("  while the scaled upper bound is constant: both sides are Theta(1/r^2).")
print()

# -- the radius-1 table -----------------------------------------------------

print("Best known densities at radius 1 ('=' marks exactly known values):")
print(bounds_table_text(known_bounds_table()))
