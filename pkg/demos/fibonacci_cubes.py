#!/usr/bin/env python3
"""Interval colorings of Fibonacci cubes.

The n-bit Fibonacci cube (binary strings without adjacent 1s, edges flipping
one bit) splits into a 0-prefixed copy of the (n-1)-cube, a 10-prefixed copy
of the (n-2)-cube, and a perfect matching between the 10-block and its
00-shadow.  Two recursions ride that split: one keeps the palette at n (the
minimum, since the all-zeros vertex has degree n), one reaches n+1.
"""

from intercol import fibonacci_cube, verify_interval
from intercol import oracle
from intercol.constructions import fibonacci_min_coloring, fibonacci_plus_coloring

print("cube   vertices  edges   min palette  wide palette")
for n in range(1, 15):
    g = fibonacci_cube(n)
    narrow = fibonacci_min_coloring(n)
    assert verify_interval(narrow)
    wide = fibonacci_plus_coloring(n) if n >= 3 else None
    if wide is not None:
        assert verify_interval(wide)
    wide_t = wide.t if wide else "-"
    print(f"  {n:>2}   {g.num_vertices:>7}  {g.num_edges:>5}   {narrow.t:>10}  {wide_t:>12}")

print()
print("The 3-bit colorings in full (edge: color):")
for name, coloring in [("palette 3", fibonacci_min_coloring(3)), ("palette 4", fibonacci_plus_coloring(3))]:
    rows = ", ".join(f"{u}-{v}: {c}" for (u, v), c in coloring.items())
    print(f"  {name}:  {rows}")

print()
print("Exact feasible palette sizes from the search oracle:")
for n in (2, 3, 4):
    spectrum = oracle.feasible_spectrum(fibonacci_cube(n))
    print(f"  {n}-bit cube: feasible palettes {spectrum.feasible}")
