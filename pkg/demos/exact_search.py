#!/usr/bin/env python3
"""The exhaustive oracle on small graphs: spectra, witnesses, obstructions.

Interval colorability is not monotone in the palette size and some graphs
have none at all, so the oracle sweeps every palette size between the max
degree and a proven ceiling, reporting the exact feasible set with one
witness per size.
"""

from intercol import butterfly, complete, complete_bipartite, cycle, hamming, hypercube, petersen, torus
from intercol import oracle
from intercol.bounds import (
    chromatic_index_obstruction,
    eulerian_product_obstruction,
)

print("graph        feasible palette sizes           search nodes")
for name, g in [
    ("C6", cycle(6)),
    ("C8", cycle(8)),
    ("K4", complete(4)),
    ("K23", complete_bipartite(2, 3)),
    ("K33", complete_bipartite(3, 3)),
    ("Q3", hypercube(3)),
    ("butterfly", butterfly()),
    ("K2xK3", hamming(2, 3)),
]:
    s = oracle.feasible_spectrum(g)
    print(f"  {name:<10} {str(s.feasible):<30} {s.nodes}")

print()
print("Graphs with no interval coloring, and why:")
c3 = oracle.feasible_spectrum(cycle(3))
print(f"  C3: search exhausted every palette size in {c3.checked}, feasible set empty")
print(f"  butterfly x K3: Eulerian product parity obstruction -> {eulerian_product_obstruction(butterfly(), complete(3))}")
print(f"  C5 x C5: chromatic index exceeds max degree -> {chromatic_index_obstruction(torus(5, 5), max_edges=60)}")
print(f"  Petersen: chromatic index exceeds max degree -> {chromatic_index_obstruction(petersen())}")

print()
print("Budgets are first-class: a tiny budget reports back instead of lying.")
res = oracle.search(hypercube(3), 6, budget=10)
print(f"  Q3 at palette 6 with budget 10: {res.status} after {res.nodes} nodes")
res = oracle.search(hypercube(3), 6)
print(f"  same search, default budget:    {res.status} after {res.nodes} nodes")
