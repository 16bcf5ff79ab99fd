"""Family descriptors: a compact grammar for naming graphs and products.

A descriptor is ``name:arg,arg`` terms joined by ``x`` for Cartesian products,
e.g. ``cycle:8xk:2`` for C_8 x K_2 or ``torus:4,4``.  Single-argument terms
may also glue the argument onto a short alias (``k2``, ``q3``, ``c8``).
Generated graphs carry the canonical labels of their family; products built
from a descriptor use flat coordinate tuples.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParameterError
from .graphs import (
    Graph,
    butterfly,
    caterpillar,
    complete,
    complete_bipartite,
    cycle,
    fibonacci_cube,
    hamming,
    hypercube,
    path,
    petersen,
    product_all,
    torus,
)

_ALIASES = {
    "p": "path",
    "c": "cycle",
    "k": "complete",
    "kmn": "complete_bipartite",
    "kb": "complete_bipartite",
    "q": "hypercube",
    "cube": "hypercube",
    "t": "torus",
    "h": "hamming",
    "fib": "fibonacci",
    "f": "fibonacci",
    "gamma": "fibonacci",
    "cat": "caterpillar",
}

_GENERATORS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "hypercube": hypercube,
    "torus": torus,
    "hamming": hamming,
    "fibonacci": fibonacci_cube,
    "caterpillar": caterpillar,
    "butterfly": butterfly,
    "petersen": petersen,
}

_ARITY = {  # (min, max) argument counts; None = unbounded
    "path": (1, 1),
    "cycle": (1, 1),
    "complete": (1, 1),
    "complete_bipartite": (2, 2),
    "hypercube": (1, 1),
    "torus": (1, None),
    "hamming": (1, None),
    "fibonacci": (1, 1),
    "caterpillar": (0, None),
    "butterfly": (0, 0),
    "petersen": (0, 0),
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}:{','.join(str(p) for p in self.params)}"


@dataclass(frozen=True)
class ProductSpec:
    factors: tuple[FamilySpec, ...]

    def __str__(self) -> str:
        return "x".join(str(f) for f in self.factors)


def _parse_term(term: str) -> FamilySpec:
    term = term.strip().lower()
    if ":" in term:
        name, _, argtext = term.partition(":")
        args = tuple(int(a) for a in argtext.split(",") if a != "")
    else:
        m = re.fullmatch(r"([a-z_]+)(\d*)", term)
        if not m:
            raise ParameterError(f"cannot parse family term {term!r}")
        name = m.group(1)
        args = (int(m.group(2)),) if m.group(2) else ()
    kind = _ALIASES.get(name, name)
    if kind not in _GENERATORS:
        raise ParameterError(f"unknown graph family {name!r}")
    lo, hi = _ARITY[kind]
    if len(args) < lo or (hi is not None and len(args) > hi):
        raise ParameterError(f"family {kind!r} takes {lo}{'+' if hi is None else f'..{hi}'} arguments, got {len(args)}")
    return FamilySpec(kind, args)


def parse_descriptor(text: str):
    """Parse ``name:args`` terms joined by ``x`` into a FamilySpec or ProductSpec."""
    terms = [t for t in text.split("x") if t.strip()]
    if not terms:
        raise ParameterError(f"empty family descriptor {text!r}")
    specs = tuple(_parse_term(t) for t in terms)
    if len(specs) == 1:
        return specs[0]
    return ProductSpec(specs)


def generate(spec) -> Graph:
    """Build the graph named by a FamilySpec / ProductSpec / descriptor string."""
    if isinstance(spec, str):
        spec = parse_descriptor(spec)
    if isinstance(spec, ProductSpec):
        return product_all([generate(f) for f in spec.factors])
    if isinstance(spec, FamilySpec):
        return _GENERATORS[spec.kind](*spec.params)
    raise ParameterError(f"cannot generate a graph from {spec!r}")


def regular_degree(spec) -> int | None:
    """Degree when the family member is regular, else None."""
    if isinstance(spec, ProductSpec):
        degs = [regular_degree(f) for f in spec.factors]
        if any(d is None for d in degs):
            return None
        return sum(degs)
    kind, p = spec.kind, spec.params
    if kind == "cycle":
        return 2
    if kind == "complete":
        return p[0] - 1
    if kind == "hypercube":
        return p[0]
    if kind == "torus":
        return 2 * len(p)
    if kind == "hamming":
        return sum(s - 1 for s in p)
    if kind == "complete_bipartite" and p[0] == p[1]:
        return p[0]
    if kind == "path" and p[0] == 2:
        return 1
    if kind == "petersen":
        return 3
    if kind == "caterpillar" and len(p) == 0:
        return 1
    return None
