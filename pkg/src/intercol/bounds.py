"""Closed-form palette bounds, non-colorability tests, and bound reports.

Lower bounds on the maximum palette W come from product constructions
(general regular-factor form, chains of regular factors, separable-coloring
form, and the per-family specializations); upper bounds come from the
diameter bounds of Asratian-Kamalian, the triangle-free vertex-count bound,
and the distance-class span bound with its torus/Hamming/hypercube
specializations.  Non-colorability tests cover Eulerian parity, the Eulerian
product parity obstruction, and the chromatic-index necessary condition.
``report`` evaluates everything applicable to a graph or family descriptor
and tags each entry with its source.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ParameterError
from .families import FamilySpec, ProductSpec, generate, parse_descriptor, regular_degree
from .graphs import (
    Graph,
    diameter,
    is_bipartite,
    is_eulerian,
    is_regular,
    is_triangle_free,
)

LOWER_W = "lower_W"
UPPER_W = "upper_W"
EXACT_W_MIN = "exact_w"
NOT_COLORABLE = "not_colorable"

MATERIALIZE_LIMIT = 4096
CHI_PRIME_EDGE_BUDGET = 40


# -- product lower bounds -------------------------------------------------------


def lb_product_general(w_g: int, w_h: int, r: int) -> int:
    """W(G x H) >= W(G) + W(H) + r for interval-colorable G and r-regular H."""
    if min(w_g, w_h, r) < 1:
        raise ParameterError("palette values and degree must be positive")
    return w_g + w_h + r


def lb_regular_pair(w_g: int, w_h: int, r: int, r2: int) -> int:
    """Both factors regular: W(G x H) >= W(G) + W(H) + max(r, r')."""
    if min(w_g, w_h, r, r2) < 1:
        raise ParameterError("palette values and degrees must be positive")
    return w_g + w_h + max(r, r2)


def lb_regular_chain(w_values, degrees) -> int:
    """Chain of k regular interval-colorable factors: sum of the W values plus
    the degree sums of all proper prefixes (degrees taken nonincreasing)."""
    ws = list(w_values)
    rs = sorted(degrees, reverse=True)
    if len(ws) != len(rs):
        raise ParameterError("need one degree per palette value")
    if not ws:
        raise ParameterError("need at least one factor")
    k = len(ws)
    return sum(ws) + sum(rs[j] for i in range(k - 1) for j in range(i + 1))


def lb_separable(t_g: int, t_h: int, eccentricity: int, r: int) -> int:
    """Separable-coloring product bound: t_G + t_H + ecc(root) * r."""
    if min(t_g, t_h, r) < 1 or eccentricity < 0:
        raise ParameterError("invalid separable bound inputs")
    return t_g + t_h + eccentricity * r


def lb_family(kind: str, params, w_h: int, r: int) -> int:
    """Per-family specialization of the separable product bound
    W(G x H) >= W(G) + W(H) + diam(G) * r for G an even cycle, path,
    hypercube, caterpillar, or complete bipartite graph."""
    if kind == "cycle":
        (n,) = params
        if n < 2:
            raise ParameterError("even cycle bound needs half-length n >= 2")
        return n * (r + 1) + w_h + 1
    if kind == "path":
        (n,) = params
        if n < 2:
            raise ParameterError("path bound needs n >= 2 vertices")
        return (n - 1) * (r + 1) + w_h
    if kind == "hypercube":
        (n,) = params
        return n * (n + 1) // 2 + n * r + w_h
    if kind in ("caterpillar", "tree"):
        ks = tuple(params)
        n = len(ks) + 1
        return (n + sum(ks)) + w_h + n * r
    if kind == "complete_bipartite":
        m, n = params
        if m == 1 and n == 1:
            return 1 + w_h + r
        return m + n + 2 * r + w_h - 1
    raise ParameterError(f"no family product bound for {kind!r}")


# -- generic upper bounds --------------------------------------------------------


def ub_asratian_kamalian(diam: int, delta: int, bipartite: bool = False) -> int:
    """Diameter upper bound on W: (diam+1)(delta-1)+1, or diam*(delta-1)+1
    for bipartite graphs."""
    if diam < 0 or delta < 1:
        raise ParameterError("need diameter >= 0 and max degree >= 1")
    if bipartite:
        return diam * (delta - 1) + 1
    return (diam + 1) * (delta - 1) + 1


def ub_triangle_free(num_vertices: int) -> int:
    """Triangle-free graphs never use more than |V| - 1 colors."""
    if num_vertices < 2:
        raise ParameterError("need at least one edge, so at least two vertices")
    return num_vertices - 1


def ub_distance_class(diam_e: int, delta: int, p) -> int:
    """Span upper bound (1 + diam_e) * delta - sum(p) for graphs where every
    vertex at distance k from another has at least p_k neighbors strictly
    closer to it."""
    p = tuple(p)
    if len(p) != diam_e:
        raise ParameterError(f"need one multiplicity per edge-distance 1..{diam_e}")
    return (1 + diam_e) * delta - sum(p)


def ub_distance_class_bipartite(diam: int, delta: int, p) -> int:
    """Bipartite refinement: diam * delta - sum(p) with p of length diam - 1."""
    p = tuple(p)
    if len(p) != diam - 1:
        raise ParameterError(f"need one multiplicity per distance 1..{diam - 1}")
    return diam * delta - sum(p)


def ub_torus(half_sizes) -> int:
    """Even torus T(2n_1, ..., 2n_k): W <= k + sum n_i (2k - i), n nonincreasing."""
    ns = sorted(half_sizes, reverse=True)
    if not ns or ns[-1] < 2:
        raise ParameterError("even torus bound needs every half-size >= 2")
    k = len(ns)
    return k + sum(n * (2 * k - i) for i, n in enumerate(ns, start=1))


def ub_hamming(half_sizes) -> int:
    """Even Hamming graph H(2n_1, ..., 2n_k): W <= (k+1) sum(4 n_i - 3) / 2."""
    ns = list(half_sizes)
    if not ns or min(ns) < 1:
        raise ParameterError("even Hamming bound needs every half-size >= 1")
    k = len(ns)
    return (k + 1) * sum(2 * n - 1 for n in ns) - k * (k + 1) // 2


def ub_hypercube(n: int) -> int:
    """W(Q_n) <= n(n+1)/2 (attained)."""
    if n < 1:
        raise ParameterError("hypercube bound needs n >= 1")
    return n * (n + 1) // 2


# -- torus and Hamming lower bounds ---------------------------------------------


def lb_torus_even(half_sizes) -> int:
    """Even torus chain bound: k + sum n_i (2i - 1) with halves nondecreasing."""
    ns = sorted(half_sizes)
    if not ns or ns[0] < 2:
        raise ParameterError("even torus bound needs every half-size >= 2")
    return len(ns) + sum(n * (2 * i - 1) for i, n in enumerate(ns, start=1))


def lb_torus_mixed(odd_halves, even_halves) -> int:
    """Mixed torus T(2n_1,...,2n_{k+s}, 2m_1+1,...,2m_k+1) chain bound,
    pairing each odd factor with one even factor and folding in the rest."""
    ms = sorted(odd_halves)
    ns = sorted(even_halves)
    k = len(ms)
    s = len(ns) - k
    if k < 1:
        raise ParameterError("mixed bound needs at least one odd factor")
    if s < 0:
        raise ParameterError("mixed bound needs at least as many even factors as odd ones")
    if ms[0] < 1 or ns[0] < 2:
        raise ParameterError("mixed bound needs odd halves >= 1 and even halves >= 2")
    return (
        s
        + 2 * k * k
        + 2 * sum(ms[i] + ns[i] for i in range(k))
        + sum(ns[k + j - 1] * (4 * k + 2 * j - 1) for j in range(1, s + 1))
    )


def lb_torus_uniform(n: int, k: int) -> int:
    """Uniform even torus T(2n, ..., 2n) with k factors: W >= n k^2 + k."""
    if n < 2 or k < 1:
        raise ParameterError("uniform torus bound needs n >= 2, k >= 1")
    return n * k * k + k


def lb_two_torus_even(m: int, n: int) -> int:
    """Two-dimensional even torus T(2m, 2n): W >= max(3m+n+2, 3n+m+2)."""
    if m < 2 or n < 2:
        raise ParameterError("two-torus bound needs m, n >= 2")
    return max(3 * m + n + 2, 3 * n + m + 2)


def lb_two_torus_mixed(m: int, n: int) -> int:
    """T(2m, 2n+1): W >= 2m + 2n + 2 for odd m, one more for even m."""
    if m < 2 or n < 1:
        raise ParameterError("mixed two-torus bound needs m >= 2, n >= 1")
    return 2 * m + 2 * n + (2 if m % 2 == 1 else 3)


# -- complete graph and Hamming lower bounds --------------------------------------


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs, primes ascending."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        out = 1
        for p, a in self.pairs:
            out *= p**a
        return out

    @classmethod
    def of(cls, n: int) -> "Factorization":
        if n < 1:
            raise ParameterError("can only factor positive integers")
        pairs = []
        rest = n
        p = 2
        while p * p <= rest:
            if rest % p == 0:
                a = 0
                while rest % p == 0:
                    rest //= p
                    a += 1
                pairs.append((p, a))
            p += 1 if p == 2 else 2
        if rest > 1:
            pairs.append((rest, 1))
        return cls(tuple(pairs))


def _prime_index(p: int) -> int:
    """1-based position of a prime in the prime sequence (trial division)."""
    count = 0
    q = 2
    while q <= p:
        if all(q % d for d in range(2, int(math.isqrt(q)) + 1)):
            count += 1
            if q == p:
                return count
        q += 1
    raise ParameterError(f"{p} is not prime")


_SMALL_INDEX_WEIGHT = {1: 1, 2: 2, 3: 3, 4: 4, 5: 4}


def factor_correction(n) -> int:
    """The correction A_n subtracted in the complete-graph palette bound:
    weight 1,2,3,4,4 for exponents of the first five primes, (p+1)/2 beyond."""
    f = n if isinstance(n, Factorization) else Factorization.of(n)
    total = 0
    for p, a in f.pairs:
        i = _prime_index(p)
        weight = _SMALL_INDEX_WEIGHT.get(i, (p + 1) // 2)
        total += a * weight
    return total


def lb_complete_even(n) -> int:
    """W(K_{2n}) >= 4n - 3 - A_n."""
    f = n if isinstance(n, Factorization) else Factorization.of(n)
    return 4 * f.value - 3 - factor_correction(f)


def lb_hamming(half_sizes, w_complete=None) -> int:
    """Even Hamming chain bound: sum of per-factor W(K_{2n_i}) plus
    sum_{i<k} i (2 n_i - 1).  Per-factor palette values default to the
    complete-graph bound, keeping the result a valid lower bound."""
    ns = list(half_sizes)
    if not ns or min(ns) < 1:
        raise ParameterError("Hamming bound needs every half-size >= 1")
    if w_complete is None:
        w_complete = [lb_complete_even(n) for n in ns]
    w_complete = list(w_complete)
    if len(w_complete) != len(ns):
        raise ParameterError("need one complete-graph palette value per factor")
    return sum(w_complete) + sum(i * (2 * ns[i - 1] - 1) for i in range(1, len(ns)))


def lb_hamming_uniform(n: int, k: int) -> int:
    """Uniform even Hamming graph: (4n - 3 - A_n) k + k(k-1)(2n-1)/2."""
    if n < 1 or k < 1:
        raise ParameterError("uniform Hamming bound needs n, k >= 1")
    return (4 * n - 3 - factor_correction(n)) * k + k * (k - 1) * (2 * n - 1) // 2


# -- non-colorability tests -------------------------------------------------------


def eulerian_odd_obstruction(g: Graph) -> bool:
    """True when g is Eulerian with an odd number of edges (never interval
    colorable)."""
    return is_eulerian(g) and g.num_edges % 2 == 1


def eulerian_product_obstruction(g: Graph, h: Graph) -> bool:
    """True when g is Eulerian with odd order and even size while h is
    Eulerian with odd size: the product is then Eulerian with odd size."""
    return (
        is_eulerian(g)
        and g.num_vertices % 2 == 1
        and g.num_edges % 2 == 0
        and is_eulerian(h)
        and h.num_edges % 2 == 1
    )


def chromatic_index_obstruction(
    g: Graph, max_edges: int = CHI_PRIME_EDGE_BUDGET, budget: int | None = None
) -> bool | None:
    """True when the exact chromatic index exceeds the max degree (so no
    interval coloring exists), False when it equals it, None when the graph
    is over the edge budget or the search gave up."""
    from . import oracle

    if g.num_edges == 0:
        return False
    if g.num_edges > max_edges:
        return None
    try:
        chi = oracle.chromatic_index(g, budget=budget if budget is not None else oracle.DEFAULT_BUDGET)
    except Exception:
        return None
    return chi > g.max_degree()


def verify_D_membership(g: Graph, p) -> bool:
    """Brute-force check of the distance condition behind the span bound: for
    every ordered vertex pair (u, v) at distance k <= len(p), v has at least
    p_k neighbors at distance exactly k-1 from u.  Entries of p beyond the
    realized distances are vacuously satisfied.  Interval colorability is a
    separate question supplied by the caller."""
    if not g.is_connected():
        raise ParameterError("distance-class membership needs a connected graph")
    p = tuple(p)
    for u in g.vertices:
        dist = g.bfs(u)
        for v in g.vertices:
            k = dist[v]
            if 1 <= k <= len(p):
                closer = sum(1 for w in g.neighbors(v) if dist[w] == k - 1)
                if closer < p[k - 1]:
                    return False
    return True


def torus_distance_vector(half_sizes) -> tuple[int, ...]:
    """Claimed distance-class vector of an even torus: i repeated n_i times
    for the nonincreasing halves, with one repetition dropped at the end."""
    ns = sorted(half_sizes, reverse=True)
    out = []
    for i, n in enumerate(ns, start=1):
        reps = n - 1 if i == len(ns) else n
        out.extend([i] * reps)
    return tuple(out)


def hamming_distance_vector(k: int) -> tuple[int, ...]:
    """Claimed distance-class vector of an even Hamming graph: 1, 2, ..., k."""
    return tuple(range(1, k + 1))


# -- reports ---------------------------------------------------------------------


@dataclass(frozen=True)
class BoundEntry:
    name: str
    direction: str
    value: int | None
    citation: str


@dataclass
class BoundReport:
    subject: str
    entries: list = field(default_factory=list)

    def add(self, name: str, direction: str, value: int | None, citation: str):
        self.entries.append(BoundEntry(name, direction, value, citation))

    def lower_bounds(self) -> list[int]:
        return [e.value for e in self.entries if e.direction == LOWER_W and e.value is not None]

    def upper_bounds(self) -> list[int]:
        return [e.value for e in self.entries if e.direction == UPPER_W and e.value is not None]

    def best_lower(self) -> int | None:
        vals = self.lower_bounds()
        return max(vals) if vals else None

    def best_upper(self) -> int | None:
        vals = self.upper_bounds()
        return min(vals) if vals else None

    @property
    def not_colorable(self) -> bool:
        return any(e.direction == NOT_COLORABLE for e in self.entries)

    @property
    def exact_min(self) -> int | None:
        for e in self.entries:
            if e.direction == EXACT_W_MIN:
                return e.value
        return None


# family membership in the interval-colorable class, where known


def family_colorable(spec: FamilySpec) -> bool | None:
    kind, p = spec.kind, spec.params
    if kind in ("path", "caterpillar", "complete_bipartite", "hypercube", "fibonacci", "butterfly"):
        return True
    if kind == "cycle":
        return p[0] % 2 == 0
    if kind == "complete":
        return True if p[0] % 2 == 0 else (None if p[0] == 1 else False)
    if kind in ("torus", "hamming"):
        size_product = 1
        for s in p:
            size_product *= s
        return size_product % 2 == 0
    if kind == "petersen":
        return False
    return None


def family_W_exact(spec: FamilySpec) -> int | None:
    kind, p = spec.kind, spec.params
    if kind == "cycle" and p[0] % 2 == 0:
        return p[0] // 2 + 1
    if kind == "path" and p[0] >= 2:
        return p[0] - 1
    if kind == "caterpillar":
        return len(p) + 1 + sum(p)
    if kind == "complete_bipartite":
        return p[0] + p[1] - 1
    if kind == "hypercube":
        return p[0] * (p[0] + 1) // 2
    if kind == "fibonacci" and p[0] <= 2:
        return p[0]
    if kind == "complete" and p[0] == 2:
        return 1
    return None


def family_W_lower(spec: FamilySpec) -> int | None:
    """Best known lower bound on W (exact value when available)."""
    exact = family_W_exact(spec)
    if exact is not None:
        return exact
    kind, p = spec.kind, spec.params
    if kind == "fibonacci":
        return p[0] + 1
    if kind == "complete" and p[0] % 2 == 0:
        return lb_complete_even(p[0] // 2)
    if kind == "torus" and all(s % 2 == 0 for s in p):
        return lb_torus_even([s // 2 for s in p])
    if kind == "hamming" and all(s % 2 == 0 for s in p):
        return lb_hamming([s // 2 for s in p])
    return None


def family_w_exact(spec: FamilySpec) -> int | None:
    """Exact minimum palette, where a closed form is on record."""
    kind, p = spec.kind, spec.params
    if kind == "torus" and family_colorable(spec):
        return 2 * len(p)
    if kind == "hamming" and family_colorable(spec):
        return sum(s - 1 for s in p)
    if kind == "fibonacci":
        return p[0]
    if kind == "hypercube":
        return p[0]
    if kind == "complete_bipartite":
        return p[0] + p[1] - math.gcd(p[0], p[1])
    if kind == "complete" and p[0] % 2 == 0:
        return p[0] - 1
    if kind == "cycle" and p[0] % 2 == 0:
        return 2
    return None


def family_diameter(spec: FamilySpec) -> int | None:
    kind, p = spec.kind, spec.params
    if kind == "cycle":
        return p[0] // 2
    if kind == "path":
        return p[0] - 1
    if kind == "hypercube":
        return p[0]
    if kind == "caterpillar":
        return len(p) + 1
    if kind == "complete_bipartite":
        return 1 if p == (1, 1) else 2
    return None


_SEPARABLE_FAMILIES = ("cycle", "path", "hypercube", "caterpillar", "complete_bipartite")


def _torus_entries(report: BoundReport, halves_even, odd_sizes):
    """Lower/upper entries for a torus with the given even-factor halves and
    odd factor sizes."""
    k_even, k_odd = len(halves_even), len(odd_sizes)
    if k_odd == 0 and k_even > 0 and min(halves_even) >= 2:
        report.add("even torus chain bound", LOWER_W, lb_torus_even(halves_even), "even torus chain bound")
        if len(set(halves_even)) == 1:
            report.add(
                "uniform torus chain bound",
                LOWER_W,
                lb_torus_uniform(halves_even[0], k_even),
                "uniform torus chain bound",
            )
        report.add("even torus span bound", UPPER_W, ub_torus(halves_even), "even torus span bound")
    if k_odd == 1 and k_even == 1 and halves_even[0] >= 2:
        m, n = halves_even[0], (odd_sizes[0] - 1) // 2
        report.add("two-torus mixed bound", LOWER_W, lb_two_torus_mixed(m, n), "two-torus bounds (prior work)")
    if k_odd == 0 and k_even == 2 and min(halves_even) >= 2:
        report.add(
            "two-torus bound",
            LOWER_W,
            lb_two_torus_even(halves_even[0], halves_even[1]),
            "two-torus bounds (prior work)",
        )
    if 1 <= k_odd <= k_even and (not halves_even or min(halves_even) >= 2):
        ms = sorted((s - 1) // 2 for s in odd_sizes)
        report.add(
            "mixed torus chain bound",
            LOWER_W,
            lb_torus_mixed(ms, halves_even),
            "mixed torus chain bound",
        )


def _family_entries(report: BoundReport, spec: FamilySpec):
    kind, p = spec.kind, spec.params
    colorable = family_colorable(spec)
    if colorable is False:
        if kind == "cycle":
            report.add("odd cycle parity", NOT_COLORABLE, None, "Eulerian odd-size obstruction")
        elif kind == "complete":
            report.add("odd complete graph", NOT_COLORABLE, None, "odd-order complete graphs are class two")
        elif kind in ("torus", "hamming"):
            report.add("product parity", NOT_COLORABLE, None, "cartesian product parity classification (prior work)")
        elif kind == "petersen":
            report.add("chromatic index", NOT_COLORABLE, None, "chromatic index obstruction")
        return

    w = family_w_exact(spec)
    if w is not None:
        citations = {
            "torus": "torus minimum palette (prior work)",
            "hamming": "Hamming minimum palette (prior work)",
            "fibonacci": "fibonacci cube palette bounds",
            "hypercube": "hypercube palette range (prior work)",
            "complete_bipartite": "complete bipartite palette range (Kamalian)",
            "complete": "regular graph minimum palette",
            "cycle": "regular graph minimum palette",
        }
        report.add("minimum palette", EXACT_W_MIN, w, citations.get(kind, "minimum palette"))

    exact = family_W_exact(spec)
    if exact is not None:
        citations = {
            "cycle": "even cycle palette maximum",
            "path": "tree palette maximum",
            "caterpillar": "tree palette maximum",
            "complete_bipartite": "complete bipartite palette range (Kamalian)",
            "hypercube": "hypercube palette range (prior work)",
            "fibonacci": "fibonacci cube palette bounds",
            "complete": "single edge",
        }
        report.add("palette maximum", LOWER_W, exact, citations.get(kind, "palette maximum"))
        report.add("palette maximum", UPPER_W, exact, citations.get(kind, "palette maximum"))
        return

    if kind == "fibonacci":
        report.add("fibonacci cube lower bound", LOWER_W, p[0] + 1, "fibonacci cube palette bounds")
    elif kind == "complete" and p[0] % 2 == 0:
        report.add(
            "complete graph palette bound",
            LOWER_W,
            lb_complete_even(p[0] // 2),
            "complete graph palette bound (prior work)",
        )
    elif kind == "torus":
        halves_even = [s // 2 for s in p if s % 2 == 0]
        odd_sizes = [s for s in p if s % 2 == 1]
        _torus_entries(report, halves_even, odd_sizes)
    elif kind == "hamming" and all(s % 2 == 0 for s in p):
        halves = [s // 2 for s in p]
        report.add("Hamming chain bound", LOWER_W, lb_hamming(halves), "Hamming chain bound")
        if len(set(halves)) == 1:
            report.add(
                "uniform Hamming chain bound",
                LOWER_W,
                lb_hamming_uniform(halves[0], len(halves)),
                "uniform Hamming chain bound",
            )
        report.add("Hamming span bound", UPPER_W, ub_hamming(halves), "Hamming span bound")


def _homogeneous_product_family(spec: ProductSpec) -> FamilySpec | None:
    kinds = {f.kind for f in spec.factors}
    if kinds == {"cycle"}:
        return FamilySpec("torus", tuple(f.params[0] for f in spec.factors))
    if kinds == {"complete"}:
        return FamilySpec("hamming", tuple(f.params[0] for f in spec.factors))
    return None


def _product_entries(report: BoundReport, spec: ProductSpec):
    merged = _homogeneous_product_family(spec)
    if merged is not None:
        _family_entries(report, merged)

    factors = spec.factors
    degrees = [regular_degree(f) for f in factors]
    colorable = [family_colorable(f) for f in factors]
    lowers = [family_W_lower(f) for f in factors]

    # regular product colorability: all factors regular and one of them known
    # interval colorable makes the whole product colorable with minimum palette
    # equal to its degree
    if all(d is not None for d in degrees) and any(c is True for c in colorable) and merged is None:
        report.add(
            "regular product minimum palette",
            EXACT_W_MIN,
            sum(degrees),
            "regular product colorability (prior work)",
        )

    if all(c is True for c in colorable):
        if all(d is not None for d in degrees) and all(w is not None for w in lowers):
            report.add(
                "regular factor chain bound",
                LOWER_W,
                lb_regular_chain(lowers, degrees),
                "product bound, regular factor chain",
            )
        if len(factors) == 2:
            for left, right in ((0, 1), (1, 0)):
                if degrees[right] is None or lowers[left] is None or lowers[right] is None:
                    continue
                report.add(
                    "regular factor product bound",
                    LOWER_W,
                    lb_product_general(lowers[left], lowers[right], degrees[right]),
                    "product bound, regular second factor",
                )
                f = factors[left]
                if f.kind in _SEPARABLE_FAMILIES and family_W_exact(f) is not None:
                    params = f.params
                    if f.kind == "cycle":
                        if params[0] % 2 == 1:
                            continue
                        params = (params[0] // 2,)  # the bound takes the half-length
                    report.add(
                        f"separable family bound ({f.kind})",
                        LOWER_W,
                        lb_family(f.kind, params, lowers[right], degrees[right]),
                        "separable family product bound",
                    )


def _graph_entries(report: BoundReport, g: Graph, skip_parity: bool = False):
    if g.num_edges == 0 or not g.is_connected():
        return
    d = diameter(g)
    delta = g.max_degree()
    report.add(
        "diameter bound", UPPER_W, ub_asratian_kamalian(d, delta), "Asratian-Kamalian diameter bound"
    )
    if is_bipartite(g):
        report.add(
            "bipartite diameter bound",
            UPPER_W,
            ub_asratian_kamalian(d, delta, bipartite=True),
            "Asratian-Kamalian diameter bound (bipartite)",
        )
    if is_triangle_free(g):
        report.add(
            "triangle-free bound", UPPER_W, ub_triangle_free(g.num_vertices), "triangle-free vertex-count bound"
        )
    if not skip_parity and eulerian_odd_obstruction(g):
        report.add("Eulerian parity", NOT_COLORABLE, None, "Eulerian odd-size obstruction")
    if g.num_edges <= CHI_PRIME_EDGE_BUDGET:
        obstruction = chromatic_index_obstruction(g)
        if obstruction:
            report.add("chromatic index", NOT_COLORABLE, None, "chromatic index obstruction")


def report(subject, materialize_limit: int = MATERIALIZE_LIMIT) -> BoundReport:
    """Every applicable bound and test for a graph, family, or product
    descriptor, each entry tagged with its source."""
    spec = None
    graph = None
    if isinstance(subject, str):
        spec = parse_descriptor(subject)
    elif isinstance(subject, (FamilySpec, ProductSpec)):
        spec = subject
    elif isinstance(subject, Graph):
        graph = subject
    else:
        raise ParameterError(f"cannot report on {subject!r}")

    rep = BoundReport(subject=str(spec) if spec is not None else repr(subject))

    if spec is not None:
        if isinstance(spec, FamilySpec):
            _family_entries(rep, spec)
            graph = generate(spec)
        else:
            _product_entries(rep, spec)
            factor_graphs = [generate(f) for f in spec.factors]
            order = 1
            for fg in factor_graphs:
                order *= fg.num_vertices
            if len(factor_graphs) == 2:
                for a, b in ((0, 1), (1, 0)):
                    if eulerian_product_obstruction(factor_graphs[a], factor_graphs[b]):
                        rep.add(
                            "Eulerian product parity",
                            NOT_COLORABLE,
                            None,
                            "Eulerian product parity obstruction",
                        )
                        break
            if order <= materialize_limit:
                graph = generate(spec)

    if graph is not None and graph.num_vertices <= materialize_limit:
        _graph_entries(rep, graph, skip_parity=rep.not_colorable)

    return rep
