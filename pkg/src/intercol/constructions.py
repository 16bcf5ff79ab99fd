"""Explicit interval-coloring constructions.

Two product liftings (one for any interval-colored factors with a regular
second factor, one that exploits a separable coloring of the first factor to
push the palette up by eccentricity * degree), closed-form separable colorings
for even cycles, caterpillars and complete bipartite graphs, a recursive
maximal hypercube coloring, and the two recursive Fibonacci-cube colorings
(palette n and palette n+1).

Every constructor re-verifies its output before returning it; a failure is a
ConstructionError, never a silently wrong coloring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import (
    EdgeColoring,
    is_separable,
    relabel_coloring,
    split_spectrum,
    verify_interval,
)
from .errors import ConstructionError, ContractError, ParameterError
from .graphs import (
    Graph,
    cartesian_product,
    caterpillar,
    caterpillar_leaf_labels,
    complete,
    complete_bipartite,
    cycle,
    edge_key,
    fibonacci_cube,
    fibonacci_strings,
    hypercube,
    is_regular,
    label_key,
    level_decomposition,
)


@dataclass(frozen=True)
class SeparableColoring:
    """An interval coloring that is separable with respect to ``root``, with
    color 1 present at the root and the top color present at ``far_witness``,
    a vertex at maximum distance from the root.  Exactly the shape the
    eccentricity-scaled product lifting needs."""

    coloring: EdgeColoring
    root: object
    far_witness: object

    @property
    def t(self) -> int:
        return self.coloring.t

    def validate(self) -> None:
        """Re-check every invariant; raises ContractError naming the first
        failing one."""
        cert = verify_interval(self.coloring)
        if not cert:
            raise ContractError(f"not a valid interval coloring: {cert.verdict} {cert.witness}")
        g = self.coloring.graph
        ld = level_decomposition(g, self.root)
        sep = is_separable(self.coloring, ld)
        if not sep:
            raise ContractError(f"not separable w.r.t. {self.root!r}: fails at {sep.failing_vertex!r}")
        if 1 not in self.coloring.spectrum(self.root).colors:
            raise ContractError(f"color 1 missing at root {self.root!r}")
        if ld.level_of(self.far_witness) != ld.eccentricity:
            raise ContractError(
                f"far witness {self.far_witness!r} is not at distance "
                f"{ld.eccentricity} from the root"
            )
        if self.t not in self.coloring.spectrum(self.far_witness).colors:
            raise ContractError(f"top color {self.t} missing at far witness {self.far_witness!r}")


def _checked(coloring: EdgeColoring, what: str) -> EdgeColoring:
    cert = verify_interval(coloring)
    if not cert:
        raise ConstructionError(f"{what} produced an invalid coloring: {cert.verdict} {cert.witness}")
    return coloring


def _checked_separable(sc: SeparableColoring, what: str) -> SeparableColoring:
    try:
        sc.validate()
    except ContractError as exc:
        raise ConstructionError(f"{what}: {exc}") from exc
    return sc


def _require_interval(c: EdgeColoring, name: str) -> None:
    cert = verify_interval(c)
    if not cert:
        raise ContractError(f"{name} must be a valid interval coloring ({cert.verdict} {cert.witness})")


def _require_regular_connected(h: Graph) -> int:
    regular, r = is_regular(h)
    if not regular or r is None or r < 1:
        raise ParameterError("second factor must be a regular graph with at least one edge")
    if not h.is_connected():
        raise ParameterError("second factor must be connected")
    return r


# -- product liftings ----------------------------------------------------------


def product_max_coloring(alpha: EdgeColoring, beta: EdgeColoring) -> EdgeColoring:
    """Interval (t_G + t_H + r)-coloring of G x H from an interval coloring of
    connected G and one of a connected r-regular H.

    Each G-fiber copy of H is shifted to start right below that vertex's own
    colors; the copy at one designated vertex carrying the top color t_G is
    instead shifted above everything, and the G-edges sit in between, offset
    by the top color of the H-endpoint.
    """
    _require_interval(alpha, "first factor coloring")
    _require_interval(beta, "second factor coloring")
    g, h = alpha.graph, beta.graph
    if not g.is_connected():
        raise ParameterError("first factor must be connected")
    r = _require_regular_connected(h)
    t_g, t_h = alpha.t, beta.t

    smin_a = {u: alpha.spectrum(u).min_color for u in g.vertices}
    smax_a = {u: alpha.spectrum(u).max_color for u in g.vertices}
    smax_b = {v: beta.spectrum(v).max_color for v in h.vertices}
    top = min((u for u in g.vertices if smax_a[u] == t_g), key=label_key)

    colors = {}
    for u in g.vertices:
        if u == top:
            offset = smax_a[u] + r
        else:
            offset = smin_a[u] - 1
        for x, y in h.edges:
            colors[((u, x), (u, y))] = beta.color(x, y) + offset
    for x, y in g.edges:
        for v in h.vertices:
            colors[((x, v), (y, v))] = alpha.color(x, y) + smax_b[v]

    product = cartesian_product(g, h)
    return _checked(EdgeColoring(product, t_g + t_h + r, colors), "product lifting")


def separable_product_coloring(sc: SeparableColoring, beta: EdgeColoring) -> EdgeColoring:
    """Interval (t_G + t_H + ecc(root) * r)-coloring of G x H from a separable
    coloring of G and an interval coloring of a connected r-regular H.

    H-fibers climb by r per level on top of each vertex's root-side colors;
    G-edges in layer i are offset by the H-endpoint's top color plus (i-1) * r.
    At the root itself the fiber keeps the original H colors (the root has no
    root-side colors; its offset is taken as 0).
    """
    sc.validate()
    _require_interval(beta, "second factor coloring")
    alpha = sc.coloring
    g, h = alpha.graph, beta.graph
    r = _require_regular_connected(h)

    ld = level_decomposition(g, sc.root)
    eps = ld.eccentricity
    max_lower = {}
    for u in g.vertices:
        if u == sc.root:
            max_lower[u] = 0
        else:
            max_lower[u] = split_spectrum(alpha, ld, u).max_lower
    smax_b = {v: beta.spectrum(v).max_color for v in h.vertices}

    colors = {}
    for u in g.vertices:
        i = ld.level_of(u)
        base = max_lower[u] + i * r
        for x, y in h.edges:
            colors[((u, x), (u, y))] = beta.color(x, y) + base
    for a, b in g.edges:
        i = ld.layer_of(a, b)
        for v in h.vertices:
            colors[((a, v), (b, v))] = alpha.color(a, b) + smax_b[v] + i * r - r

    product = cartesian_product(g, h)
    return _checked(
        EdgeColoring(product, sc.t + beta.t + eps * r, colors), "separable product lifting"
    )


# -- separable family colorings -------------------------------------------------


def cycle_separable(n: int) -> SeparableColoring:
    """Separable interval (n+1)-coloring of the even cycle C_{2n}, rooted at
    vertex 0 with the antipodal vertex n as far witness: the two arcs carry
    1..n and 2..n+1."""
    if n < 2:
        raise ParameterError("even cycle coloring needs n >= 2 (cycle length 2n)")
    g = cycle(2 * n)
    colors = {edge_key(0, 1): 1, edge_key(0, 2 * n - 1): 2}
    for i in range(1, n - 1):
        colors[edge_key(i, i + 1)] = i + 1
        colors[edge_key(2 * n - i, 2 * n - i - 1)] = i + 2
    colors[edge_key(n - 1, n)] = n
    colors[edge_key(n + 1, n)] = n + 1
    sc = SeparableColoring(EdgeColoring(g, n + 1, colors), root=0, far_witness=n)
    return _checked_separable(sc, "even cycle coloring")


def caterpillar_separable(*leaf_counts: int) -> SeparableColoring:
    """Separable interval coloring of a caterpillar using all |E| colors,
    rooted at the spine end 0; colors grow along the spine, each spine
    vertex's leaves filling the gap before its outgoing spine edge."""
    ks = leaf_counts
    g = caterpillar(*ks)
    n = len(ks) + 1
    leaves = caterpillar_leaf_labels(*ks)
    colors = {}
    for i in range(n):
        colors[edge_key(i, i + 1)] = sum(ks[:i]) + i + 1
    for i in range(1, n):
        for j, leaf in enumerate(leaves[i], start=1):
            colors[edge_key(i, leaf)] = sum(ks[: i - 1]) + i + j
    t = n + sum(ks)
    sc = SeparableColoring(EdgeColoring(g, t, colors), root=0, far_witness=n)
    return _checked_separable(sc, "caterpillar coloring")


def complete_bipartite_separable(m: int, n: int) -> SeparableColoring:
    """Separable interval (m+n-1)-coloring of K_{m,n}: the edge between the
    i-th left and j-th right vertex gets color i+j-1.

    Rooted at the first left vertex when m >= 2 (eccentricity 2); for stars
    (m = 1 < n) the root moves to the first leaf so the root still realizes
    the diameter.
    """
    if m < 1 or n < 1:
        raise ParameterError("complete bipartite coloring needs m, n >= 1")
    g = complete_bipartite(m, n)
    colors = {}
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            colors[edge_key(i - 1, m + j - 1)] = i + j - 1
    if m >= 2:
        root, far = 0, m - 1
    elif n >= 2:
        root, far = m, m + n - 1
    else:
        root, far = 0, 1
    sc = SeparableColoring(EdgeColoring(g, m + n - 1, colors), root=root, far_witness=far)
    return _checked_separable(sc, "complete bipartite coloring")


def hypercube_max_separable(n: int) -> SeparableColoring:
    """Separable interval n(n+1)/2-coloring of Q_n, built by repeatedly
    lifting through Q_k = Q_{k-1} x K_2 from the one-edge base.

    Separability of each lifted coloring with respect to the all-zeros vertex
    is not taken on faith: it is re-verified after every step, and a failure
    aborts with a ConstructionError.
    """
    if n < 1:
        raise ParameterError("hypercube coloring needs n >= 1")
    base = SeparableColoring(
        EdgeColoring(hypercube(1), 1, {("0", "1"): 1}), root="0", far_witness="1"
    )
    sc = _checked_separable(base, "hypercube coloring base")
    k2 = complete(2)
    beta = EdgeColoring(k2, 1, {(0, 1): 1})
    for k in range(2, n + 1):
        lifted = separable_product_coloring(sc, beta)
        mapping = {(b, j): b + str(j) for (b, j) in lifted.graph.vertices}
        coloring = relabel_coloring(lifted, mapping)
        root = "0" * k
        far = "1" * k
        if coloring.t not in coloring.spectrum(far).colors:
            candidates = [
                v
                for v in coloring.graph.vertices
                if coloring.graph.bfs(root)[v] == k and coloring.t in coloring.spectrum(v).colors
            ]
            if not candidates:
                raise ConstructionError(
                    f"hypercube lifting step {k}: no far witness carries color {coloring.t}"
                )
            far = min(candidates, key=label_key)
        sc = _checked_separable(
            SeparableColoring(coloring, root, far), f"hypercube lifting step {k}"
        )
    if sc.t != n * (n + 1) // 2:
        raise ConstructionError(f"hypercube coloring palette {sc.t} != {n * (n + 1) // 2}")
    return sc


# -- Fibonacci cube colorings ----------------------------------------------------


def _vertex_extremes(n: int, table: dict) -> tuple[dict, dict]:
    """Per-vertex smallest and largest incident colors of a coloring table of
    the n-bit Fibonacci cube."""
    smin: dict = {}
    smax: dict = {}
    for (u, v), c in table.items():
        for w in (u, v):
            if w not in smin or c < smin[w]:
                smin[w] = c
            if w not in smax or c > smax[w]:
                smax[w] = c
    for v in fibonacci_strings(n):
        if v not in smin:
            raise ConstructionError(f"fibonacci coloring table misses vertex {v}")
    return smin, smax


def _fib_extend(tables: dict[int, dict], k: int, what: str) -> dict:
    """One recursion step: embed the (k-1)- and (k-2)-cube colorings into the
    0- and 10-prefixed blocks and color the block-joining matching from the
    smaller block's vertex extremes.

    Odd k shifts both blocks up by one and matches at each vertex's smallest
    color; even k shifts only the small block and matches two above each
    vertex's largest color.  The step asserts the alignment this relies on:
    matched vertices agree on their smallest colors (odd k), or the big-block
    copy tops out exactly one higher (even k).
    """
    odd = k % 2 == 1
    small = tables[k - 2]
    big = tables[k - 1]
    out = {}
    for (a, b), c in small.items():
        out[edge_key("10" + a, "10" + b)] = c + 1
    for (a, b), c in big.items():
        out[edge_key("0" + a, "0" + b)] = c + (1 if odd else 0)
    smin_s, smax_s = _vertex_extremes(k - 2, small)
    smin_b, smax_b = _vertex_extremes(k - 1, big)
    for x in fibonacci_strings(k - 2):
        if odd:
            if smin_s[x] != smin_b["0" + x]:
                raise ConstructionError(
                    f"{what} step {k}: matched vertices disagree on smallest color at {x}"
                )
            out[edge_key("10" + x, "00" + x)] = smin_s[x]
        else:
            if smax_s[x] + 1 != smax_b["0" + x]:
                raise ConstructionError(
                    f"{what} step {k}: blocks misaligned on largest color at {x}"
                )
            out[edge_key("10" + x, "00" + x)] = smax_s[x] + 2
    return out


_FIB_PLUS_BASE_3 = {
    ("100", "101"): 1,
    ("001", "101"): 2,
    ("000", "100"): 2,
    ("000", "001"): 3,
    ("000", "010"): 4,
}

_FIB_PLUS_BASE_4 = {
    ("0100", "0101"): 1,
    ("0001", "0101"): 2,
    ("0000", "0100"): 2,
    ("0000", "0001"): 3,
    ("0000", "0010"): 4,
    ("1000", "1001"): 3,
    ("1000", "1010"): 4,
    ("0001", "1001"): 4,
    ("0000", "1000"): 5,
    ("0010", "1010"): 5,
}


def fibonacci_min_coloring(n: int) -> EdgeColoring:
    """Interval n-coloring of the n-bit Fibonacci cube (the fewest colors
    possible, since the all-zeros vertex has degree n)."""
    if n < 1:
        raise ParameterError("fibonacci coloring needs n >= 1")
    tables: dict[int, dict] = {1: {("0", "1"): 1}, 2: {("00", "01"): 1, ("00", "10"): 2}}
    for k in range(3, n + 1):
        tables[k] = _fib_extend(tables, k, "fibonacci minimum coloring")
    return _checked(
        EdgeColoring(fibonacci_cube(n), n, tables[n]), "fibonacci minimum coloring"
    )


def fibonacci_plus_coloring(n: int) -> EdgeColoring:
    """Interval (n+1)-coloring of the n-bit Fibonacci cube, n >= 3."""
    if n < 3:
        raise ParameterError("the (n+1)-palette fibonacci coloring needs n >= 3")
    tables: dict[int, dict] = {3: dict(_FIB_PLUS_BASE_3), 4: dict(_FIB_PLUS_BASE_4)}
    for k in range(5, n + 1):
        tables[k] = _fib_extend(tables, k, "fibonacci wide coloring")
    return _checked(
        EdgeColoring(fibonacci_cube(n), n + 1, tables[n]), "fibonacci wide coloring"
    )
