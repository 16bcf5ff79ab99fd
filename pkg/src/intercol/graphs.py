"""Simple undirected graphs with structured vertex labels.

Labels are integers (simple families), strings of 0/1 characters (hypercubes
and Fibonacci cubes) or tuples of labels (Cartesian products).  Everything in
this module is a pure function over immutable graph values: generators for the
graph families used throughout the package, Cartesian products, breadth-first
metrics (distances, eccentricity, diameters), level decompositions rooted at a
vertex, and the structural predicates the bound formulas depend on.

Vertices and edges are kept in a canonical deterministic order so that every
downstream construction and the exact-search oracle are reproducible
run-to-run.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import ConnectivityError, ParameterError, UnknownVertexError

Label = object  # int | str | tuple of labels
Edge = tuple

#: all-pairs tables are materialised only below this size; larger graphs use
#: on-demand per-source BFS
DENSE_DISTANCE_LIMIT = 4096


def label_key(label):
    """Sort key giving a total order over mixed label types.

    Integers sort before strings, strings before tuples; tuples compare
    componentwise by the same rule.
    """
    if isinstance(label, bool):
        raise ParameterError(f"unsupported vertex label: {label!r}")
    if isinstance(label, int):
        return (0, label)
    if isinstance(label, str):
        return (1, label)
    if isinstance(label, tuple):
        return (2, tuple(label_key(part) for part in label))
    raise ParameterError(f"unsupported vertex label: {label!r}")


def edge_key(u, v) -> Edge:
    """Canonical (endpoint-sorted) form of an undirected edge."""
    if label_key(u) <= label_key(v):
        return (u, v)
    return (v, u)


class Graph:
    """Immutable simple graph: no loops, no parallel edges.

    ``vertices`` and ``edges`` are tuples in canonical label order; adjacency
    is precomputed.  Instances may be shared freely across threads.
    """

    __slots__ = ("vertices", "edges", "_adj", "_vset", "_hash", "_bfs_cache", "_connected")

    def __init__(self, vertices: Iterable, edges: Iterable[Edge]):
        vs = sorted(set(vertices), key=label_key)
        vset = frozenset(vs)
        canon = set()
        for u, v in edges:
            if u == v:
                raise ParameterError(f"loop at vertex {u!r}")
            if u not in vset or v not in vset:
                raise ParameterError(f"edge ({u!r}, {v!r}) has an endpoint outside the vertex set")
            canon.add(edge_key(u, v))
        self.vertices = tuple(vs)
        self.edges = tuple(sorted(canon, key=lambda e: (label_key(e[0]), label_key(e[1]))))
        adj: dict = {v: [] for v in vs}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = {v: tuple(sorted(ns, key=label_key)) for v, ns in adj.items()}
        self._vset = vset
        self._hash = hash((self.vertices, self.edges))
        self._bfs_cache: dict = {}
        self._connected = None

    # -- basic queries -----------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_vertex(self, v) -> bool:
        return v in self._vset

    def has_edge(self, u, v) -> bool:
        return u in self._vset and v in self._adj[u]

    def neighbors(self, v) -> tuple:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(self._adj[v]) for v in self.vertices)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_connected(self) -> bool:
        if self._connected is None:
            if not self.vertices:
                self._connected = True
            else:
                self._connected = len(self.bfs(self.vertices[0])) == self.num_vertices
        return self._connected

    def bfs(self, source) -> dict:
        """Distances from ``source`` to every reachable vertex (cached)."""
        if source not in self._vset:
            raise UnknownVertexError(source)
        cached = self._bfs_cache.get(source)
        if cached is not None:
            return cached
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du = dist[u]
            for w in self._adj[u]:
                if w not in dist:
                    dist[w] = du + 1
                    queue.append(w)
        if len(self._bfs_cache) < DENSE_DISTANCE_LIMIT:
            self._bfs_cache[source] = dist
        return dist

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph({self.num_vertices} vertices, {self.num_edges} edges)"


# -- metrics ---------------------------------------------------------------


def _require_connected(g: Graph):
    if not g.is_connected():
        raise ConnectivityError("operation requires a connected graph")


def distance(g: Graph, u, v) -> int:
    _require_connected(g)
    dist = g.bfs(u)
    if v not in dist:
        raise UnknownVertexError(v)
    return dist[v]


def eccentricity(g: Graph, v) -> int:
    _require_connected(g)
    return max(g.bfs(v).values())


def diameter(g: Graph) -> int:
    _require_connected(g)
    return max(eccentricity(g, v) for v in g.vertices)


def all_pairs_distances(g: Graph) -> dict:
    """Dense distance table ``{u: {v: d(u, v)}}`` for graphs of desk size."""
    _require_connected(g)
    if g.num_vertices > DENSE_DISTANCE_LIMIT:
        raise ParameterError(
            f"dense distance table limited to {DENSE_DISTANCE_LIMIT} vertices; "
            "use distance() for on-demand queries"
        )
    return {v: g.bfs(v) for v in g.vertices}


def vertex_interval(g: Graph, u, v) -> frozenset:
    """All vertices lying on at least one shortest u-v path."""
    _require_connected(g)
    du = g.bfs(u)
    dv = g.bfs(v)
    d = du[v]
    return frozenset(w for w in g.vertices if du[w] + dv[w] == d)


def edge_distance(g: Graph, e: Edge, f: Edge) -> int:
    """Minimum vertex distance over the four endpoint pairs of two edges."""
    _require_connected(g)
    (u1, u2), (v1, v2) = e, f
    d1 = g.bfs(u1)
    d2 = g.bfs(u2)
    return min(d1[v1], d1[v2], d2[v1], d2[v2])


def edge_diameter(g: Graph) -> int:
    """Maximum edge distance over all edge pairs (brute force)."""
    _require_connected(g)
    best = 0
    edges = g.edges
    for i, e in enumerate(edges):
        du = g.bfs(e[0])
        dv = g.bfs(e[1])
        for f in edges[i:]:
            d = min(du[f[0]], du[f[1]], dv[f[0]], dv[f[1]])
            if d > best:
                best = d
    return best


@dataclass(frozen=True)
class LevelDecomposition:
    """Distance classes ``levels[i]`` = vertices at distance i from ``root``,
    together with the edge layers: an edge lands in layer i when its farther
    endpoint sits at level i (so layer i joins levels i-1 and i, or lies
    inside level i).  ``edge_layers[i-1]`` holds layer i, for i = 1..ecc."""

    root: object
    levels: tuple
    edge_layers: tuple
    level: dict = field(repr=False, compare=False)

    @property
    def eccentricity(self) -> int:
        return len(self.levels) - 1

    def level_of(self, v) -> int:
        try:
            return self.level[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def layer_of(self, u, v) -> int:
        return max(self.level_of(u), self.level_of(v))


def level_decomposition(g: Graph, root) -> LevelDecomposition:
    _require_connected(g)
    if not g.has_vertex(root):
        raise UnknownVertexError(root)
    dist = g.bfs(root)
    ecc = max(dist.values())
    levels = [[] for _ in range(ecc + 1)]
    for v in g.vertices:
        levels[dist[v]].append(v)
    layers = [[] for _ in range(ecc)]
    for u, v in g.edges:
        layers[max(dist[u], dist[v]) - 1].append((u, v))
    return LevelDecomposition(
        root=root,
        levels=tuple(tuple(level) for level in levels),
        edge_layers=tuple(tuple(layer) for layer in layers),
        level=dict(dist),
    )


# -- structure predicates ----------------------------------------------------


def is_bipartite(g: Graph) -> bool:
    side: dict = {}
    for start in g.vertices:
        if start in side:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def is_regular(g: Graph) -> tuple[bool, int | None]:
    """(True, degree) when all degrees agree, else (False, None)."""
    degs = set(g.degrees())
    if len(degs) == 1:
        return True, degs.pop()
    return (len(degs) == 0), None


def is_eulerian(g: Graph) -> bool:
    """Connected with every vertex of even degree."""
    return g.is_connected() and all(d % 2 == 0 for d in g.degrees())


def is_triangle_free(g: Graph) -> bool:
    neighbor_sets = {v: set(g.neighbors(v)) for v in g.vertices}
    for u, v in g.edges:
        if neighbor_sets[u] & neighbor_sets[v]:
            return False
    return True


def structure_predicates(g: Graph) -> dict:
    regular, degree = is_regular(g)
    return {
        "is_bipartite": is_bipartite(g),
        "is_regular": regular,
        "regular_degree": degree,
        "is_eulerian": is_eulerian(g),
        "is_triangle_free": is_triangle_free(g),
    }


# -- generators --------------------------------------------------------------


def path(n: int) -> Graph:
    """Path on n vertices 0..n-1."""
    if n < 1:
        raise ParameterError("path needs n >= 1")
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices 0..n-1."""
    if n < 3:
        raise ParameterError("cycle needs n >= 3 (smaller would not be simple)")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ParameterError("complete graph needs n >= 1")
    return Graph(range(n), itertools.combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with one side labelled 0..m-1 and the other m..m+n-1."""
    if m < 1 or n < 1:
        raise ParameterError("complete bipartite graph needs m, n >= 1")
    return Graph(range(m + n), [(i, m + j) for i in range(m) for j in range(n)])


def hypercube(n: int) -> Graph:
    """Q_n on 0/1 strings of length n; edges flip one coordinate."""
    if n < 1:
        raise ParameterError("hypercube needs n >= 1")
    vertices = ["".join(bits) for bits in itertools.product("01", repeat=n)]
    edges = []
    for v in vertices:
        for i in range(n):
            if v[i] == "0":
                edges.append((v, v[:i] + "1" + v[i + 1:]))
    return Graph(vertices, edges)


def fibonacci_strings(n: int) -> list[str]:
    """All 0/1 strings of length n with no two consecutive 1s (MSB first)."""
    if n < 0:
        raise ParameterError("string length must be nonnegative")
    table: list[list[str]] = [[""], ["0", "1"]]
    for k in range(2, n + 1):
        table.append(["0" + s for s in table[k - 1]] + ["10" + s for s in table[k - 2]])
    return table[n]


def fibonacci_cube(n: int) -> Graph:
    """Fibonacci cube: the subgraph of Q_n induced by strings without "11"."""
    if n < 1:
        raise ParameterError("fibonacci cube needs n >= 1")
    vertices = fibonacci_strings(n)
    vset = set(vertices)
    edges = []
    for v in vertices:
        for i in range(n):
            if v[i] == "0":
                w = v[:i] + "1" + v[i + 1:]
                if w in vset:
                    edges.append((v, w))
    return Graph(vertices, edges)


def torus(*sizes: int) -> Graph:
    """Cartesian product of cycles; vertices are coordinate tuples."""
    if not sizes:
        raise ParameterError("torus needs at least one factor")
    for s in sizes:
        if s < 3:
            raise ParameterError(f"torus factor {s} < 3: each factor must be a cycle on >= 3 vertices")
    return product_all([cycle(s) for s in sizes])


def hamming(*sizes: int) -> Graph:
    """Cartesian product of complete graphs; vertices are coordinate tuples."""
    if not sizes:
        raise ParameterError("hamming graph needs at least one factor")
    for s in sizes:
        if s < 1:
            raise ParameterError(f"hamming factor {s} < 1")
    return product_all([complete(s) for s in sizes])


def caterpillar(*leaf_counts: int) -> Graph:
    """Caterpillar tree: spine 0..n (n = len(leaf_counts)+1 edges), with
    leaf_counts[i-1] leaves hanging off spine vertex i, labelled n+1 onward."""
    ks = leaf_counts
    if any(k < 0 for k in ks):
        raise ParameterError("leaf counts must be nonnegative")
    n = len(ks) + 1
    vertices = list(range(n + 1))
    edges = [(i, i + 1) for i in range(n)]
    nxt = n + 1
    for i, k in enumerate(ks, start=1):
        for _ in range(k):
            vertices.append(nxt)
            edges.append((i, nxt))
            nxt += 1
    return Graph(vertices, edges)


def caterpillar_leaf_labels(*leaf_counts: int) -> dict[int, tuple[int, ...]]:
    """Labels of the leaves at each spine vertex, matching caterpillar()."""
    n = len(leaf_counts) + 1
    out = {}
    nxt = n + 1
    for i, k in enumerate(leaf_counts, start=1):
        out[i] = tuple(range(nxt, nxt + k))
        nxt += k
    return out


def butterfly() -> Graph:
    """Two triangles glued at vertex 0."""
    return Graph(range(5), [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(range(10), outer + spokes + inner)


# -- products ----------------------------------------------------------------


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product with pair labels (u, v); edges move along one factor."""
    if not g.vertices or not h.vertices:
        raise ParameterError("cartesian product needs nonempty factors")
    vertices = [(u, v) for u in g.vertices for v in h.vertices]
    edges = []
    for u in g.vertices:
        for x, y in h.edges:
            edges.append(((u, x), (u, y)))
    for x, y in g.edges:
        for v in h.vertices:
            edges.append(((x, v), (y, v)))
    return Graph(vertices, edges)


def product_all(factors: list[Graph]) -> Graph:
    """k-fold Cartesian product with flat k-tuple labels (the left-associative
    flattening of iterated pair products)."""
    if not factors:
        raise ParameterError("product needs at least one factor")
    for g in factors:
        if not g.vertices:
            raise ParameterError("cartesian product needs nonempty factors")
    vertices = list(itertools.product(*(g.vertices for g in factors)))
    edges = []
    for idx, g in enumerate(factors):
        before = [f.vertices for f in factors[:idx]]
        after = [f.vertices for f in factors[idx + 1:]]
        for a, b in g.edges:
            for head in itertools.product(*before):
                for tail in itertools.product(*after):
                    edges.append((head + (a,) + tail, head + (b,) + tail))
    return Graph(vertices, edges)


def relabel(g: Graph, mapping) -> Graph:
    """New graph with vertices renamed by a dict or callable (must be injective)."""
    fn: Callable = mapping.__getitem__ if isinstance(mapping, dict) else mapping
    new_vertices = [fn(v) for v in g.vertices]
    if len(set(new_vertices)) != len(new_vertices):
        raise ParameterError("relabel mapping is not injective")
    return Graph(new_vertices, [(fn(u), fn(v)) for u, v in g.edges])


def gray_pair_relabeling(g: Graph) -> dict:
    """Bijection sending each coordinate of a tuple-labelled torus vertex with
    entries in 0..3 to a 2-bit Gray code (0->00, 1->01, 2->11, 3->10), so a
    T(4,...,4) relabels onto the corresponding hypercube."""
    gray = {0: "00", 1: "01", 2: "11", 3: "10"}
    return {v: "".join(gray[c] for c in v) for v in g.vertices}
