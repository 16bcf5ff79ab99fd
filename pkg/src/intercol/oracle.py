"""Exhaustive search for interval t-colorings of small graphs.

Decides, for one palette size t at a time, whether an interval t-coloring
exists; sweeping t over [max degree, upper cutoff] yields the exact feasible
set together with a witness coloring per feasible t, hence exact minimum and
maximum palette sizes.  This is the reference answer generator for everything
else in the package.

Search design: edges are colored in breadth-first layer order (ties broken by
canonical edge order) with colors tried ascending, so identical inputs always
yield identical witnesses.  Each vertex's final spectrum must be exactly
deg(v) consecutive colors inside [1, t]; the search maintains per-vertex
min/max/count and prunes when a partial spectrum can no longer extend to such
a block (window prune) or when the colors missing inside a vertex's current
span outnumber its uncolored edges (hole prune).  "Every color used" is
enforced by a remaining-edges count prune, a coverage prune (every missing
color must still fit some uncolored edge through both endpoint windows), and
a final check.  All pruning is conservative: disabling it changes node
counts, never feasible sets.

Budget exhaustion is a first-class result, never treated as infeasibility.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .coloring import EdgeColoring, verify_interval
from .errors import ConnectivityError, IntercolError, NotColorable, Undecided
from .graphs import Graph, diameter, is_bipartite, is_triangle_free, level_decomposition

DEFAULT_BUDGET = 10**8

WITNESS = "witness"
EXHAUSTED = "exhausted"
BUDGET_EXCEEDED = "budget_exceeded"


class _BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class SearchResult:
    status: str
    witness: EdgeColoring | None
    nodes: int

    def __bool__(self) -> bool:
        return self.status == WITNESS


def search_order(g: Graph) -> list:
    """Edges sorted by breadth-first layer from the canonical first vertex,
    canonical order within a layer."""
    ld = level_decomposition(g, g.vertices[0])
    return [e for layer in ld.edge_layers for e in layer]


def search(
    g: Graph,
    t: int,
    budget: int = DEFAULT_BUDGET,
    pruned: bool = True,
    break_palette_symmetry: bool = False,
) -> SearchResult:
    """Find an interval t-coloring of a connected graph or prove none exists.

    ``exhausted`` means a complete search; ``budget_exceeded`` carries the
    node count and decides nothing.  With ``break_palette_symmetry`` the first
    edge only tries colors <= ceil(t/2), sound for every graph because
    c -> t+1-c maps interval t-colorings onto interval t-colorings; off by
    default so completeness needs no argument at all.
    """
    if not g.is_connected():
        raise ConnectivityError("interval coloring search requires a connected graph")
    m = g.num_edges
    if m == 0 or t < g.max_degree() or t > m:
        return SearchResult(EXHAUSTED, None, 0)

    order = search_order(g)
    idx = {v: i for i, v in enumerate(g.vertices)}
    eu = [idx[u] for u, _ in order]
    ev = [idx[v] for _, v in order]
    deg = [g.degree(v) for v in g.vertices]

    nv = g.num_vertices
    used = [0] * nv
    cnt = [0] * nv
    mn = [0] * nv
    mx = [0] * nv
    color_count = [0] * (t + 1)
    assignment = [0] * m
    state = {"nodes": 0, "distinct": 0}
    first_edge_limit = (t + 1) // 2 if break_palette_symmetry else t
    full_mask = (1 << t) - 1
    # colors an edge at this vertex could still take: the window a block of
    # deg(v) consecutive colors containing the partial spectrum may occupy,
    # minus the colors already present
    avail = [full_mask] * nv
    missing_mask = full_mask

    def refresh_avail(w: int) -> None:
        if cnt[w] == 0:
            avail[w] = full_mask
            return
        lo = mx[w] - deg[w] + 1
        if lo < 1:
            lo = 1
        hi = mn[w] + deg[w] - 1
        if hi > t:
            hi = t
        avail[w] = ((1 << hi) - (1 << (lo - 1))) & ~used[w]

    def extend(ei: int) -> bool:
        nonlocal missing_mask
        if ei == m:
            if state["distinct"] != t:
                return False
            if not pruned:
                for w in range(nv):
                    if deg[w] and mx[w] - mn[w] + 1 != cnt[w]:
                        return False
            return True
        u, v = eu[ei], ev[ei]
        lo, hi = 1, t
        if pruned:
            if cnt[u]:
                lo = max(lo, mx[u] - deg[u] + 1)
                hi = min(hi, mn[u] + deg[u] - 1)
            if cnt[v]:
                lo = max(lo, mx[v] - deg[v] + 1)
                hi = min(hi, mn[v] + deg[v] - 1)
        if ei == 0:
            hi = min(hi, first_edge_limit)
        both = used[u] | used[v]
        for c in range(lo, hi + 1):
            if (both >> (c - 1)) & 1:
                continue
            state["nodes"] += 1
            if state["nodes"] > budget:
                raise _BudgetExceeded
            pu_mn, pu_mx, pv_mn, pv_mx = mn[u], mx[u], mn[v], mx[v]
            bit = 1 << (c - 1)
            used[u] |= bit
            used[v] |= bit
            for w in (u, v):
                if cnt[w] == 0:
                    mn[w] = mx[w] = c
                else:
                    if c < mn[w]:
                        mn[w] = c
                    if c > mx[w]:
                        mx[w] = c
                cnt[w] += 1
            color_count[c] += 1
            if color_count[c] == 1:
                state["distinct"] += 1
                missing_mask &= ~bit
            assignment[ei] = c
            ok = True
            if pruned:
                # holes inside the span must fit into the uncolored edges
                if mx[u] - mn[u] + 1 - cnt[u] > deg[u] - cnt[u]:
                    ok = False
                elif mx[v] - mn[v] + 1 - cnt[v] > deg[v] - cnt[v]:
                    ok = False
                elif t - state["distinct"] > m - ei - 1:
                    ok = False
                if ok:
                    refresh_avail(u)
                    refresh_avail(v)
                    if missing_mask:
                        # every missing color must still fit some uncolored
                        # edge through both endpoint windows
                        uncovered = missing_mask
                        for fj in range(ei + 1, m):
                            uncovered &= ~(avail[eu[fj]] & avail[ev[fj]])
                            if not uncovered:
                                break
                        if uncovered:
                            ok = False
            if ok and extend(ei + 1):
                return True
            used[u] ^= bit
            used[v] ^= bit
            cnt[u] -= 1
            cnt[v] -= 1
            mn[u], mx[u] = pu_mn, pu_mx
            mn[v], mx[v] = pv_mn, pv_mx
            if pruned:
                refresh_avail(u)
                refresh_avail(v)
            color_count[c] -= 1
            if color_count[c] == 0:
                state["distinct"] -= 1
                missing_mask |= bit
        return False

    try:
        found = extend(0)
    except _BudgetExceeded:
        return SearchResult(BUDGET_EXCEEDED, None, state["nodes"])
    if not found:
        return SearchResult(EXHAUSTED, None, state["nodes"])
    witness = EdgeColoring(g, t, {order[i]: assignment[i] for i in range(m)})
    cert = verify_interval(witness)
    if not cert:
        raise IntercolError(f"internal error: search witness fails verification ({cert.verdict})")
    return SearchResult(WITNESS, witness, state["nodes"])


def default_palette_ceiling(g: Graph) -> int:
    """Largest t worth searching: the edge count, the diameter-based upper
    bounds (general and bipartite), and |V|-1 for triangle-free graphs."""
    from .bounds import ub_asratian_kamalian, ub_triangle_free

    d = diameter(g)
    delta = g.max_degree()
    cutoff = min(g.num_edges, ub_asratian_kamalian(d, delta))
    if is_bipartite(g):
        cutoff = min(cutoff, ub_asratian_kamalian(d, delta, bipartite=True))
    if is_triangle_free(g):
        cutoff = min(cutoff, ub_triangle_free(g.num_vertices))
    return cutoff


@dataclass
class FeasibleSpectrum:
    """Exact feasible palette sizes of a graph with one witness each.

    ``checked`` is the closed t-range searched; ``statuses`` records, per t,
    witness / exhausted / budget_exceeded.  The feasible set is reported
    exactly as found: no interpolation between its minimum and maximum is ever
    assumed.
    """

    graph: Graph
    checked: tuple[int, int]
    statuses: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    nodes: int = 0

    @property
    def feasible(self) -> tuple[int, ...]:
        return tuple(sorted(self.witnesses))

    @property
    def complete(self) -> bool:
        return all(s != BUDGET_EXCEEDED for s in self.statuses.values())

    @property
    def is_colorable(self) -> bool | None:
        if self.witnesses:
            return True
        return False if self.complete else None

    def min_colors(self) -> int:
        self._require_decided()
        return self.feasible[0]

    def max_colors(self) -> int:
        self._require_decided()
        return self.feasible[-1]

    def _require_decided(self):
        if not self.complete:
            raise Undecided(f"search budget ran out for t in {self.checked}")
        if not self.witnesses:
            raise NotColorable("no interval coloring exists for any palette size")


def _search_task(args):
    g, t, budget, symmetry = args
    return t, search(g, t, budget=budget, break_palette_symmetry=symmetry)


def feasible_spectrum(
    g: Graph,
    t_max: int | None = None,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    break_palette_symmetry: bool = False,
) -> FeasibleSpectrum:
    """Run the search for every t in [max degree, t_max] (default cutoff from
    default_palette_ceiling).  Distinct t values are independent, so they can
    run in parallel worker processes; results are deterministic either way.
    """
    if t_max is None:
        t_max = default_palette_ceiling(g)
    lo = max(1, g.max_degree())
    spectrum = FeasibleSpectrum(graph=g, checked=(lo, t_max))
    ts = list(range(lo, t_max + 1))
    if workers > 1 and len(ts) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_search_task, [(g, t, budget, break_palette_symmetry) for t in ts]))
    else:
        results = [_search_task((g, t, budget, break_palette_symmetry)) for t in ts]
    for t, res in results:
        spectrum.statuses[t] = res.status
        spectrum.nodes += res.nodes
        if res.status == WITNESS:
            spectrum.witnesses[t] = res.witness
    return spectrum


def exact_w(g: Graph, t_max: int | None = None, budget: int = DEFAULT_BUDGET) -> int:
    """Exact minimum palette size; NotColorable / Undecided when appropriate."""
    return feasible_spectrum(g, t_max=t_max, budget=budget).min_colors()


def exact_W(g: Graph, t_max: int | None = None, budget: int = DEFAULT_BUDGET) -> int:
    """Exact maximum palette size; NotColorable / Undecided when appropriate."""
    return feasible_spectrum(g, t_max=t_max, budget=budget).max_colors()


def max_coloring(g: Graph, t_max: int | None = None, budget: int = DEFAULT_BUDGET) -> EdgeColoring:
    """Witness using the maximum feasible number of colors, found by scanning
    t downward from the cutoff (each t above the answer is fully exhausted)."""
    if t_max is None:
        t_max = default_palette_ceiling(g)
    lo = max(1, g.max_degree())
    for t in range(t_max, lo - 1, -1):
        res = search(g, t, budget=budget)
        if res.status == BUDGET_EXCEEDED:
            raise Undecided(f"search budget ran out at t={t} after {res.nodes} nodes")
        if res:
            return res.witness
    raise NotColorable("no interval coloring exists for any palette size")


def min_coloring(g: Graph, t_max: int | None = None, budget: int = DEFAULT_BUDGET) -> EdgeColoring:
    """Witness using the minimum feasible number of colors."""
    if t_max is None:
        t_max = default_palette_ceiling(g)
    for t in range(max(1, g.max_degree()), t_max + 1):
        res = search(g, t, budget=budget)
        if res.status == BUDGET_EXCEEDED:
            raise Undecided(f"search budget ran out at t={t} after {res.nodes} nodes")
        if res:
            return res.witness
    raise NotColorable("no interval coloring exists for any palette size")


# -- plain proper edge coloring (chromatic index) -----------------------------


def proper_coloring_search(g: Graph, t: int, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Backtracking search for a proper t-edge-coloring (no interval or
    surjectivity constraints).  A matching-size bound rejects immediately when
    t * floor(|V|/2) < |E|, since each color class is a matching."""
    m = g.num_edges
    if m == 0:
        if t < 1:
            return SearchResult(EXHAUSTED, None, 0)
        return SearchResult(WITNESS, EdgeColoring(g, t, {}), 0)
    if t < g.max_degree() or t * (g.num_vertices // 2) < m:
        return SearchResult(EXHAUSTED, None, 0)
    order = search_order(g) if g.is_connected() else list(g.edges)
    idx = {v: i for i, v in enumerate(g.vertices)}
    eu = [idx[u] for u, _ in order]
    ev = [idx[v] for _, v in order]
    nv = g.num_vertices
    used = [0] * nv
    assignment = [0] * m
    state = {"nodes": 0}

    def extend(ei: int) -> bool:
        if ei == m:
            return True
        u, v = eu[ei], ev[ei]
        both = used[u] | used[v]
        for c in range(1, t + 1):
            bit = 1 << (c - 1)
            if both & bit:
                continue
            state["nodes"] += 1
            if state["nodes"] > budget:
                raise _BudgetExceeded
            used[u] |= bit
            used[v] |= bit
            assignment[ei] = c
            if extend(ei + 1):
                return True
            used[u] ^= bit
            used[v] ^= bit
        return False

    try:
        found = extend(0)
    except _BudgetExceeded:
        return SearchResult(BUDGET_EXCEEDED, None, state["nodes"])
    if not found:
        return SearchResult(EXHAUSTED, None, state["nodes"])
    witness = EdgeColoring(g, t, {order[i]: assignment[i] for i in range(m)})
    for v in g.vertices:
        colors = [witness.color(v, w) for w in g.neighbors(v)]
        if len(set(colors)) != len(colors):
            raise IntercolError("internal error: proper-coloring witness is improper")
    return SearchResult(WITNESS, witness, state["nodes"])


def chromatic_index(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Exact chromatic index: try the max degree, then one more (one of the
    two always works for simple graphs).  Raises Undecided on budget."""
    if g.num_edges == 0:
        return 0
    delta = g.max_degree()
    res = proper_coloring_search(g, delta, budget=budget)
    if res.status == BUDGET_EXCEEDED:
        raise Undecided(f"chromatic index search budget ran out after {res.nodes} nodes")
    if res:
        return delta
    res = proper_coloring_search(g, delta + 1, budget=budget)
    if res.status == BUDGET_EXCEEDED:
        raise Undecided(f"chromatic index search budget ran out after {res.nodes} nodes")
    if not res:
        raise IntercolError("internal error: no proper coloring with max degree + 1 colors")
    return delta + 1
