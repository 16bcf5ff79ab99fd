"""Exact search: spectra, witnesses, pruning soundness, chromatic index."""

import itertools

import pytest

from intercol import (
    ConnectivityError,
    EdgeColoring,
    NotColorable,
    Undecided,
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
    torus,
    verify_interval,
    verify_interval_local,
)
from intercol import oracle
from intercol.bounds import ub_hypercube


def brute_force_feasible(g, t_range):
    """Reference answer: enumerate all assignments and filter with the
    verifier.  Only viable for a handful of edges."""
    feasible = set()
    edges = list(g.edges)
    for t in t_range:
        for colors in itertools.product(range(1, t + 1), repeat=len(edges)):
            c = EdgeColoring(g, t, dict(zip(edges, colors)))
            if verify_interval(c).is_valid:
                feasible.add(t)
                break
    return feasible


def test_triangle_is_never_colorable():
    g = cycle(3)
    for t in (2, 3):
        res = oracle.search(g, t)
        assert res.status == oracle.EXHAUSTED
    spectrum = oracle.feasible_spectrum(g)
    assert spectrum.feasible == () and spectrum.complete
    assert spectrum.is_colorable is False
    with pytest.raises(NotColorable):
        spectrum.min_colors()


def test_hypercube_three_spectrum():
    g = hypercube(3)
    assert oracle.search(g, 6).status == oracle.WITNESS
    assert oracle.search(g, 7).status == oracle.EXHAUSTED
    assert oracle.feasible_spectrum(g).feasible == (3, 4, 5, 6)


def test_complete_bipartite_spectra():
    assert oracle.search(complete_bipartite(2, 3), 3).status == oracle.EXHAUSTED
    assert oracle.search(complete_bipartite(2, 3), 4).status == oracle.WITNESS
    assert oracle.feasible_spectrum(complete_bipartite(2, 3)).feasible == (4,)


def test_small_spectra_endpoints():
    s = oracle.feasible_spectrum(cycle(6))
    assert s.feasible == (2, 3, 4)
    assert s.min_colors() == 2 and s.max_colors() == 4

    s = oracle.feasible_spectrum(complete(4))
    assert s.min_colors() == 3 and s.max_colors() == 4

    s = oracle.feasible_spectrum(fibonacci_cube(3))
    assert s.feasible == (3, 4)


def test_fibonacci_four_spectrum():
    g = fibonacci_cube(4)
    fast = oracle.feasible_spectrum(g)
    assert fast.complete
    assert fast.feasible == (4, 5, 6)
    assert fast.checked == (4, 7)


def test_search_rejects_disconnected():
    from intercol import Graph

    with pytest.raises(ConnectivityError):
        oracle.search(Graph([0, 1, 2, 3], [(0, 1), (2, 3)]), 2)


def test_search_trivial_rejections():
    g = cycle(4)
    assert oracle.search(g, 1).status == oracle.EXHAUSTED  # below max degree
    assert oracle.search(g, 5).status == oracle.EXHAUSTED  # above edge count


PRUNE_POOL = [
    path(5),
    cycle(5),
    cycle(6),
    cycle(8),
    complete(4),
    complete_bipartite(2, 3),
    butterfly(),
    caterpillar(1, 1),
    fibonacci_cube(3),
    caterpillar(3),
]


def test_pruned_and_unpruned_feasible_sets_agree():
    for g in PRUNE_POOL:
        assert g.num_edges <= 8
        # range covers the whole feasible set plus at least one exhausted t
        hi = min(g.num_edges, g.max_degree() + 4)
        pruned = {t for t in range(1, hi + 1) if oracle.search(g, t).status == oracle.WITNESS}
        unpruned = {
            t for t in range(1, hi + 1) if oracle.search(g, t, pruned=False).status == oracle.WITNESS
        }
        assert pruned == unpruned
        # the range reaches past the feasible boundary unless the whole
        # palette range up to |E| is feasible (trees)
        if pruned:
            assert max(pruned) + 1 <= hi or max(pruned) == g.num_edges


def test_oracle_matches_independent_enumeration():
    for g in (path(4), cycle(4), cycle(5), caterpillar(2), complete_bipartite(1, 3)):
        assert g.num_edges <= 5
        hi = g.num_edges
        by_search = {
            t for t in range(1, hi + 1) if oracle.search(g, t).status == oracle.WITNESS
        }
        assert by_search == brute_force_feasible(g, range(1, hi + 1))


def test_witnesses_are_sound_and_deterministic():
    for g in (cycle(6), complete(4), hypercube(3), butterfly()):
        s = oracle.feasible_spectrum(g)
        for t, witness in s.witnesses.items():
            assert witness.t == t
            assert verify_interval(witness).is_valid
            assert verify_interval_local(witness).is_valid
        again = oracle.feasible_spectrum(g)
        assert {t: dict(w.items()) for t, w in s.witnesses.items()} == {
            t: dict(w.items()) for t, w in again.witnesses.items()
        }


def test_palette_symmetry_flag_preserves_feasible_sets():
    for g in PRUNE_POOL[:6]:
        base = oracle.feasible_spectrum(g)
        sym = oracle.feasible_spectrum(g, break_palette_symmetry=True)
        assert base.feasible == sym.feasible


def test_budget_exceeded_is_reported_not_decided():
    g = hypercube(3)
    res = oracle.search(g, 6, budget=5)
    assert res.status == oracle.BUDGET_EXCEEDED
    assert res.nodes == 6
    s = oracle.feasible_spectrum(g, budget=5)
    assert not s.complete
    assert s.is_colorable is None
    with pytest.raises(Undecided):
        s.max_colors()
    with pytest.raises(Undecided):
        oracle.max_coloring(g, budget=5)


def test_min_and_max_coloring_endpoints():
    g = cycle(8)
    assert oracle.min_coloring(g).t == 2
    assert oracle.max_coloring(g).t == 5
    with pytest.raises(NotColorable):
        oracle.max_coloring(cycle(3))


def test_exact_palettes_with_justified_cutoff():
    # searching above the proven span bound is pointless; with the cutoff the
    # known hypercube maximum is attained exactly
    assert oracle.exact_W(hypercube(4), t_max=ub_hypercube(4)) == 10
    assert oracle.exact_w(hamming(2, 3)) == 3


def test_chromatic_index_values():
    assert oracle.chromatic_index(cycle(6)) == 2
    assert oracle.chromatic_index(cycle(5)) == 3
    assert oracle.chromatic_index(petersen()) == 4
    assert oracle.chromatic_index(torus(5, 5)) == 5
    assert oracle.chromatic_index(complete(4)) == 3
    assert oracle.chromatic_index(complete_bipartite(3, 3)) == 3
    assert oracle.chromatic_index(path(1)) == 0


def test_spectrum_parallel_workers_smoke():
    s1 = oracle.feasible_spectrum(cycle(6))
    try:
        s2 = oracle.feasible_spectrum(cycle(6), workers=2)
    except (OSError, PermissionError):
        pytest.skip("process pools unavailable in this environment")
    assert s1.feasible == s2.feasible
    assert s1.statuses == s2.statuses


def test_spectrum_honours_explicit_range():
    s = oracle.feasible_spectrum(cycle(6), t_max=3)
    assert s.checked == (2, 3)
    assert s.feasible == (2, 3)
    assert set(s.statuses) == {2, 3}
