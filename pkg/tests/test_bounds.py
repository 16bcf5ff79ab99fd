"""Bound formulas, obstruction tests, distance-class checks, and reports."""

import random

import pytest

from intercol import ParameterError, butterfly, complete, cycle, hamming, path, petersen, torus
from intercol import oracle
from intercol.bounds import (
    EXACT_W_MIN,
    LOWER_W,
    NOT_COLORABLE,
    UPPER_W,
    Factorization,
    chromatic_index_obstruction,
    eulerian_odd_obstruction,
    eulerian_product_obstruction,
    factor_correction,
    hamming_distance_vector,
    lb_complete_even,
    lb_family,
    lb_hamming,
    lb_hamming_uniform,
    lb_product_general,
    lb_regular_chain,
    lb_regular_pair,
    lb_separable,
    lb_torus_even,
    lb_torus_mixed,
    lb_torus_uniform,
    lb_two_torus_even,
    lb_two_torus_mixed,
    report,
    torus_distance_vector,
    ub_asratian_kamalian,
    ub_distance_class,
    ub_distance_class_bipartite,
    ub_hamming,
    ub_hypercube,
    ub_torus,
    ub_triangle_free,
    verify_D_membership,
)

RNG_SEED = 20240402


def test_product_bound_points():
    assert lb_product_general(4, 1, 1) == 6
    assert lb_product_general(1, 1, 1) == 3
    assert lb_regular_pair(4, 3, 2, 2) == 9
    assert lb_regular_pair(4, 3, 2, 2) == lb_regular_pair(3, 4, 2, 2)
    assert lb_regular_chain([3], [2]) == 3
    assert lb_regular_chain([3, 3, 3], [2, 2, 2]) == 9 + (2 + 4)
    assert lb_separable(5, 1, 4, 1) == 10
    assert lb_separable(4, 3, 0, 2) == 7
    assert lb_separable(6, 3, 3, 2) == 15


def test_regular_chain_equals_pair_reduction():
    rng = random.Random(RNG_SEED)
    for _ in range(20):
        ws = [rng.randint(1, 30) for _ in range(2)]
        rs = sorted((rng.randint(1, 9) for _ in range(2)), reverse=True)
        assert lb_regular_chain(ws, rs) == lb_regular_pair(ws[0], ws[1], rs[0], rs[1])


def test_regular_chain_matches_iterated_pair_bound():
    rng = random.Random(RNG_SEED + 1)
    for _ in range(20):
        k = rng.randint(1, 6)
        ws = [rng.randint(1, 40) for _ in range(k)]
        rs = sorted((rng.randint(1, 9) for _ in range(k)), reverse=True)
        acc, acc_deg = ws[0], rs[0]
        for i in range(1, k):
            acc = acc + ws[i] + max(acc_deg, rs[i])
            acc_deg += rs[i]
        assert lb_regular_chain(ws, rs) == acc


def test_family_bound_points():
    assert lb_family("cycle", (4,), 1, 1) == 10
    assert lb_family("path", (4,), 1, 1) == 7
    assert lb_family("hypercube", (3,), 3, 2) == 15
    assert lb_family("caterpillar", (1, 2, 2, 0), 1, 1) == 10 + 1 + 5
    assert lb_family("complete_bipartite", (3, 3), 3, 2) == 12
    assert lb_family("complete_bipartite", (1, 1), 2, 1) == 4


def test_upper_bound_points():
    assert ub_asratian_kamalian(3, 2, bipartite=True) == 4
    assert ub_asratian_kamalian(1, 1) == 1
    assert ub_triangle_free(5) == 4
    assert ub_triangle_free(8) == 7
    assert ub_hypercube(3) == 6 and ub_hypercube(4) == 10
    assert ub_torus([2, 2]) == 12
    assert ub_hamming([2, 2]) == 15
    assert ub_torus([3]) == 4
    assert ub_hamming([3]) == 9


def test_distance_class_bound_reduces_to_diameter_bound():
    rng = random.Random(RNG_SEED + 2)
    for _ in range(20):
        diam_e = rng.randint(1, 8)
        delta = rng.randint(2, 9)
        assert ub_distance_class(diam_e, delta, [1] * diam_e) == (1 + diam_e) * delta - diam_e


def test_torus_upper_bound_matches_bipartite_distance_class_expansion():
    rng = random.Random(RNG_SEED + 3)
    for _ in range(20):
        k = rng.randint(1, 5)
        halves = [rng.randint(2, 7) for _ in range(k)]
        p = torus_distance_vector(halves)
        diam = sum(halves)
        delta = 2 * k
        assert len(p) == diam - 1
        assert ub_torus(halves) == ub_distance_class_bipartite(diam, delta, p)


def test_hamming_upper_bound_matches_distance_class_expansion():
    rng = random.Random(RNG_SEED + 4)
    for _ in range(20):
        k = rng.randint(1, 6)
        halves = [rng.randint(1, 7) for _ in range(k)]
        delta = sum(2 * n - 1 for n in halves)
        assert ub_hamming(halves) == ub_distance_class(k, delta, hamming_distance_vector(k))


def test_torus_lower_bound_points_and_reduction():
    assert lb_torus_even([2, 2]) == 10
    assert lb_torus_uniform(2, 2) == 10
    for n in (2, 3, 5, 9):
        assert lb_torus_even([n]) == n + 1
    assert lb_torus_mixed([1], [2]) == 0 + 2 + 2 * (1 + 2)
    with pytest.raises(ParameterError):
        lb_torus_even([1, 2])
    with pytest.raises(ParameterError):
        lb_torus_mixed([1, 1], [2])


def test_two_torus_bounds():
    assert lb_two_torus_even(2, 2) == 10
    assert lb_two_torus_even(3, 2) == max(11, 13) == 13
    assert lb_two_torus_mixed(3, 1) == 10  # odd m
    assert lb_two_torus_mixed(2, 1) == 9  # even m gets one more


def test_two_torus_even_agrees_with_chain_bound():
    rng = random.Random(RNG_SEED + 5)
    for _ in range(20):
        m, n = rng.randint(2, 9), rng.randint(2, 9)
        assert lb_two_torus_even(m, n) == lb_torus_even([m, n])


def test_torus_even_matches_inductive_expansion():
    rng = random.Random(RNG_SEED + 6)
    for _ in range(20):
        k = rng.randint(1, 6)
        halves = sorted(rng.randint(2, 8) for _ in range(k))
        acc = halves[0] + 1
        for i in range(1, k):
            acc = (halves[i] + 1) + acc + halves[i] * (2 * i)
        assert lb_torus_even(halves) == acc


def test_torus_mixed_matches_inductive_expansion():
    rng = random.Random(RNG_SEED + 7)
    for _ in range(20):
        k = rng.randint(1, 4)
        s = rng.randint(0, 3)
        ms = sorted(rng.randint(1, 6) for _ in range(k))
        ns = sorted(rng.randint(2, 8) for _ in range(k + s))
        pair_values = [2 * ms[i] + 2 * ns[i] + 2 for i in range(k)]
        acc = lb_regular_chain(pair_values, [4] * k)
        degree = 4 * k
        for j in range(1, s + 1):
            acc = (ns[k + j - 1] + 1) + acc + ns[k + j - 1] * degree
            degree += 2
        assert lb_torus_mixed(ms, ns) == acc


def test_uniform_torus_matches_general_chain():
    rng = random.Random(RNG_SEED + 8)
    for _ in range(20):
        n, k = rng.randint(2, 9), rng.randint(1, 8)
        assert lb_torus_uniform(n, k) == lb_torus_even([n] * k)


def test_hypercube_torus_bound_coincidence():
    for k in range(1, 65):
        assert lb_torus_uniform(2, k) == ub_hypercube(2 * k) == 2 * k * k + k


def test_factorization_and_correction():
    assert Factorization.of(12).pairs == ((2, 2), (3, 1))
    assert Factorization.of(12).value == 12
    assert factor_correction(1) == 0
    assert factor_correction(2) == 1
    assert factor_correction(4) == 2
    assert factor_correction(6) == 3
    assert factor_correction(7) == 4
    assert factor_correction(11) == 4
    assert factor_correction(13) == 7
    assert factor_correction(3 * 5) == 2 + 3


def test_complete_graph_bound():
    assert lb_complete_even(1) == 1
    assert lb_complete_even(2) == 4
    assert lb_complete_even(3) == 12 - 3 - 2
    assert lb_complete_even(Factorization.of(4)) == 16 - 3 - 2


def test_hamming_lower_bounds():
    assert lb_hamming([1]) == 1
    assert lb_hamming([2, 2], [4, 4]) == 8 + 3
    assert lb_hamming([2, 2]) == 11
    rng = random.Random(RNG_SEED + 9)
    for _ in range(20):
        n, k = rng.randint(1, 8), rng.randint(1, 6)
        assert lb_hamming_uniform(n, k) == lb_hamming([n] * k)
    for k in (1, 2, 3, 5):
        assert lb_hamming_uniform(1, k) == k * (k + 1) // 2


def test_eulerian_obstructions():
    from intercol import Graph

    assert not eulerian_odd_obstruction(cycle(4))
    assert eulerian_odd_obstruction(cycle(3))
    assert eulerian_odd_obstruction(Graph([0], [])) is False
    assert eulerian_product_obstruction(butterfly(), complete(3))
    assert eulerian_product_obstruction(butterfly(), cycle(5))
    assert not eulerian_product_obstruction(cycle(4), complete(3))
    assert not eulerian_product_obstruction(complete(3), butterfly())


def test_eulerian_obstruction_never_fires_on_bipartite_graphs():
    from intercol import complete_bipartite, hypercube

    for g in (cycle(4), cycle(6), hypercube(2), hypercube(3), complete_bipartite(2, 2), torus(4, 4)):
        assert not eulerian_odd_obstruction(g)


def test_chromatic_index_obstructions():
    assert chromatic_index_obstruction(cycle(6)) is False
    assert chromatic_index_obstruction(petersen()) is True
    assert chromatic_index_obstruction(torus(5, 5)) is None  # over the edge budget
    assert chromatic_index_obstruction(torus(5, 5), max_edges=60) is True


def test_distance_class_membership():
    for g in (cycle(6), butterfly(), hamming(2, 4)):
        from intercol import edge_diameter

        assert verify_D_membership(g, [1] * edge_diameter(g))
    assert verify_D_membership(hamming(4, 4), (1, 2))
    assert verify_D_membership(torus(4, 4), (1, 1, 2))
    assert not verify_D_membership(path(3), (1, 2))
    assert torus_distance_vector([2, 2]) == (1, 1, 2)
    assert hamming_distance_vector(3) == (1, 2, 3)


def test_report_torus_4_4():
    rep = report("torus:4,4")
    assert rep.best_lower() == 10
    assert min(v for v in rep.upper_bounds()) == 12
    assert rep.exact_min == 4
    assert not rep.not_colorable


def test_report_hypercube_4():
    rep = report("hypercube:4")
    assert rep.best_lower() == 10 and rep.best_upper() == 10
    assert rep.exact_min == 4


def test_report_fibonacci_5():
    rep = report("fibonacci:5")
    assert rep.exact_min == 5
    assert rep.best_lower() == 6
    assert rep.best_upper() == 12  # triangle-free bound: 13 vertices
    assert not rep.not_colorable


def test_report_classification_rows():
    assert report("cycle:3").not_colorable
    assert report("butterflyxk:3").not_colorable
    assert report("c:5xc:5").not_colorable
    assert report("petersen").not_colorable
    rep = report("k:2xk:3")
    assert not rep.not_colorable
    assert rep.exact_min == 3


def test_report_directions_are_consistent_on_colorable_families():
    for desc in ("cycle:8", "kmn:3,3", "q:3", "fibonacci:4", "torus:4,4", "hamming:2,4"):
        rep = report(desc)
        assert not rep.not_colorable
        if rep.best_lower() is not None and rep.best_upper() is not None:
            assert rep.best_lower() <= rep.best_upper()


def test_formula_parameter_errors():
    with pytest.raises(ParameterError):
        ub_distance_class(3, 4, (1, 2))
    with pytest.raises(ParameterError):
        ub_distance_class_bipartite(3, 4, (1, 2, 3))
    with pytest.raises(ParameterError):
        lb_regular_chain([3, 4], [2])
    with pytest.raises(ParameterError):
        ub_torus([1, 2])
    with pytest.raises(ParameterError):
        lb_hamming([])
