"""Coloring solver checks against assignment-enumeration oracles.

The oracle here tries every map V -> {1..t} directly, so it shares no code
with the solver's propagation or symmetry breaking.
"""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from orelab import (
    Graph,
    PartialColoring,
    SizeCapError,
    chromatic_number,
    color_partitions,
    colorable,
    edge_count_lemma_check,
    edge_between,
    f_choosable_bruteforce,
    find_critical_subgraphs,
    graph_classes,
    is_k_critical,
    ore_compose,
)


def oracle_colorable(g: Graph, t: int) -> bool:
    for assign in itertools.product(range(t), repeat=g.n):
        if all(assign[u] != assign[v] for u, v in g.edges()):
            return True
    return g.n == 0


def oracle_chromatic(g: Graph) -> int:
    t = 0
    while not oracle_colorable(g, t):
        t += 1
    return t


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, edges)


def wheel5() -> Graph:
    return Graph.from_edges(6, [(i, (i + 1) % 5) for i in range(5)] + [(i, 5) for i in range(5)])


# -- colorable / chromatic_number ----------------------------------------------


def test_colorable_odd_cycle():
    c5 = Graph.cycle(5)
    assert colorable(c5, 2) is None
    phi = colorable(c5, 3)
    assert phi is not None and phi.is_proper(c5) and phi.is_total_on(range(5))
    assert phi.colors_used() <= {1, 2, 3}


def test_colorable_petersen():
    p = petersen()
    assert colorable(p, 2) is None
    phi = colorable(p, 3)
    assert phi is not None and phi.is_proper(p)


def test_chromatic_anchors():
    assert chromatic_number(Graph.complete(6)) == 6
    assert chromatic_number(Graph.cycle(5)) == 3
    assert chromatic_number(Graph.empty(0)) == 0
    assert chromatic_number(Graph.empty(5)) == 1
    fused = ore_compose(Graph.complete(4), (0, 1), Graph.complete(4), 0, ((1,), (2, 3)))
    assert chromatic_number(fused) == 4


def test_chromatic_matches_assignment_oracle_on_all_small_classes():
    for n in range(1, 6):
        for g in graph_classes(n):
            assert chromatic_number(g) == oracle_chromatic(g)


@given(st.integers(3, 9))
def test_cycles(n):
    assert chromatic_number(Graph.cycle(n)) == (2 if n % 2 == 0 else 3)


# -- criticality -----------------------------------------------------------------


def test_is_k_critical_anchors():
    k4 = Graph.complete(4)
    assert is_k_critical(k4, 4)
    assert not is_k_critical(k4.delete_edge(0, 1), 4)
    assert not is_k_critical(k4, 3)
    assert is_k_critical(Graph.cycle(7), 3)
    assert not is_k_critical(Graph.cycle(6), 3)
    assert is_k_critical(wheel5(), 4)
    fused = ore_compose(Graph.complete(4), (0, 1), Graph.complete(4), 0, ((1,), (2, 3)))
    assert is_k_critical(fused, 4)


def test_is_k_critical_matches_definition_on_small_classes():
    # definition: chi = k and every proper subgraph is (k-1)-colorable;
    # single edge and single vertex deletions cover all maximal proper subgraphs
    for n in range(1, 6):
        for g in graph_classes(n):
            chi = oracle_chromatic(g)
            for k in (3, 4):
                expected = (
                    chi == k
                    and all(
                        oracle_chromatic(g.delete_edge(u, v)) <= k - 1
                        for u, v in g.edges()
                    )
                    and all(
                        oracle_chromatic(g.delete_vertex(v)[0]) <= k - 1
                        for v in range(g.n)
                    )
                )
                assert is_k_critical(g, k) == expected


def test_critical_graphs_are_vertex_critical_and_well_connected(census4_8):
    for g in census4_8.graphs:
        if g.n > 7:
            continue
        assert g.min_degree() >= 3
        for v in range(g.n):
            h, _ = g.delete_vertex(v)
            assert colorable(h, 3) is not None
        # every proper nonempty subset sends at least k-1 edges outside
        for size in range(1, g.n):
            for subset in itertools.combinations(range(g.n), size):
                rest = set(range(g.n)) - set(subset)
                assert edge_between(g, subset, rest) >= 3


def test_find_critical_subgraphs():
    w5 = wheel5()
    subs = find_critical_subgraphs(w5, 4)
    assert len(subs) == 1 and set(subs[0].vertices) == set(range(6))
    pendant = Graph.from_edges(5, Graph.complete(4).edges() + [(0, 4)])
    subs = find_critical_subgraphs(pendant, 4)
    assert len(subs) == 1
    sub_graph, _ = subs[0].to_graph()
    assert is_k_critical(sub_graph, 4)
    assert set(subs[0].vertices) == {0, 1, 2, 3}
    for u, v in subs[0].edges:
        assert pendant.has_edge(u, v)
    # 3-colorable hosts hold no 4-critical subgraph; asking is a caller bug
    with pytest.raises(ValueError):
        find_critical_subgraphs(Graph.cycle(5), 4)


def test_find_critical_subgraphs_enumerates_several():
    # two vertex-disjoint K_4s: both come back within the limit
    edges = list(Graph.complete(4).edges())
    edges += [(u + 4, v + 4) for u, v in Graph.complete(4).edges()]
    twin = Graph.from_edges(8, edges)
    subs = find_critical_subgraphs(twin, 4, limit=6)
    assert {frozenset(s.vertices) for s in subs} >= {frozenset({0, 1, 2, 3}), frozenset({4, 5, 6, 7})}


# -- color partitions ------------------------------------------------------------


def test_color_partitions_independent_and_clique():
    assert len(list(color_partitions(Graph.empty(3), [0, 1, 2], 3))) == 5
    assert len(list(color_partitions(Graph.empty(3), [0, 1, 2], 2))) == 4
    assert len(list(color_partitions(Graph.complete(3), [0, 1, 2], 3))) == 1
    assert list(color_partitions(Graph.complete(3), [0, 1, 2], 2)) == []
    for part in color_partitions(Graph.cycle(4), [0, 1, 2, 3], 3):
        for cls in part:
            assert Graph.cycle(4).is_independent(cls)


# -- choosability ---------------------------------------------------------------


def test_f_choosable_anchors():
    assert f_choosable_bruteforce(Graph.complete(1), [1], 1)
    assert not f_choosable_bruteforce(Graph.complete(2), [1, 1], 2)
    assert f_choosable_bruteforce(Graph.complete(2), [1, 2], 2)
    assert not f_choosable_bruteforce(Graph.complete(3), [2, 2, 2], 3)
    assert f_choosable_bruteforce(Graph.cycle(4), [2, 2, 2, 2], 3)


def test_f_choosable_caps():
    with pytest.raises(SizeCapError):
        f_choosable_bruteforce(Graph.empty(9), [1] * 9, 2)
    with pytest.raises(SizeCapError):
        f_choosable_bruteforce(Graph.empty(2), [1, 1], 7)


# -- low-vertex edge-count lemma --------------------------------------------------


def test_edge_count_lemma_on_k4():
    report = edge_count_lemma_check(Graph.complete(4), 4)
    assert report.ok and report.violations == ()
    assert report.subsets_checked == 4  # singletons only; K_4 has no larger independent set
    assert report.b0 == () and report.b1 == ()


def test_edge_count_lemma_on_composition():
    fused = ore_compose(Graph.complete(4), (0, 1), Graph.complete(4), 0, ((1,), (2, 3)))
    assert edge_count_lemma_check(fused, 4).ok


def test_edge_count_lemma_rejects_non_critical_hosts():
    with pytest.raises(ValueError):
        edge_count_lemma_check(Graph.cycle(6), 4)
    with pytest.raises(SizeCapError):
        edge_count_lemma_check(wheel5(), 4, subset_cap=2)
