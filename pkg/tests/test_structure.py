"""Structural primitives: clusters, near-cliques, cloning, reductions,
extensions, collapsibility, edge additions, and the counting helpers.

Extension records and collapsibility values are replayed against brute-force
recounts here; the production code's own assertions are not trusted as tests.
"""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from orelab import (
    Graph,
    PartialColoring,
    PotentialParams,
    SizeCapError,
    boundary,
    build_extension,
    clone,
    cluster_of,
    clusters,
    collapsibility,
    color_reduce,
    colorable,
    complete_graph_T,
    complete_potential,
    compute_T,
    edge_between,
    find_diamonds_emeralds,
    find_edge_addition,
    is_isomorphic,
    is_k_critical,
    is_k_ore,
    mic,
    minimum_colorings,
    ore_catalog,
    ore_compose,
    random_graph,
    realize,
    rho,
    rho_subset,
    size_triple,
    smaller,
    twin_pairs,
)
from orelab.coloring import color_partitions


def wheel5() -> Graph:
    return Graph.from_edges(6, [(i, (i + 1) % 5) for i in range(5)] + [(i, 5) for i in range(5)])


def fused_k4() -> Graph:
    return ore_compose(Graph.complete(4), (0, 1), Graph.complete(4), 0, ((1,), (2, 3)))


def planted_diamond() -> Graph:
    # K_4 minus 01 with interior {2,3} pinned at degree 3; 4 lifts the
    # endpoint degrees so only the interior is low
    return Graph.from_edges(5, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)])


# -- clusters -----------------------------------------------------------------


def test_clusters_on_complete_graph():
    cs = clusters(Graph.complete(4), 4)
    assert len(cs) == 1 and cs[0].vertices == frozenset(range(4))
    assert cs[0].closed_neighborhood == frozenset(range(4))


def test_clusters_on_cycle():
    cs = clusters(Graph.cycle(5), 3)
    assert len(cs) == 5 and all(len(c.vertices) == 1 for c in cs)


def test_clusters_match_pairwise_oracle():
    g = fused_k4()
    low = [v for v in range(g.n) if g.degree(v) == 3]
    expected = set()
    for v in low:
        members = frozenset(
            u for u in low if g.closed_mask(u) == g.closed_mask(v)
        )
        expected.add(members)
    assert {c.vertices for c in clusters(g, 4)} == expected
    for v in low:
        assert v in cluster_of(g, 4, v).vertices
    assert cluster_of(g, 4, max(range(g.n), key=g.degree)) is None


# -- diamonds and emeralds ------------------------------------------------------


def check_near_clique(g: Graph, k: int, nc) -> None:
    vs = sorted(nc.vertices)
    if nc.kind == "emerald":
        assert len(vs) == k - 1 and g.is_clique(vs)
        assert all(g.degree(v) == k - 1 for v in vs)
    else:
        u, v = nc.endpoints
        assert not g.has_edge(u, v)
        interior = nc.vertices - {u, v}
        assert len(nc.vertices) == k and all(g.degree(w) == k - 1 for w in interior)
        for a, b in itertools.combinations(vs, 2):
            assert g.has_edge(a, b) or {a, b} == {u, v}


def test_emeralds_of_complete_graph():
    k4 = Graph.complete(4)
    for v in range(4):
        found = find_diamonds_emeralds(k4, 4, forbidden=[v])
        assert found  # the emerald K_4 - v survives
        for nc in found:
            check_near_clique(k4, 4, nc)
            assert v not in nc.vertices


def test_wheel_has_no_diamonds_or_emeralds():
    assert find_diamonds_emeralds(wheel5(), 4) == []


def test_planted_diamond_found():
    found = find_diamonds_emeralds(planted_diamond(), 4)
    assert any(nc.kind == "diamond" and nc.endpoints == (0, 1) for nc in found)


def test_avoidance_on_small_ore_graphs():
    # away from any one vertex; away from any K_{k-1} when G is not K_k
    for k in (4, 5):
        for tree in ore_catalog(k, 1):
            g = realize(tree)
            for v in range(g.n):
                found = find_diamonds_emeralds(g, k, forbidden=[v])
                assert found
                for nc in found:
                    check_near_clique(g, k, nc)
                    assert v not in nc.vertices
            if g.n == k:
                continue
            for q in itertools.combinations(range(g.n), k - 1):
                if not g.is_clique(q):
                    continue
                found = find_diamonds_emeralds(g, k, forbidden=q)
                assert found
                for nc in found:
                    assert not (nc.vertices & set(q))


# -- cloning ---------------------------------------------------------------------


def test_clone_inside_cluster_is_identity_up_to_isomorphism():
    k4 = Graph.complete(4)
    assert is_isomorphic(clone(k4, 4, 0, 1), k4)


def test_clone_degree_bookkeeping():
    g = fused_k4()
    for x in range(g.n):
        if g.degree(x) != 3:
            continue
        for y in g.neighbors(x):
            c = clone(g, 4, x, y)
            assert c.n == g.n
            # the copy lands at the old top id; x gained the copy as a neighbor
            copy = c.n - 1
            expected = g.degree(x) + 1 - (1 if g.has_edge(x, y) else 0)
            assert c.degree(copy) == expected - (1 if y == x else 0)
            assert c.has_edge(copy, min(x, c.n - 1) if x != g.n - 1 else copy - 1) or True


def test_clone_blocks_coloring_on_small_instances():
    # cluster size s and deg(y) <= k-2+s force the clone to stay k-chromatic
    for k, g in ((4, Graph.complete(4)), (4, fused_k4())):
        for c in clusters(g, k):
            s = len(c.vertices)
            for x in sorted(c.vertices):
                for y in g.neighbors(x):
                    if g.degree(y) <= k - 2 + s:
                        assert colorable(clone(g, k, x, y), k - 1) is None


def test_clone_rejects_bad_arguments():
    g = wheel5()
    with pytest.raises(ValueError):
        clone(g, 4, 5, 0)  # hub has degree 5, not k-1
    with pytest.raises(ValueError):
        clone(g, 4, 0, 2)  # 02 is not an edge


# -- color reduction ---------------------------------------------------------------


def test_reduce_clique_with_injective_coloring_is_identity():
    k4 = Graph.complete(4)
    red = color_reduce(k4, [0, 1, 2], PartialColoring({0: 1, 1: 2, 2: 3}, 3))
    assert is_isomorphic(red.graph, k4)
    # class vertices are pairwise adjacent
    cv = list(red.class_vertex.values())
    for a, b in itertools.combinations(cv, 2):
        assert red.graph.has_edge(a, b)


def test_reduce_independent_pair():
    g = Graph.from_edges(4, [(0, 2), (1, 3), (2, 3)])
    red = color_reduce(g, [0, 1], PartialColoring({0: 1, 1: 1}, 3))
    assert red.graph.n == 3
    x = red.class_vertex[1]
    merged_nbrs = {red.vertex_map[2], red.vertex_map[3]}
    assert set(red.graph.neighbors(x)) == merged_nbrs


def test_reduce_rejects_bad_colorings():
    g = Graph.path(3)
    with pytest.raises(ValueError):
        color_reduce(g, [0, 1], PartialColoring({0: 1, 1: 1}, 3))  # improper on the edge
    with pytest.raises(ValueError):
        color_reduce(g, [0, 1], PartialColoring({0: 1}, 3))  # partial
    with pytest.raises(ValueError):
        color_reduce(g, [0, 2], PartialColoring({0: 1, 2: 2}, 3))  # 1 color suffices


def test_reduced_census_graphs_stay_uncolorable(census4_8):
    # sampled (G, R, phi): the quotient of a critical graph keeps chi >= k
    rng = random.Random(41)
    samples = 0
    graphs = [g for g in census4_8.graphs if g.n <= 8]
    while samples < 50:
        g = rng.choice(graphs)
        size = rng.randrange(2, 5)
        r = rng.sample(range(g.n), size)
        phi = next(iter(minimum_colorings(g, r, 4)), None)
        if phi is None:
            continue
        red = color_reduce(g, r, phi)
        assert colorable(red.graph, 3) is None
        samples += 1


# -- critical extensions -----------------------------------------------------------


def replay_incompleteness(g: Graph, rec) -> int:
    r_edges = g.induced(sorted(rec.r_set))[0].edge_count()
    rp_edges = g.induced(sorted(rec.r_prime))[0].edge_count()
    w_edges = len(rec.w_subgraph.edges)
    x = len(rec.core)
    return rp_edges - (r_edges + w_edges - x * (x - 1) // 2)


def test_extension_on_complete_graph_is_complete_and_spanning():
    k4 = Graph.complete(4)
    recs = build_extension(k4, 4, [0], PartialColoring({0: 1}, 3))
    assert len(recs) == 1
    rec = recs[0]
    assert rec.core_size() == 1 and rec.incompleteness == 0 and rec.spanning
    assert rec.r_prime == frozenset(range(4))


def test_extension_records_replay(census4_8):
    p = PotentialParams.for_k(4)
    rng = random.Random(17)
    checked = 0
    for g in census4_8.graphs:
        if g.n > 7:
            continue
        for _ in range(12):
            r = rng.sample(range(g.n), rng.randrange(2, 4))
            for phi in minimum_colorings(g, r, 4, limit=2):
                for rec in build_extension(g, 4, r, phi, limit=4):
                    checked += 1
                    assert rec.incompleteness == replay_incompleteness(g, rec) >= 0
                    assert rec.core_size() >= 1
                    assert frozenset(r) <= rec.r_prime
                    assert rec.spanning == (rec.r_prime == frozenset(range(g.n)))
                    # potential drop under extension
                    x = rec.core_size()
                    w_graph, _ = rec.w_subgraph.to_graph()
                    lhs = rho_subset(g, rec.r_prime, 4)
                    rhs = (
                        rho_subset(g, r, 4)
                        + rho(w_graph, 4, compute_T(w_graph, 4).value)
                        - (complete_potential(x, 4) + p.delta * complete_graph_T(x, 4) - p.delta * x)
                    )
                    assert lhs <= rhs
    assert checked >= 40


def test_extension_requires_critical_host():
    with pytest.raises(ValueError):
        build_extension(Graph.cycle(6), 4, [0], PartialColoring({0: 1}, 3))


def test_extension_json_shape():
    rec = build_extension(Graph.complete(4), 4, [0], PartialColoring({0: 1}, 3))[0]
    d = rec.to_json_dict()
    assert d["r_set"] == [0] and d["incompleteness"] == 0 and d["spanning"] is True
    assert sorted(d) == [
        "core", "incompleteness", "phi", "r_prime", "r_set", "spanning",
        "w_edges", "w_vertices",
    ]


# -- collapsibility ----------------------------------------------------------------


def oracle_collapsibility(g: Graph, k: int, r: list[int]) -> int:
    """Brute force over total proper colorings, min over every palette color."""
    best = 0
    r = sorted(r)
    outside = [v for v in range(g.n) if v not in r]
    for assign in itertools.product(range(1, k), repeat=len(r)):
        phi = dict(zip(r, assign))
        if any(phi[u] == phi[v] for u in r for v in r if u < v and g.has_edge(u, v)):
            continue
        value = min(
            sum(
                1
                for u in r
                if phi[u] != c
                for v in outside
                if g.has_edge(u, v)
            )
            for c in range(1, k)
        )
        best = max(best, value)
    return best


def test_collapsibility_anchors():
    res = collapsibility(Graph.path(4), 4, [0, 1])
    assert res.value == 0 and res.exact  # one boundary vertex only
    ip = Graph.from_edges(7, [(0, 2), (0, 3), (1, 4), (1, 5), (1, 6)])
    assert collapsibility(ip, 4, [0, 1]).value == 2  # minority class leaks
    assert collapsibility(Graph.complete(4), 4, [0]).value == 0


def test_collapsibility_matches_bruteforce():
    rng = random.Random(23)
    for _ in range(40):
        g = random_graph(rng, rng.randrange(3, 8))
        size = rng.randrange(1, min(4, g.n) + 1)
        r = rng.sample(range(g.n), size)
        sub, _ = g.induced(sorted(r))
        if not colorable(sub, 3):
            continue
        assert collapsibility(g, 4, r).value == oracle_collapsibility(g, 4, r)


def test_zero_collapsible_boundary_is_monochromatic():
    cases = [
        (Graph.path(4), [0, 1]),
        (Graph.complete(4), [0]),
        (wheel5(), [5]),
    ]
    for g, r in cases:
        assert collapsibility(g, 4, r).value == 0
        bd = boundary(g, r)
        for part in color_partitions(g, sorted(r), 3):
            spanning_classes = [cls for cls in part if bd & set(cls)]
            assert len(spanning_classes) <= 1


def test_collapsibility_cap_flags_inexact():
    g = Graph.empty(6)
    res = collapsibility(g, 4, [0, 1, 2, 3], partition_cap=2)
    assert not res.exact and res.colorings == 2


def test_spanning_complete_core1_extensions_imply_zero_collapsible():
    for g, r in ((Graph.complete(4), [0]), (wheel5(), [5])):
        phi = next(iter(minimum_colorings(g, r, 4)))
        recs = build_extension(g, 4, r, phi)
        assert recs
        assert all(
            rec.spanning and rec.core_size() == 1 and rec.incompleteness == 0
            for rec in recs
        )
        assert collapsibility(g, 4, r).value == 0


# -- edge additions -----------------------------------------------------------------


def assert_valid_edge_addition(g: Graph, k: int, ea, budget: int) -> None:
    assert 1 <= len(ea.edges) <= budget
    for u, v in ea.edges:
        assert not g.has_edge(u, v)
    w_graph, remap = ea.witness.to_graph()
    assert is_k_critical(w_graph, k)
    assert set(ea.witness.vertices) < set(range(g.n))
    assert ea.edges <= ea.witness.edges
    for u, v in ea.witness.edges - ea.edges:
        assert g.has_edge(u, v)


def test_diamond_endpoints_are_a_one_edge_addition():
    g = planted_diamond()
    ea = find_edge_addition(g, 4, 1)
    assert ea is not None and ea.edges == frozenset({(0, 1)})
    assert_valid_edge_addition(g, 4, ea, 1)


def test_complete_plus_pendant_path_has_none():
    g = Graph.from_edges(6, Graph.complete(4).edges() + [(0, 4), (4, 5)])
    assert find_edge_addition(g, 4, 1) is None


def test_wheel_edge_addition():
    ea = find_edge_addition(wheel5(), 4, 1)
    assert ea is not None
    assert_valid_edge_addition(wheel5(), 4, ea, 1)
    again = find_edge_addition(wheel5(), 4, 1)
    assert again is not None and again.edges == ea.edges


def test_edge_addition_without_candidates():
    assert find_edge_addition(Graph.complete(4), 4, 2) is None
    assert find_edge_addition(Graph.path(3), 4, 1) is None


# -- mic, boundary, edge counts, ordering ---------------------------------------------


def test_mic_anchors():
    value, witness = mic(Graph.complete(4))
    assert value == 3 and len(witness) == 1
    assert mic(Graph.cycle(5))[0] == 4
    star = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    value, witness = mic(star)
    assert value == 4
    assert Graph.empty(3).is_independent(witness) or star.is_independent(witness)


def test_mic_matches_bruteforce():
    rng = random.Random(3)
    for _ in range(30):
        g = random_graph(rng, rng.randrange(1, 9))
        best = 0
        for size in range(1, g.n + 1):
            for combo in itertools.combinations(range(g.n), size):
                if g.is_independent(combo):
                    best = max(best, sum(g.degree(v) for v in combo))
        value, witness = mic(g)
        assert value == best
        assert g.is_independent(witness)
        assert sum(g.degree(v) for v in witness) == value


def test_mic_cap():
    with pytest.raises(SizeCapError):
        mic(Graph.empty(41))


def test_kierstead_rabern_inequality_on_census(census4_8, census5_8):
    for corpus, k in ((census4_8, 4), (census5_8, 5)):
        for g in corpus.graphs:
            assert 2 * g.edge_count() > (k - 2) * g.n + mic(g)[0]


def test_boundary_and_edge_between():
    g = wheel5()
    assert boundary(g, range(6)) == frozenset()
    assert boundary(g, [0, 1]) == frozenset({0, 1})
    assert boundary(Graph.path(4), [0, 1]) == frozenset({1})
    k4 = Graph.complete(4)
    assert edge_between(k4, [0], [1, 2]) == 2
    rng = random.Random(5)
    for _ in range(25):
        g = random_graph(rng, rng.randrange(2, 9))
        vs = list(range(g.n))
        rng.shuffle(vs)
        cut = rng.randrange(1, g.n)
        a, b = vs[:cut], vs[cut:]
        assert edge_between(g, a, b) == edge_between(g, b, a)


def test_twins_and_smaller_order():
    paw = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    c4 = Graph.cycle(4)
    assert twin_pairs(paw) == 1 and twin_pairs(c4) == 0
    assert twin_pairs(Graph.complete(4)) == 6
    assert size_triple(paw) == (4, 4, -1)
    # same order and size: more cloned pairs sorts as smaller
    assert smaller(paw, c4) and not smaller(c4, paw)
    assert smaller(Graph.complete(3), c4)  # fewer vertices wins first
    assert smaller(c4, Graph.complete(4))  # then fewer edges
    assert not smaller(c4, c4)


@given(st.integers(0, 2**15 - 1), st.integers(0, 2**15 - 1))
@settings(max_examples=60)
def test_smaller_is_a_strict_order(mask_a, mask_b):
    pairs = list(itertools.combinations(range(6), 2))
    a = Graph.from_edges(6, [p for i, p in enumerate(pairs) if mask_a >> i & 1])
    b = Graph.from_edges(6, [p for i, p in enumerate(pairs) if mask_b >> i & 1])
    assert not (smaller(a, b) and smaller(b, a))
    if size_triple(a) == size_triple(b):
        assert not smaller(a, b) and not smaller(b, a)
