"""Ore compositions: construction trees, realization, recognition, gadgets.

A composition takes an edge xy out of one graph, splits a vertex z of another
into two positive-degree halves, and glues x to one half and y to the other.
Closure of {K_k} under this operation is recognized here by searching
nonadjacent separating pairs; every found witness is a construction tree that
re-realizes to the input up to isomorphism.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import SizeCapError
from .graphs import (
    Graph,
    bits_of,
    canonical_form,
    identify,
    is_isomorphic,
    isomorphism,
    mask_of,
)

DEFAULT_RECOGNITION_CAP = 25


@dataclass(frozen=True)
class Leaf:
    """The complete graph K_k."""

    k: int


@dataclass(frozen=True)
class Node:
    """One composition step.

    ``replaced_edge`` names the deleted edge in the realized edge side;
    ``split_vertex`` and ``partition`` name the split vertex of the realized
    split side and the two nonempty neighbor groups handed to the endpoints
    of the replaced edge.
    """

    edge_side: "OreTree"
    split_side: "OreTree"
    replaced_edge: tuple[int, int]
    split_vertex: int
    partition: tuple[tuple[int, ...], tuple[int, ...]]


OreTree = Leaf | Node


def tree_nodes(tree: OreTree) -> int:
    """Number of composition steps in the tree."""
    if isinstance(tree, Leaf):
        return 0
    return 1 + tree_nodes(tree.edge_side) + tree_nodes(tree.split_side)


def tree_k(tree: OreTree) -> int:
    """The single k shared by all leaves (mixed trees are invalid)."""
    if isinstance(tree, Leaf):
        return tree.k
    k1 = tree_k(tree.edge_side)
    k2 = tree_k(tree.split_side)
    if k1 != k2:
        raise ValueError(f"mixed leaf parameters {k1} and {k2}")
    return k1


def ore_compose(
    g1: Graph,
    xy: tuple[int, int],
    g2: Graph,
    z: int,
    partition: tuple[tuple[int, ...], tuple[int, ...]],
) -> Graph:
    """Compose: delete edge xy from g1, split z of g2, identify the halves.

    Result ids: g1's vertices keep their ids; g2's vertices other than z
    follow in increasing original order. So |V| = n1 + n2 - 1 and
    |E| = m1 + m2 - 1 (the interiors are disjoint, no parallels arise).
    """
    x, y = xy
    if not g1.has_edge(x, y):
        raise ValueError(f"replaced pair ({x},{y}) is not an edge of the edge side")
    if not 0 <= z < g2.n:
        raise ValueError(f"split vertex {z} not in the split side")
    part1, part2 = tuple(sorted(partition[0])), tuple(sorted(partition[1]))
    if not part1 or not part2:
        raise ValueError("both halves of the split must have positive degree")
    if set(part1) & set(part2):
        raise ValueError("split halves must be disjoint")
    if mask_of(part1) | mask_of(part2) != g2.adj[z]:
        raise ValueError("split halves must partition the split vertex's neighbors")
    n1 = g1.n
    remap = {}
    for w in range(g2.n):
        if w == z:
            continue
        remap[w] = n1 + w - (1 if w > z else 0)
    edges = [e for e in g1.edges() if set(e) != {x, y}]
    for u, v in g2.edges():
        if z in (u, v):
            continue
        edges.append((remap[u], remap[v]))
    edges.extend((x, remap[w]) for w in part1)
    edges.extend((y, remap[w]) for w in part2)
    return Graph.from_edges(n1 + g2.n - 1, edges)


def realize(tree: OreTree, k: int | None = None) -> Graph:
    """Build the graph described by a construction tree."""
    actual = tree_k(tree)
    if k is not None and k != actual:
        raise ValueError(f"tree is built over k={actual}, caller expected {k}")
    return _realize(tree)


def _realize(tree: OreTree) -> Graph:
    if isinstance(tree, Leaf):
        return Graph.complete(tree.k)
    g1 = _realize(tree.edge_side)
    g2 = _realize(tree.split_side)
    return ore_compose(g1, tree.replaced_edge, g2, tree.split_vertex, tree.partition)


# -- JSON round trip ---------------------------------------------------------


def tree_to_json(tree: OreTree) -> dict:
    if isinstance(tree, Leaf):
        return {"kind": "leaf", "k": tree.k}
    return {
        "kind": "node",
        "edge_side": tree_to_json(tree.edge_side),
        "split_side": tree_to_json(tree.split_side),
        "replaced_edge": list(tree.replaced_edge),
        "split_vertex": tree.split_vertex,
        "partition": [list(tree.partition[0]), list(tree.partition[1])],
    }


def tree_from_json(data: dict) -> OreTree:
    if not isinstance(data, dict):
        raise ValueError(f"tree node must be a JSON object, got {type(data).__name__}")
    kind = data.get("kind")
    if kind == "leaf":
        return Leaf(int(data["k"]))
    if kind == "node":
        part = data["partition"]
        return Node(
            tree_from_json(data["edge_side"]),
            tree_from_json(data["split_side"]),
            (int(data["replaced_edge"][0]), int(data["replaced_edge"][1])),
            int(data["split_vertex"]),
            (tuple(int(v) for v in part[0]), tuple(int(v) for v in part[1])),
        )
    raise ValueError(f"unknown tree node kind {kind!r}")


def tree_dumps(tree: OreTree) -> str:
    return json.dumps(tree_to_json(tree), sort_keys=True)


def tree_loads(text: str) -> OreTree:
    return tree_from_json(json.loads(text))


# -- random generation -------------------------------------------------------


def random_ore_tree(k: int, steps: int, rng: random.Random) -> OreTree:
    """Uniform-ish random construction tree with the given number of steps.

    Shape, replaced edge, split vertex, and neighbor partition are all drawn
    from the rng, so a seeded generator reproduces the tree exactly.
    """
    if steps == 0:
        return Leaf(k)
    left = rng.randrange(steps)
    right = steps - 1 - left
    t1 = random_ore_tree(k, left, rng)
    t2 = random_ore_tree(k, right, rng)
    g1 = _realize(t1)
    g2 = _realize(t2)
    edge = rng.choice(sorted(g1.edges()))
    z = rng.randrange(g2.n)
    nbrs = sorted(bits_of(g2.adj[z]))
    sel = rng.randrange(1, (1 << len(nbrs)) - 1)
    part1 = tuple(nbrs[i] for i in range(len(nbrs)) if sel >> i & 1)
    part2 = tuple(nbrs[i] for i in range(len(nbrs)) if not sel >> i & 1)
    return Node(t1, t2, edge, z, (part1, part2))


# -- recognition -------------------------------------------------------------


_MEMO: dict[tuple, OreTree | None] = {}


def clear_recognition_cache() -> None:
    _MEMO.clear()


def _expected_edge_count(n: int, k: int) -> int | None:
    """Edge count forced by |V| for members of the composition closure, or
    None when |V| is not even attainable. Every composition adds k-1 vertices
    and multiplies out to (l+1)*k*(k-1)/2 - l edges after l steps."""
    if n < k or (n - k) % (k - 1):
        return None
    ell = (n - k) // (k - 1)
    return (ell + 1) * k * (k - 1) // 2 - ell


def is_k_ore(g: Graph, k: int, cap: int = DEFAULT_RECOGNITION_CAP) -> OreTree | None:
    """Recognize membership in the composition closure of {K_k}.

    Returns a construction tree that re-realizes to a graph isomorphic to g,
    or None. Search: every decomposition has a nonadjacent overlap pair whose
    removal separates the two interiors, so candidate splits are enumerated
    from separating nonadjacent pairs and component bipartitions, recursing
    on both sides. Results are memoized by canonical form.
    """
    if k < 4:
        raise ValueError("recognition requires k >= 4")
    if g.n > cap:
        raise SizeCapError("recognition vertex count", g.n, cap)
    return _recognize(g, k)


def _recognize(g: Graph, k: int) -> OreTree | None:
    n, m = g.n, g.edge_count()
    expected = _expected_edge_count(n, k)
    if expected is None or m != expected:
        return None
    if n == k:
        return Leaf(k)  # edge filter above already forces completeness
    key = (canonical_form(g).key, k)
    if key in _MEMO:
        return _MEMO[key]
    result = None
    for a, b, split_mask in _candidate_splits(g):
        witness = _try_split(g, k, a, b, split_mask)
        if witness is not None:
            result = witness
            break
    _MEMO[key] = result
    return result


def _candidate_splits(g: Graph):
    """Yield (a, b, split_interior_mask) for nonadjacent separating pairs.

    Both sides of the bipartition must be nonempty unions of components of
    g - {a,b}; the overlap endpoints need a neighbor in the split interior
    (positive split degrees) and no common neighbor there (a split hands
    each neighbor of z to exactly one half).
    """
    full = g.full_mask()
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if g.has_edge(a, b):
                continue
            rest = full & ~(1 << a) & ~(1 << b)
            comps = _components_within(g, rest)
            if len(comps) < 2:
                continue
            for sel in range(1, (1 << len(comps)) - 1):
                split_mask = 0
                for i in range(len(comps)):
                    if sel >> i & 1:
                        split_mask |= comps[i]
                if not g.adj[a] & split_mask or not g.adj[b] & split_mask:
                    continue
                if g.adj[a] & g.adj[b] & split_mask:
                    continue
                yield a, b, split_mask


def _components_within(g: Graph, sub: int) -> list[int]:
    seen = 0
    out = []
    for v in bits_of(sub):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits_of(frontier):
                nxt |= g.adj[u]
            frontier = nxt & sub & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def _try_split(g: Graph, k: int, a: int, b: int, split_mask: int) -> Node | None:
    full = g.full_mask()
    edge_mask = full & ~split_mask  # includes a and b
    # edge side: drop the split interior, restore the replaced edge
    g1, map1 = g.induced(bits_of(edge_mask))
    g1 = g1.add_edge(map1[a], map1[b])
    t1 = _recognize(g1, k)
    if t1 is None:
        return None
    # split side: keep interior plus the pair, merge the pair back into z
    sub2, map2 = g.induced(bits_of(split_mask | (1 << a) | (1 << b)))
    g2, idmap = identify(sub2, map2[a], map2[b])
    t2 = _recognize(g2, k)
    if t2 is None:
        return None
    # express labels in the realizations so the witness is self-contained
    r1 = _realize(t1)
    iso1 = isomorphism(r1, g1)
    inv1 = {v: u for u, v in iso1.items()}
    r2 = _realize(t2)
    iso2 = isomorphism(r2, g2)
    inv2 = {v: u for u, v in iso2.items()}
    z_r2 = inv2[idmap[map2[a]]]
    part_a = tuple(sorted(inv2[idmap[map2[w]]] for w in bits_of(g.adj[a] & split_mask)))
    part_b = tuple(sorted(inv2[idmap[map2[w]]] for w in bits_of(g.adj[b] & split_mask)))
    return Node(t1, t2, (inv1[map1[a]], inv1[map1[b]]), z_r2, (part_a, part_b))


@dataclass(frozen=True)
class Decomposition:
    """One way to split a graph as a composition of two closure members.

    Vertex sets are in the host graph's ids; both sides include the overlap
    pair (a, b)."""

    a: int
    b: int
    edge_side: frozenset[int]
    split_side: frozenset[int]


def ore_decompositions(g: Graph, k: int, cap: int = DEFAULT_RECOGNITION_CAP) -> list[Decomposition]:
    """All top-level decompositions of g into two closure members."""
    if g.n > cap:
        raise SizeCapError("decomposition vertex count", g.n, cap)
    out = []
    for a, b, split_mask in _candidate_splits(g):
        full = g.full_mask()
        edge_mask = full & ~split_mask
        g1, map1 = g.induced(bits_of(edge_mask))
        g1 = g1.add_edge(map1[a], map1[b])
        if _recognize(g1, k) is None:
            continue
        sub2, map2 = g.induced(bits_of(split_mask | (1 << a) | (1 << b)))
        g2, _ = identify(sub2, map2[a], map2[b])
        if _recognize(g2, k) is None:
            continue
        out.append(
            Decomposition(
                a,
                b,
                frozenset(bits_of(edge_mask)),
                frozenset(bits_of(split_mask)) | {a, b},
            )
        )
    return out


def key_vertices(tree: OreTree, cap: int = DEFAULT_RECOGNITION_CAP) -> frozenset[int]:
    """Vertices of the realized graph that sit on the edge side, outside the
    overlap pair, in every decomposition found by the recognition search.

    For K_k there are no decompositions at all, so every vertex qualifies.
    """
    k = tree_k(tree)
    g = _realize(tree)
    if g.n > cap:
        raise SizeCapError("key-vertex vertex count", g.n, cap)
    if g.n == k:
        return frozenset(range(k))
    decomps = ore_decompositions(g, k, cap)
    if not decomps:
        raise AssertionError("realized composition admits no decomposition")
    keys = set(range(g.n))
    for d in decomps:
        keys &= d.edge_side - {d.a, d.b}
    return frozenset(keys)


# -- gadgets -----------------------------------------------------------------


@dataclass(frozen=True)
class Gadget:
    """A closure member H with one cluster vertex x removed.

    ``graph`` is H - x with dense ids; ``key_vertices`` are the key vertices
    of H surviving in those ids.
    """

    k: int
    tree: OreTree
    deleted_vertex: int
    graph: Graph
    key_vertices: frozenset[int]


def make_gadget(tree: OreTree, x: int, cap: int = DEFAULT_RECOGNITION_CAP) -> Gadget:
    """Delete vertex x (degree k-1, cluster size >= 2) from the realization.

    The cluster-size requirement keeps x away from every overlap pair, which
    is what makes the leftover graph useful as a pattern.
    """
    from .structure import clusters

    k = tree_k(tree)
    g = _realize(tree)
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} not in realization")
    if g.degree(x) != k - 1:
        raise ValueError(f"gadget vertex must have degree {k - 1}, got {g.degree(x)}")
    cluster = next((c for c in clusters(g, k) if x in c.vertices), None)
    if cluster is None or len(cluster.vertices) < 2:
        raise ValueError("gadget vertex must lie in a cluster of size >= 2")
    keys = key_vertices(tree, cap)
    stripped, remap = g.delete_vertex(x)
    kept_keys = frozenset(remap[v] for v in keys if v != x)
    return Gadget(k, tree, x, stripped, kept_keys)


# -- exhaustive catalogs -----------------------------------------------------


@lru_cache(maxsize=None)
def ore_catalog(k: int, max_steps: int) -> tuple[OreTree, ...]:
    """All closure members with at most max_steps compositions, one tree per
    isomorphism class of the realization, ordered by (steps, canonical key)."""
    levels: list[dict[tuple, OreTree]] = [{canonical_form(Graph.complete(k)).key: Leaf(k)}]
    for step in range(1, max_steps + 1):
        found: dict[tuple, OreTree] = {}
        for l1 in range(step):
            l2 = step - 1 - l1
            for t1 in levels[l1].values():
                g1 = _realize(t1)
                edges1 = sorted(g1.edges())
                for t2 in levels[l2].values():
                    g2 = _realize(t2)
                    for edge in edges1:
                        for z in range(g2.n):
                            nbrs = sorted(bits_of(g2.adj[z]))
                            for sel in range(1, (1 << len(nbrs)) - 1):
                                part1 = tuple(nbrs[i] for i in range(len(nbrs)) if sel >> i & 1)
                                part2 = tuple(nbrs[i] for i in range(len(nbrs)) if not sel >> i & 1)
                                node = Node(t1, t2, edge, z, (part1, part2))
                                g = _realize(node)
                                key = canonical_form(g).key
                                if key not in found:
                                    found[key] = node
        levels.append(found)
    out: list[OreTree] = []
    for level in levels:
        out.extend(level[key] for key in sorted(level))
    return tuple(out)


@lru_cache(maxsize=None)
def gadget_catalog(k: int, max_steps: int) -> tuple[Gadget, ...]:
    """Every gadget obtainable from the ore_catalog, deduplicated by the
    canonical form of the stripped graph together with the canonical
    positions of its key vertices."""
    from .structure import clusters

    out: list[Gadget] = []
    seen: set[tuple] = set()
    for tree in ore_catalog(k, max_steps):
        g = _realize(tree)
        eligible = {
            v
            for c in clusters(g, k)
            if len(c.vertices) >= 2
            for v in c.vertices
        }
        for x in sorted(eligible):
            gadget = make_gadget(tree, x)
            cf = canonical_form(gadget.graph)
            pos = {v: i for i, v in enumerate(cf.labeling)}
            sig = (cf.key, frozenset(pos[v] for v in gadget.key_vertices))
            if sig in seen:
                continue
            seen.add(sig)
            out.append(gadget)
    return tuple(out)
