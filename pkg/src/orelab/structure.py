"""Local structure around degree-(k-1) vertices and subset machinery:
clusters, near-cliques, cloning, color reductions with critical extensions,
collapsibility, small edge additions, and the weighted independence number.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .coloring import (
    PartialColoring,
    Subgraph,
    _edges_colorable,
    _minimalize,
    chromatic_number,
    color_partitions,
    find_critical_subgraphs,
    first_coloring,
    is_k_critical,
)
from .errors import SizeCapError
from .graphs import Graph, bits_of, cliques_of_size, mask_of


# -- clusters ----------------------------------------------------------------


@dataclass(frozen=True)
class Cluster:
    """A maximal set of degree-(k-1) vertices sharing one closed neighborhood.

    Members are pairwise adjacent (each lies in the other's closed
    neighborhood), so a cluster is a clique of mutually cloned vertices.
    """

    vertices: frozenset[int]
    closed_neighborhood: frozenset[int]


def clusters(g: Graph, k: int) -> list[Cluster]:
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        if g.degree(v) == k - 1:
            groups.setdefault(g.closed_mask(v), []).append(v)
    out = [
        Cluster(frozenset(vs), frozenset(bits_of(m)))
        for m, vs in groups.items()
    ]
    out.sort(key=lambda c: min(c.vertices))
    return out


def cluster_of(g: Graph, k: int, v: int) -> Cluster | None:
    for c in clusters(g, k):
        if v in c.vertices:
            return c
    return None


# -- diamonds and emeralds ---------------------------------------------------


@dataclass(frozen=True)
class NearClique:
    """A diamond (K_k minus one edge, interior pinned to degree k-1) or an
    emerald (K_{k-1} with every vertex of host degree k-1)."""

    kind: str  # "diamond" | "emerald"
    vertices: frozenset[int]
    endpoints: tuple[int, int] | None

    def __post_init__(self):
        if self.kind not in ("diamond", "emerald"):
            raise ValueError(f"unknown near-clique kind {self.kind!r}")
        if (self.kind == "diamond") != (self.endpoints is not None):
            raise ValueError("diamonds and only diamonds carry endpoints")


def find_diamonds_emeralds(
    g: Graph, k: int, forbidden: Iterable[int] = ()
) -> list[NearClique]:
    """All diamonds and emeralds vertex-disjoint from ``forbidden``.

    Diamond: a k-set inducing K_k minus exactly the edge between its two
    endpoints, with every interior vertex of full host degree k-1. The
    missing endpoint pair is required to be a non-edge of the host; if it
    were present the set would induce K_k outright.
    Emerald: a (k-1)-clique whose vertices all have host degree k-1.
    """
    forb = mask_of(forbidden)
    out: list[NearClique] = []
    low = [v for v in range(g.n) if g.degree(v) == k - 1]
    low_mask = mask_of(low)
    for cl in cliques_of_size(g, k - 1):
        m = mask_of(cl)
        if m & forb or m & low_mask != m:
            continue
        out.append(NearClique("emerald", frozenset(cl), None))
    for interior in cliques_of_size(g, k - 2):
        im = mask_of(interior)
        if im & forb or im & low_mask != im:
            continue
        common = g.full_mask() & ~im
        for q in interior:
            common &= g.adj[q]
        common &= ~forb
        for u in bits_of(common):
            for v in bits_of(common & ~((1 << (u + 1)) - 1)):
                if g.has_edge(u, v):
                    continue
                out.append(
                    NearClique("diamond", frozenset(interior) | {u, v}, (u, v))
                )
    out.sort(key=lambda d: (d.kind, sorted(d.vertices)))
    return out


# -- cloning -----------------------------------------------------------------


def clone(g: Graph, k: int, x: int, y: int) -> Graph:
    """Replace neighbor y of x (deg x = k-1) by a fresh copy of x.

    The copy is adjacent to x and to all of x's other neighbors. y's removal
    renumbers survivors densely; the copy takes the final id, so the result
    has the same vertex count as g. If y already sits in x's cluster the
    result is isomorphic to g.
    """
    if not g.has_edge(x, y):
        raise ValueError(f"({x},{y}) must be an edge")
    if g.degree(x) != k - 1:
        raise ValueError(f"cloned vertex must have degree {k - 1}, got {g.degree(x)}")
    stripped, remap = g.delete_vertex(y)
    fresh = stripped.n
    rows = list(stripped.adj)
    new_row = 0
    for w in bits_of(g.adj[x] & ~(1 << y)):
        new_row |= 1 << remap[w]
    new_row |= 1 << remap[x]
    out_rows = []
    for v in range(fresh):
        row = rows[v]
        if new_row >> v & 1:
            row |= 1 << fresh
        out_rows.append(row)
    out_rows.append(new_row)
    return Graph(fresh + 1, tuple(out_rows))


# -- color reduction and critical extensions ---------------------------------


@dataclass(frozen=True)
class ColorReduction:
    """The quotient graph formed by collapsing each color class of a minimum
    coloring of G[R] to one vertex, with a clique on the class vertices.

    ``vertex_map`` renumbers the outside (non-R) vertices; ``class_vertex``
    names the vertex carrying each color class.
    """

    graph: Graph
    vertex_map: dict[int, int]
    class_vertex: dict[int, int]
    r_set: frozenset[int]


def color_reduce(g: Graph, r_set: Iterable[int], phi: PartialColoring) -> ColorReduction:
    """Collapse color classes of R and join the class vertices into a clique.

    phi must be proper and total on G[R] and use exactly chi(G[R]) distinct
    colors. Outside vertices come first (in increasing original id), class
    vertices follow in increasing color order.
    """
    r = frozenset(r_set)
    if not r <= set(range(g.n)):
        raise ValueError("R contains ids outside the graph")
    if not phi.is_total_on(r):
        raise ValueError("coloring must assign every vertex of R")
    sub, submap = g.induced(r)
    sub_phi = {submap[v]: phi.assignment[v] for v in r}
    for u, w in sub.edges():
        if sub_phi[u] == sub_phi[w]:
            raise ValueError("coloring is not proper on G[R]")
    used = sorted({phi.assignment[v] for v in r})
    need = chromatic_number(sub)
    if len(used) != need:
        raise ValueError(f"coloring uses {len(used)} colors; minimum is {need}")
    outside = [v for v in range(g.n) if v not in r]
    vertex_map = {old: new for new, old in enumerate(outside)}
    class_vertex = {c: len(outside) + i for i, c in enumerate(used)}
    edges = set()
    for u, w in g.edges():
        iu, iw = u in r, w in r
        if iu and iw:
            continue
        if not iu and not iw:
            edges.add((vertex_map[u], vertex_map[w]))
        else:
            inside, out_v = (u, w) if iu else (w, u)
            a, b = class_vertex[phi.assignment[inside]], vertex_map[out_v]
            edges.add((min(a, b), max(a, b)))
    for c1, c2 in combinations(used, 2):
        edges.add((class_vertex[c1], class_vertex[c2]))
    reduced = Graph.from_edges(len(outside) + len(used), sorted(edges))
    return ColorReduction(reduced, vertex_map, class_vertex, r)


@dataclass(frozen=True)
class ExtensionRecord:
    """One critical extension of a subset R.

    ``w_subgraph`` lives in the reduced graph's ids; ``core`` is the set of
    class vertices W touches; ``r_prime`` is the extended subset back in the
    host graph's ids. ``incompleteness`` counts how far the edge bookkeeping
    identity falls short of equality (always >= 0).
    """

    r_set: frozenset[int]
    phi: tuple[tuple[int, int], ...]
    w_subgraph: Subgraph
    core: tuple[int, ...]
    r_prime: frozenset[int]
    incompleteness: int
    spanning: bool

    def core_size(self) -> int:
        return len(self.core)

    def to_json_dict(self) -> dict:
        return {
            "r_set": sorted(self.r_set),
            "phi": [list(p) for p in self.phi],
            "w_vertices": list(self.w_subgraph.vertices),
            "w_edges": sorted(map(list, self.w_subgraph.edges)),
            "core": list(self.core),
            "r_prime": sorted(self.r_prime),
            "incompleteness": self.incompleteness,
            "spanning": self.spanning,
        }


def build_extension(
    g: Graph, k: int, r_set: Iterable[int], phi: PartialColoring, limit: int = 6
) -> list[ExtensionRecord]:
    """Critical extensions of R under phi in a k-critical host.

    The reduced graph of a k-critical host is never (k-1)-colorable, so it
    holds k-critical subgraphs W; each W meets the class-vertex clique, and
    swapping the touched class vertices for their color classes extends R
    to R'. The incompleteness i compares |E(G[R'])| against
    |E(G[R])| + |E(W)| - |E(K_|X|)|; double-covered quotient edges, missing
    clique edges, and parallel boundary edges can only push the left side up,
    so i >= 0 is asserted.
    """
    if not is_k_critical(g, k):
        raise ValueError("extensions are built over a k-critical host")
    r = frozenset(r_set)
    if not r or r == set(range(g.n)):
        raise ValueError("R must be a nonempty proper subset")
    reduction = color_reduce(g, r, phi)
    h = reduction.graph
    if first_coloring(h.adj, k - 1) is not None:
        raise AssertionError("reduced graph of a critical host must need k colors")
    class_ids = set(reduction.class_vertex.values())
    inv_outside = {new: old for old, new in reduction.vertex_map.items()}
    r_edges = _induced_edge_count(g, r)
    records = []
    for w in find_critical_subgraphs(h, k, limit=limit):
        core = tuple(sorted(set(w.vertices) & class_ids))
        if not core:
            raise AssertionError("critical subgraph avoids every class vertex")
        back = [inv_outside[v] for v in w.vertices if v not in class_ids]
        r_prime = r | set(back)
        x = len(core)
        i = _induced_edge_count(g, r_prime) - (
            r_edges + len(w.edges) - x * (x - 1) // 2
        )
        if i < 0:
            raise AssertionError("incompleteness came out negative")
        records.append(
            ExtensionRecord(
                r_set=r,
                phi=tuple(sorted((v, phi.assignment[v]) for v in r)),
                w_subgraph=w,
                core=core,
                r_prime=frozenset(r_prime),
                incompleteness=i,
                spanning=r_prime == set(range(g.n)),
            )
        )
    return records


def _induced_edge_count(g: Graph, vertices: frozenset[int]) -> int:
    m = mask_of(vertices)
    return sum((g.adj[v] & m).bit_count() for v in vertices) // 2


def minimum_colorings(g: Graph, r_set: Iterable[int], k: int, limit: int | None = None):
    """Yield minimum proper colorings of G[R] as PartialColorings with colors
    1..chi, one per color-permutation class, capped at ``limit``."""
    r = sorted(set(r_set))
    sub, submap = g.induced(r)
    need = chromatic_number(sub)
    if need > k - 1:
        return
    count = 0
    for part in color_partitions(g, r, need):
        coloring = {}
        for color_index, cls in enumerate(part, start=1):
            for v in cls:
                coloring[v] = color_index
        yield PartialColoring(coloring, k - 1)
        count += 1
        if limit is not None and count >= limit:
            return


# -- collapsibility ------------------------------------------------------------


@dataclass(frozen=True)
class CollapsibilityResult:
    """Least i such that every proper (k-1)-coloring of G[R] leaves at most i
    boundary edges outside its largest-boundary color class. ``exact`` is
    False when the coloring enumeration hit its cap (value is then only a
    lower bound); ``colorings`` counts the partitions inspected."""

    value: int
    exact: bool
    colorings: int


def collapsibility(
    g: Graph, k: int, r_set: Iterable[int], partition_cap: int = 100_000
) -> CollapsibilityResult:
    """Exact collapsibility index by scanning colorings up to permutation.

    The inner minimum over colors depends only on the color partition, so one
    representative per permutation class suffices. For each partition the
    cheapest color to keep is the class holding the most boundary edges.
    """
    r = sorted(set(r_set))
    r_mask = mask_of(r)
    out_deg = {v: (g.adj[v] & ~r_mask).bit_count() for v in r}
    total = sum(out_deg.values())
    best = 0
    seen = 0
    exact = True
    for part in color_partitions(g, r, k - 1):
        seen += 1
        if seen > partition_cap:
            exact = False
            break
        largest = max((sum(out_deg[v] for v in cls) for cls in part), default=0)
        best = max(best, total - largest)
    return CollapsibilityResult(best, exact, min(seen, partition_cap))


# -- edge additions -----------------------------------------------------------


@dataclass(frozen=True)
class EdgeAddition:
    """A nonempty set S of non-edges together with a k-critical witness H
    containing S, with H - S a subgraph of the host on a proper vertex
    subset."""

    edges: frozenset[tuple[int, int]]
    witness: Subgraph


def find_edge_addition(
    g: Graph, k: int, budget: int, pool_cap: int = 400
) -> EdgeAddition | None:
    """Search for an edge addition of size at most ``budget``.

    Scans every nonempty set of at most ``budget`` non-edges (lexicographic
    order) and, for each, every excluded vertex; a protected minimalization
    of the augmented graph minus the excluded vertex extracts the witness.
    Returns the first witness found. None means no witness exists within
    this exhaustive scan of the non-edge pool; it is not a nonexistence proof
    beyond the caps.
    """
    non_edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    if len(non_edges) > pool_cap:
        raise SizeCapError("edge-addition pool", len(non_edges), pool_cap)
    for size in range(1, budget + 1):
        for s_edges in combinations(non_edges, size):
            found = _edge_addition_with(g, k, frozenset(s_edges))
            if found is not None:
                return found
    return None


def _edge_addition_with(g: Graph, k: int, s_edges: frozenset) -> EdgeAddition | None:
    base_edges = {tuple(e) for e in g.edges()}
    aug = base_edges | s_edges
    touched = {v for e in s_edges for v in e}
    for v in range(g.n):
        if v in touched:
            continue
        sub_edges = frozenset(e for e in aug if v not in e)
        if _edges_colorable(g.n, sub_edges, k - 1):
            continue
        protected = set(s_edges)
        current = sub_edges
        witness = None
        while protected:
            w_edges = _minimalize(g.n, current, k, frozenset(protected))
            loose = [
                s for s in sorted(protected)
                if not _edges_colorable(g.n, w_edges - {s}, k - 1)
            ]
            if not loose:
                witness = w_edges
                break
            # a protected edge turned out not to be needed: drop it from the
            # graph as well, or the witness could smuggle it back in
            protected.discard(loose[0])
            current = w_edges - {loose[0]}
        if witness is None or not protected:
            continue
        verts = sorted({u for e in witness for u in e})
        sub = Subgraph(tuple(verts), frozenset(witness))
        w_graph, _ = sub.to_graph()
        if not is_k_critical(w_graph, k):
            continue
        return EdgeAddition(frozenset(protected), sub)
    return None


# -- weighted independence -----------------------------------------------------


def mic(g: Graph, max_vertices: int = 40) -> tuple[int, frozenset[int]]:
    """Maximum total degree over independent sets, with a witness set.

    Exact branch and bound: vertices in decreasing-degree order, pruning with
    the remaining degree sum.
    """
    if g.n > max_vertices:
        raise SizeCapError("mic vertex count", g.n, max_vertices)
    degs = [g.degree(v) for v in range(g.n)]
    order = sorted(range(g.n), key=lambda v: (-degs[v], v))
    best_val = -1
    best_set: tuple[int, ...] = ()

    def dfs(cands: list[int], value: int, chosen: list[int]):
        nonlocal best_val, best_set
        if value > best_val:
            best_val = value
            best_set = tuple(chosen)
        if not cands:
            return
        if value + sum(degs[c] for c in cands) <= best_val:
            return
        head, rest = cands[0], cands[1:]
        chosen.append(head)
        dfs([c for c in rest if not g.adj[head] >> c & 1], value + degs[head], chosen)
        chosen.pop()
        dfs(rest, value, chosen)

    dfs(order, 0, [])
    if not g.is_independent(best_set):
        raise AssertionError("mic witness is not independent")
    return best_val, frozenset(best_set)


# -- subset bookkeeping ---------------------------------------------------------


def boundary(g: Graph, r_set: Iterable[int]) -> frozenset[int]:
    """Vertices of R with at least one neighbor outside R."""
    r = frozenset(r_set)
    r_mask = mask_of(r)
    return frozenset(v for v in r if g.adj[v] & ~r_mask)


def edge_between(g: Graph, a_set: Iterable[int], b_set: Iterable[int]) -> int:
    """Number of edges with one endpoint in each set (each edge once)."""
    a = frozenset(a_set)
    b = frozenset(b_set)
    count = 0
    for u, v in g.edges():
        if (u in a and v in b) or (u in b and v in a):
            count += 1
    return count


def twin_pairs(g: Graph) -> int:
    """Pairs of vertices with identical closed neighborhoods."""
    count = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.closed_mask(u) == g.closed_mask(v):
                count += 1
    return count


def size_triple(g: Graph) -> tuple[int, int, int]:
    """Comparison key (|V|, |E|, -twin pairs): fewer vertices, then fewer
    edges, then *more* same-closed-neighborhood pairs counts as smaller."""
    return (g.n, g.edge_count(), -twin_pairs(g))


def smaller(h: Graph, g: Graph) -> bool:
    """Whether h precedes g in the minimal-counterexample order."""
    return size_triple(h) < size_triple(g)
