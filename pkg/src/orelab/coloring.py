"""Exact coloring machinery: decision procedure, chromatic number, edge
criticality, critical-subgraph extraction, and small list-coloring checks.

Everything here is a complete search; answers are never heuristic. Witness
colorings are re-verified against the graph before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import SizeCapError
from .graphs import Graph, bits_of, mask_of


@dataclass
class PartialColoring:
    """Vertex -> color map with colors drawn from 1..palette.

    The assignment need not be total on the host graph; properness is checked
    on demand against whichever graph the coloring is applied to.
    """

    assignment: dict[int, int]
    palette: int

    def colors_used(self) -> set[int]:
        return set(self.assignment.values())

    def is_proper(self, g: Graph) -> bool:
        for v, c in self.assignment.items():
            if not 1 <= c <= self.palette:
                return False
            for u in bits_of(g.adj[v]):
                if self.assignment.get(u) == c:
                    return False
        return True

    def is_total_on(self, vertices: Iterable[int]) -> bool:
        return all(v in self.assignment for v in vertices)


# -- core exact solver -------------------------------------------------------


def _components_masks(adj: Sequence[int], sub: int) -> list[int]:
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
                nxt |= adj[u]
            frontier = nxt & sub & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def first_coloring(adj: Sequence[int], t: int) -> list[int] | None:
    """One proper coloring with colors 0..t-1, or None.

    Exact backtracking: saturation-first vertex choice, per-component search,
    and the usual symmetry break that a new color may only be introduced as
    the next unused one.
    """
    n = len(adj)
    colors = [-1] * n
    if n == 0:
        return colors
    if t <= 0:
        return None
    full = (1 << n) - 1
    for comp in _components_masks(adj, full):
        if not _color_component(adj, comp, t, colors):
            return None
    return colors


def _color_component(adj: Sequence[int], comp: int, t: int, colors: list[int]) -> bool:
    verts = list(bits_of(comp))
    if t >= len(verts):
        for c, v in enumerate(verts):
            colors[v] = c
        return True
    forbid = [0] * len(adj)
    uncolored = set(verts)

    def rec(used: int) -> bool:
        if not uncolored:
            return True
        v = max(
            uncolored,
            key=lambda u: (forbid[u].bit_count(), (adj[u] & comp).bit_count(), -u),
        )
        limit = min(t, used + 1)
        avail = ~forbid[v] & ((1 << limit) - 1)
        if not avail:
            return False
        uncolored.remove(v)
        for c in bits_of(avail):
            bit = 1 << c
            colors[v] = c
            touched = []
            for u in bits_of(adj[v] & comp):
                if u in uncolored and not forbid[u] & bit:
                    forbid[u] |= bit
                    touched.append(u)
            if rec(max(used, c + 1)):
                return True
            for u in touched:
                forbid[u] ^= bit
        colors[v] = -1
        uncolored.add(v)
        return False

    return rec(0)


def colorable(g: Graph, t: int) -> PartialColoring | None:
    """A verified proper t-coloring of all of g, or None if none exists."""
    raw = first_coloring(g.adj, t)
    if raw is None:
        return None
    witness = PartialColoring({v: raw[v] + 1 for v in range(g.n)}, max(t, 1) if g.n else t)
    # independent re-check before handing the witness out
    for u, v in g.edges():
        if witness.assignment[u] == witness.assignment[v]:
            raise AssertionError("solver produced an improper coloring")
    return witness


def chromatic_number(g: Graph) -> int:
    for t in range(g.n + 1):
        if first_coloring(g.adj, t) is not None:
            return t
    raise AssertionError("unreachable: n colors always suffice")


def is_k_critical(g: Graph, k: int) -> bool:
    """Whether chi(g) = k and every proper subgraph is (k-1)-colorable.

    Equivalent test actually run: g is not (k-1)-colorable but g-e is, for
    every edge e. Removing one edge lowers the chromatic number by at most
    one, so those two facts pin chi(g) = k; and if every single-edge-deleted
    subgraph is (k-1)-colorable then so is every proper subgraph, since any
    proper subgraph sits inside some g-e. A vertex of degree < k-1 would let
    a (k-1)-coloring of g minus that vertex extend to g, so the min-degree
    check below is a sound fast rejection.
    """
    if k < 2:
        raise ValueError("criticality is defined here for k >= 2")
    if g.n == 0:
        return False
    if g.min_degree() < k - 1:
        return False
    if first_coloring(g.adj, k - 1) is not None:
        return False
    for u, v in g.edges():
        rows = list(g.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        if first_coloring(rows, k - 1) is None:
            return False
    return True


# -- critical subgraph extraction --------------------------------------------


@dataclass(frozen=True)
class Subgraph:
    """A subgraph of some host graph, recorded in the host's vertex ids."""

    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def to_graph(self) -> tuple[Graph, dict[int, int]]:
        remap = {old: new for new, old in enumerate(self.vertices)}
        g = Graph.from_edges(len(self.vertices), [(remap[u], remap[v]) for u, v in self.edges])
        return g, remap


def _edges_colorable(n: int, edges: Iterable[tuple[int, int]], t: int) -> bool:
    rows = [0] * n
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return first_coloring(rows, t) is not None


def _minimalize(n: int, edges: frozenset, k: int, protected: frozenset) -> frozenset:
    """Drop removable edges in one deterministic pass.

    An edge that is not removable (its deletion makes the graph
    (k-1)-colorable) stays non-removable as other edges are dropped, so a
    single ordered pass reaches an edge-minimal non-(k-1)-colorable subgraph.
    """
    current = set(edges)
    for e in sorted(edges):
        if e in protected:
            continue
        trial = current - {e}
        if not _edges_colorable(n, trial, k - 1):
            current = trial
    return frozenset(current)


def _subgraph_from_edges(edges: frozenset) -> Subgraph:
    verts = sorted({v for e in edges for v in e})
    return Subgraph(tuple(verts), edges)


def find_critical_subgraphs(g: Graph, k: int, limit: int = 6) -> list[Subgraph]:
    """k-critical subgraphs of g, found by protected greedy minimalization.

    Requires g itself to not be (k-1)-colorable. Enumeration restarts with
    each single edge force-deleted first, which surfaces distinct minimal
    subgraphs; at most ``limit`` distinct results are returned.
    """
    if first_coloring(g.adj, k - 1) is not None:
        raise ValueError("graph is (k-1)-colorable; no k-critical subgraph exists")
    all_edges = frozenset(tuple(e) for e in g.edges())
    found: dict[frozenset, Subgraph] = {}
    base = _minimalize(g.n, all_edges, k, frozenset())
    found[base] = _subgraph_from_edges(base)
    for e in sorted(all_edges):
        if len(found) >= limit:
            break
        trial = all_edges - {e}
        if _edges_colorable(g.n, trial, k - 1):
            continue
        w = _minimalize(g.n, frozenset(trial), k, frozenset())
        if w not in found:
            found[w] = _subgraph_from_edges(w)
    return [found[key] for key in sorted(found, key=sorted)]


# -- proper partitions (colorings up to color permutation) -------------------


def color_partitions(
    g: Graph, vertices: Iterable[int], max_classes: int
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All partitions of ``vertices`` into <= max_classes independent classes.

    Exactly one representative per color-permutation orbit is produced
    (restricted-growth enumeration: a vertex may open a new class only after
    all earlier classes were tried).
    """
    verts = sorted(vertices)
    classes: list[list[int]] = []
    masks: list[int] = []

    def rec(i: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == len(verts):
            yield tuple(tuple(c) for c in classes)
            return
        v = verts[i]
        bit = 1 << v
        for ci in range(len(classes)):
            if not masks[ci] & g.adj[v]:
                classes[ci].append(v)
                masks[ci] |= bit
                yield from rec(i + 1)
                classes[ci].pop()
                masks[ci] ^= bit
        if len(classes) < max_classes:
            classes.append([v])
            masks.append(bit)
            yield from rec(i + 1)
            classes.pop()
            masks.pop()

    yield from rec(0)


# -- list coloring (brute force, desk scale) ---------------------------------


def _list_colorable(adj: Sequence[int], lists: list[int]) -> bool:
    n = len(adj)
    assigned = [-1] * n
    avail = list(lists)

    def rec(done: int) -> bool:
        if done == n:
            return True
        v = min(
            (u for u in range(n) if assigned[u] < 0),
            key=lambda u: (avail[u].bit_count(), u),
        )
        options = avail[v]
        if not options:
            return False
        for c in bits_of(options):
            assigned[v] = c
            bit = 1 << c
            touched = []
            for u in bits_of(adj[v]):
                if assigned[u] < 0 and avail[u] & bit:
                    avail[u] ^= bit
                    touched.append(u)
            if rec(done + 1):
                return True
            for u in touched:
                avail[u] |= bit
            assigned[v] = -1
        return False

    return rec(0)


def f_choosable_bruteforce(
    g: Graph, f: Sequence[int] | dict[int, int], universe: int,
    max_vertices: int = 8, max_universe: int = 6,
) -> bool:
    """Whether g is f-choosable for every list assignment from the universe.

    Checks every assignment of f(v)-subsets of {0..universe-1}; caps keep the
    product enumerable. A vertex with f(v) > universe has no admissible lists,
    which makes the statement vacuously true; f(v) = 0 makes it false (for a
    nonempty graph) since the empty list colors nothing.
    """
    if g.n > max_vertices:
        raise SizeCapError("f-choosability vertices", g.n, max_vertices)
    if universe > max_universe:
        raise SizeCapError("f-choosability universe", universe, max_universe)
    fvals = [f[v] for v in range(g.n)]
    if any(x < 0 for x in fvals):
        raise ValueError("list sizes must be nonnegative")
    per_vertex = []
    for v in range(g.n):
        opts = [mask_of(c) for c in combinations(range(universe), fvals[v])]
        per_vertex.append(opts)
    for assignment in product(*per_vertex):
        if not _list_colorable(g.adj, list(assignment)):
            return False
    return True


# -- degree-class edge-count inequality ---------------------------------------


@dataclass(frozen=True)
class EdgeCountCheck:
    """Result of scanning e(A, B0 u B1) < |A| + 2|B0| + 3|B1| over all
    nonempty independent A inside the degree-(k-1) class."""

    ok: bool
    subsets_checked: int
    b0: tuple[int, ...]
    b1: tuple[int, ...]
    violations: tuple[tuple[tuple[int, ...], int, int], ...]


def edge_count_lemma_check(g: Graph, k: int, subset_cap: int = 2 ** 20) -> EdgeCountCheck:
    """Verify the degree-class edge bound on a k-critical graph.

    A ranges over nonempty independent subsets of the degree-(k-1) vertices;
    B0 and B1 are the full degree-k and degree-(k+1) classes. (With A empty
    the inequality is trivial or degenerate, so only nonempty A is scanned.)
    """
    if not is_k_critical(g, k):
        raise ValueError("edge-count inequality only applies to k-critical graphs")
    low = [v for v in range(g.n) if g.degree(v) == k - 1]
    b0 = tuple(v for v in range(g.n) if g.degree(v) == k)
    b1 = tuple(v for v in range(g.n) if g.degree(v) == k + 1)
    if 1 << len(low) > subset_cap:
        raise SizeCapError("independent-subset scan", 1 << len(low), subset_cap)
    bmask = mask_of(b0) | mask_of(b1)
    rhs_b = 2 * len(b0) + 3 * len(b1)
    violations = []
    checked = 0

    def rec(idx: int, chosen: list[int], chosen_mask: int, lhs: int):
        nonlocal checked
        if chosen:
            checked += 1
            if lhs >= len(chosen) + rhs_b:
                violations.append((tuple(chosen), lhs, len(chosen) + rhs_b))
        for j in range(idx, len(low)):
            v = low[j]
            if g.adj[v] & chosen_mask:
                continue
            chosen.append(v)
            rec(j + 1, chosen, chosen_mask | (1 << v), lhs + (g.adj[v] & bmask).bit_count())
            chosen.pop()

    rec(0, [], 0, 0)
    return EdgeCountCheck(not violations, checked, b0, b1, tuple(violations))
