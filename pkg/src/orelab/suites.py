"""Verification suites: each suite replays one finite-checkable claim over a
corpus and reports one row per checked instance, carrying exact values so any
row can be re-verified by hand.

A suite passes only if it produced at least one passing row and no failing
row; rows skipped at a size cap are counted but never treated as passes.
All randomness flows through one seeded generator echoed in the config, so a
suite result is a pure function of (corpus, params).
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

from .census import Corpus, census_critical, graph_classes, random_graph
from .coloring import chromatic_number, edge_count_lemma_check
from .discharging import charge_report
from .errors import SizeCapError
from .graphs import Graph, canonical_key, cliques_of_size, graph6_decode, graph6_encode
from .orekit import Leaf, Node, OreTree, is_k_ore, ore_catalog, random_ore_tree, realize
from .packing import compute_T, compute_T_bruteforce
from .potential import (
    PotentialParams,
    complete_graph_T,
    complete_potential,
    ky_edge_bound,
    main_potential_bound,
    rho,
    rho_ky,
    rho_subset,
)
from .structure import build_extension, find_diamonds_emeralds, mic, minimum_colorings

SUITE_IDS = (
    "ky-bound",
    "ky-equality-ore",
    "main2-potential",
    "t-superadd",
    "t-lower",
    "diamond-emerald",
    "extension-potential",
    "kernel-ineq",
    "mic-ineq",
    "charge-identity",
    "packing-oracle",
    "coloring-oracle",
    "graph6-roundtrip",
)

DEFAULT_SEED = 20250801

PASS = "pass"
FAIL = "fail"
SKIP = "skip-cap"


@dataclass(frozen=True)
class SuiteRow:
    graph6: str
    claim: str
    values: tuple[tuple[str, str], ...]
    status: str


@dataclass(frozen=True)
class SuiteResult:
    suite_id: str
    rows: tuple[SuiteRow, ...]
    config: tuple[tuple[str, str], ...]

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIP: 0}
        for r in self.rows:
            out[r.status] += 1
        return out

    @property
    def passed(self) -> bool:
        c = self.counts()
        return c[FAIL] == 0 and c[PASS] > 0

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite_id,
            "config": dict(self.config),
            "counts": self.counts(),
            "passed": self.passed,
            "rows": [
                {
                    "graph6": r.graph6,
                    "claim": r.claim,
                    "status": r.status,
                    "values": dict(r.values),
                }
                for r in self.rows
            ],
        }

    def csv_rows(self) -> list[list[str]]:
        head = ["graph6", "claim", "status", "values"]
        body = [
            [r.graph6, r.claim, r.status, ";".join(f"{k}={v}" for k, v in r.values)]
            for r in self.rows
        ]
        return [head] + body


def _vals(**kwargs) -> tuple[tuple[str, str], ...]:
    return tuple(sorted((k, str(v)) for k, v in kwargs.items()))


def _row(g6: str, claim: str, ok: bool, **values) -> SuiteRow:
    return SuiteRow(g6, claim, _vals(**values), PASS if ok else FAIL)


def _pool_map(fn: Callable, items: Sequence) -> list:
    threads = int(os.environ.get("ORELAB_THREADS", "1") or "1")
    if threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _graphs_of(corpus) -> list[Graph]:
    if corpus is None:
        return []
    if isinstance(corpus, Corpus):
        return list(corpus.graphs)
    return list(corpus)


def _walk_nodes(tree: OreTree):
    if isinstance(tree, Node):
        yield tree
        yield from _walk_nodes(tree.edge_side)
        yield from _walk_nodes(tree.split_side)


def _trees_from_params(params: dict) -> list[OreTree]:
    trees = params.get("trees")
    if trees is not None:
        return list(trees)
    k = params["k"]
    rng = random.Random(params["seed"])
    count = params.get("tree_count", 200)
    l_max = params.get("l_max", 3)
    return [
        random_ore_tree(k, rng.randrange(1, l_max + 1), rng) for _ in range(count)
    ]


# -- individual suites ---------------------------------------------------------


def _suite_ky_bound(graphs, trees, params):
    k = params["k"]

    def one(g: Graph):
        bound = ky_edge_bound(g.n, k)
        m = g.edge_count()
        return [
            _row(
                graph6_encode(g),
                "critical graph meets the ceiling edge bound",
                m >= bound,
                n=g.n,
                m=m,
                bound=bound,
            )
        ]

    return _pool_map(one, graphs)


def _suite_ky_equality_ore(graphs, trees, params):
    k = params["k"]
    cap = params.get("caps", {}).get("recognition", 25)

    def one(g: Graph):
        g6 = graph6_encode(g)
        target = rho_ky(g, k) == k * (k - 3)
        try:
            witness = is_k_ore(g, k, cap=cap)
        except SizeCapError as err:
            return [
                SuiteRow(
                    g6,
                    "integer potential is extremal exactly for composed graphs",
                    _vals(note=str(err)),
                    SKIP,
                )
            ]
        return [
            _row(
                g6,
                "integer potential is extremal exactly for composed graphs",
                target == (witness is not None),
                rho_ky=rho_ky(g, k),
                extremal=target,
                recognized=witness is not None,
            )
        ]

    return _pool_map(one, graphs)


def _suite_main2_potential(graphs, trees, params):
    k = params["k"]
    par = PotentialParams.for_k(k)

    def one(tree: OreTree):
        g = realize(tree, k)
        t_val = compute_T(g, k).value
        value = rho(g, k, t_val)
        g6 = graph6_encode(g)
        if isinstance(tree, Leaf):
            expect = Fraction(k * (k - 3)) + k * par.eps - 2 * par.delta
            return [
                _row(
                    g6,
                    "complete graph hits its exact potential value",
                    value == expect,
                    n=g.n,
                    t=t_val,
                    rho=value,
                    expected=expect,
                )
            ]
        bound = main_potential_bound(g.n, k)
        return [
            _row(
                g6,
                "composed graph stays under the potential bound",
                value <= bound,
                n=g.n,
                m=g.edge_count(),
                t=t_val,
                rho=value,
                bound=bound,
                equality=value == bound,
            )
        ]

    return _pool_map(one, trees)


def _suite_t_superadd(graphs, trees, params):
    k = params["k"]

    def one(tree: OreTree):
        rows = []
        for node in _walk_nodes(tree):
            g = realize(node, k)
            t = compute_T(g, k).value
            t1 = compute_T(realize(node.edge_side, k), k).value
            t2 = compute_T(realize(node.split_side, k), k).value
            g6 = graph6_encode(g)
            left_leaf = isinstance(node.edge_side, Leaf)
            right_leaf = isinstance(node.split_side, Leaf)
            if left_leaf and right_leaf:
                rows.append(
                    _row(
                        g6,
                        "double complete composition packs exactly 4",
                        t == 4,
                        t=t,
                        t1=t1,
                        t2=t2,
                    )
                )
                continue
            drop = 1 if (left_leaf or right_leaf) else 2
            rows.append(
                _row(
                    g6,
                    "packing value is superadditive under composition",
                    t >= t1 + t2 - drop,
                    t=t,
                    t1=t1,
                    t2=t2,
                    allowed_drop=drop,
                )
            )
        return rows

    return _pool_map(one, trees)


def _suite_t_lower(graphs, trees, params):
    k = params["k"]

    def one(tree: OreTree):
        if isinstance(tree, Leaf):
            return []
        g = realize(tree, k)
        t = compute_T(g, k).value
        bound = Fraction(2) + Fraction(g.n - 1, k - 1)
        return [
            _row(
                graph6_encode(g),
                "composed graph packing value clears the size bound",
                Fraction(t) >= bound,
                n=g.n,
                t=t,
                bound=bound,
            )
        ]

    return _pool_map(one, trees)


def _suite_diamond_emerald(graphs, trees, params):
    k = params["k"]

    def one(tree: OreTree):
        g = realize(tree, k)
        g6 = graph6_encode(g)
        rows = []
        for v in range(g.n):
            hits = find_diamonds_emeralds(g, k, forbidden=(v,))
            rows.append(
                _row(
                    g6,
                    "near-clique witness avoiding one vertex",
                    bool(hits),
                    forbidden=v,
                    witnesses=len(hits),
                )
            )
        if g.n > k:
            for clique in cliques_of_size(g, k - 1):
                hits = find_diamonds_emeralds(g, k, forbidden=clique)
                rows.append(
                    _row(
                        g6,
                        "near-clique witness avoiding a full clique",
                        bool(hits),
                        forbidden="+".join(map(str, clique)),
                        witnesses=len(hits),
                    )
                )
        return rows

    return _pool_map(one, trees)


def _suite_extension_potential(graphs, trees, params):
    k = params["k"]
    par = PotentialParams.for_k(k)
    r_sizes = params.get("r_sizes", (3, 4, 5))
    per_graph = params.get("caps", {}).get("extensions_per_graph", 30)
    colorings_cap = params.get("caps", {}).get("colorings_per_subset", 2)
    w_limit = params.get("caps", {}).get("witnesses_per_reduction", 3)

    def one(g: Graph):
        g6 = graph6_encode(g)
        rows = []
        for size in r_sizes:
            if size >= g.n:
                continue
            for r_set in combinations(range(g.n), size):
                for phi in minimum_colorings(g, r_set, k, limit=colorings_cap):
                    for rec in build_extension(g, k, r_set, phi, limit=w_limit):
                        w_graph, _ = rec.w_subgraph.to_graph()
                        lhs = rho_subset(g, rec.r_prime, k)
                        x = len(rec.core)
                        rhs = (
                            rho_subset(g, r_set, k)
                            + rho(w_graph, k, compute_T(w_graph, k).value)
                            - (
                                complete_potential(x, k)
                                + par.delta * complete_graph_T(x, k)
                                - par.delta * x
                            )
                        )
                        rows.append(
                            _row(
                                g6,
                                "extension never raises the subset potential past the drop bound",
                                lhs <= rhs,
                                r="+".join(map(str, r_set)),
                                r_prime="+".join(map(str, sorted(rec.r_prime))),
                                core=x,
                                incompleteness=rec.incompleteness,
                                lhs=lhs,
                                rhs=rhs,
                            )
                        )
                        if len(rows) >= per_graph:
                            return rows
        return rows

    return _pool_map(one, graphs)


def _suite_kernel_ineq(graphs, trees, params):
    k = params["k"]
    cap = params.get("caps", {}).get("subset_cap", 2 ** 20)

    def one(g: Graph):
        g6 = graph6_encode(g)
        claim = "independent low-degree sets meet the strict edge count bound"
        try:
            check = edge_count_lemma_check(g, k, subset_cap=cap)
        except SizeCapError as err:
            return [SuiteRow(g6, claim, _vals(note=str(err)), SKIP)]
        return [
            _row(
                g6,
                claim,
                check.ok,
                subsets=check.subsets_checked,
                b0=len(check.b0),
                b1=len(check.b1),
                violations=len(check.violations),
            )
        ]

    return _pool_map(one, graphs)


def _suite_mic_ineq(graphs, trees, params):
    k = params["k"]

    def one(g: Graph):
        value, _ = mic(g)
        return [
            _row(
                graph6_encode(g),
                "doubled edge count beats the degree-weighted independence term",
                2 * g.edge_count() > (k - 2) * g.n + value,
                n=g.n,
                m=g.edge_count(),
                mic=value,
            )
        ]

    return _pool_map(one, graphs)


def _suite_charge_identity(graphs, trees, params):
    k = params["k"]
    cap = params.get("caps", {}).get("gadget_steps", 2)

    def one(g: Graph):
        g6 = graph6_encode(g)
        claim = "initial charge totals the potential and the rules conserve it"
        try:
            report = charge_report(g, k, ore_catalog_cap=cap)
        except AssertionError as err:
            return [SuiteRow(g6, claim, _vals(note=str(err)), FAIL)]
        return [
            _row(
                g6,
                claim,
                report.total_charge == report.rho_plus_delta_t
                and report.ledger.total_initial() == report.ledger.total_final(),
                total=report.total_charge,
                rho_plus=report.rho_plus_delta_t,
            )
        ]

    return _pool_map(one, graphs)


def _suite_packing_oracle(graphs, trees, params):
    k = params["k"]

    def one(g: Graph):
        fast = compute_T(g, k).value
        slow = compute_T_bruteforce(g, k)
        return [
            _row(
                graph6_encode(g),
                "packer agrees with the independent oracle",
                fast == slow,
                fast=fast,
                oracle=slow,
            )
        ]

    return _pool_map(one, graphs)


def _chromatic_oracle(g: Graph) -> int:
    if g.n == 0:
        return 0
    nbrs = [tuple(u for u in g.neighbors(v) if u < v) for v in range(g.n)]

    def assignable(t: int) -> bool:
        colors = [0] * g.n

        def rec(v: int) -> bool:
            if v == g.n:
                return True
            for c in range(1, t + 1):
                if all(colors[u] != c for u in nbrs[v]):
                    colors[v] = c
                    if rec(v + 1):
                        return True
            colors[v] = 0
            return False

        return rec(0)

    for t in range(1, g.n + 1):
        if assignable(t):
            return t
    raise AssertionError("n colors always suffice")


def _suite_coloring_oracle(graphs, trees, params):
    def one(g: Graph):
        fast = chromatic_number(g)
        slow = _chromatic_oracle(g)
        return [
            _row(
                graph6_encode(g),
                "solver chromatic number agrees with plain backtracking",
                fast == slow,
                fast=fast,
                oracle=slow,
            )
        ]

    return _pool_map(one, graphs)


def _suite_graph6_roundtrip(graphs, trees, params):
    def one(g: Graph):
        g6 = graph6_encode(g)
        back = graph6_decode(g6)
        # per-item generator keeps rows independent of pool scheduling
        rng = random.Random(f"{params['seed']}:{g6}")
        perm = list(range(g.n))
        rng.shuffle(perm)
        shuffled = g.relabelled(perm)
        return [
            _row(g6, "decode inverts encode", back == g, n=g.n, m=g.edge_count()),
            _row(
                g6,
                "canonical form ignores labeling",
                canonical_key(shuffled) == canonical_key(g),
                n=g.n,
            ),
        ]

    return _pool_map(one, graphs)


_SUITES = {
    "ky-bound": (_suite_ky_bound, "graphs", None),
    "ky-equality-ore": (_suite_ky_equality_ore, "graphs", None),
    "main2-potential": (_suite_main2_potential, "trees", None),
    "t-superadd": (_suite_t_superadd, "trees", None),
    "t-lower": (_suite_t_lower, "trees", None),
    "diamond-emerald": (_suite_diamond_emerald, "trees", "catalog"),
    "extension-potential": (_suite_extension_potential, "graphs", "census"),
    "kernel-ineq": (_suite_kernel_ineq, "graphs", "census"),
    "mic-ineq": (_suite_mic_ineq, "graphs", "census"),
    "charge-identity": (_suite_charge_identity, "graphs", "enum+random"),
    "packing-oracle": (_suite_packing_oracle, "graphs", "random"),
    "coloring-oracle": (_suite_coloring_oracle, "graphs", "enum"),
    "graph6-roundtrip": (_suite_graph6_roundtrip, "graphs", "enum"),
}


def _default_graphs(kind: str | None, params: dict) -> list[Graph]:
    k = params["k"]
    seed = params["seed"]
    if kind == "census":
        return list(census_critical(params.get("census_max", 8), k).graphs)
    if kind == "enum":
        out: list[Graph] = []
        for n in range(1, params.get("enum_max", 6) + 1):
            out.extend(graph_classes(n))
        return out
    if kind == "enum+random":
        out = []
        for n in range(1, params.get("enum_max", 6) + 1):
            out.extend(graph_classes(n))
        rng = random.Random(seed)
        for _ in range(params.get("random_count", 100)):
            out.append(random_graph(rng, rng.randrange(1, 11)))
        return out
    if kind == "random":
        rng = random.Random(seed)
        return [
            random_graph(rng, rng.randrange(1, 11))
            for _ in range(params.get("random_count", 500))
        ]
    return []


def run_suite(suite_id: str, corpus=None, params: dict | None = None) -> SuiteResult:
    """Run one named suite and return its sorted, re-verifiable rows.

    ``corpus`` may be a Corpus, an iterable of graphs, or None to let the
    suite build its documented default input. Tree-driven suites read
    ``params["trees"]`` and otherwise generate seeded random composition
    trees (or, for the near-clique suite, the exhaustive catalog).
    """
    if suite_id not in _SUITES:
        raise ValueError(f"unknown suite id {suite_id!r}; expected one of {', '.join(SUITE_IDS)}")
    p = {"k": 4, "seed": DEFAULT_SEED, "caps": {}}
    p.update(params or {})
    fn, feed, default_kind = _SUITES[suite_id]
    graphs = _graphs_of(corpus)
    trees: list[OreTree] = []
    if feed == "trees":
        if default_kind == "catalog" and "trees" not in p:
            trees = list(ore_catalog(p["k"], p.get("l_max", 2)))
        else:
            trees = _trees_from_params(p)
    elif not graphs:
        graphs = _default_graphs(default_kind, p)
    rows = []
    for chunk in fn(graphs, trees, p):
        rows.extend(chunk if isinstance(chunk, list) else [chunk])
    rows.sort(key=lambda r: (r.graph6, r.claim, r.values))
    config = _vals(
        suite=suite_id,
        k=p["k"],
        seed=p["seed"],
        caps=";".join(f"{a}={b}" for a, b in sorted(p["caps"].items())),
        graphs=len(graphs),
        trees=len(trees),
    )
    return SuiteResult(suite_id, tuple(rows), config)
