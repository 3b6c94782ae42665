"""Potential functions over exact rationals.

Two potentials appear: the classical one, rho_ky(G) = (k-2)(k+1)|V| -
2(k-1)|E|, and the packing-corrected one, rho(G) = ((k-2)(k+1)+eps)|V| -
2(k-1)|E| - delta*T(G) with eps = 4/(k^3 - 2k^2 + 3k) and delta = (k-1)*eps.
All arithmetic is fractions.Fraction; no floats anywhere in a comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Iterable

from .graphs import Graph
from .packing import compute_T


@dataclass(frozen=True)
class PotentialParams:
    """The pair (eps, delta) attached to a color count k >= 4."""

    k: int
    eps: Fraction
    delta: Fraction

    @staticmethod
    def for_k(k: int) -> "PotentialParams":
        if k < 4:
            raise ValueError("potential parameters require k >= 4")
        eps = Fraction(4, k ** 3 - 2 * k ** 2 + 3 * k)
        delta = (k - 1) * eps
        if not eps <= 1:
            raise AssertionError("eps must not exceed 1")
        return PotentialParams(k, eps, delta)


def rho_ky(g: Graph, k: int) -> int:
    """Classical potential; always an integer."""
    if k < 4:
        raise ValueError("potential requires k >= 4")
    return (k - 2) * (k + 1) * g.n - 2 * (k - 1) * g.edge_count()


def rho_value(n: int, m: int, t_value: int, k: int) -> Fraction:
    """Packing-corrected potential from raw counts (n, m, T)."""
    p = PotentialParams.for_k(k)
    return ((k - 2) * (k + 1) + p.eps) * n - Fraction(2 * (k - 1) * m) - p.delta * t_value


def rho(g: Graph, k: int, t_value: int) -> Fraction:
    """Packing-corrected potential; T is supplied by the caller so a single
    packing computation can be reused across repeated evaluations."""
    return rho_value(g.n, g.edge_count(), t_value, k)


def rho_subset(g: Graph, subset: Iterable[int], k: int) -> Fraction:
    """Potential of an induced subgraph, with T packed on that subgraph."""
    sub, _ = g.induced(subset)
    t_value = compute_T(sub, k).value
    return rho(sub, k, t_value)


def complete_graph_T(order: int, k: int) -> int:
    """Packing value of a complete graph on ``order`` vertices.

    K_order fits one clique at most; an order >= k-1 subgraph holds a
    (k-1)-clique (value 2), order exactly k-2 holds a (k-2)-clique (value 1),
    anything smaller holds nothing.
    """
    if order >= k - 1:
        return 2
    if order == k - 2:
        return 1
    return 0


def complete_potential(order: int, k: int) -> Fraction:
    """rho(K_order) at parameter k, via the formula T values."""
    m = order * (order - 1) // 2
    return rho_value(order, m, complete_graph_T(order, k), k)


@dataclass(frozen=True)
class CompletePotentialTable:
    """rho(K_1..K_k) plus verification flags for the four standard facts:

    1. rho(K_k)   = k(k-3) + k*eps - 2*delta
    2. rho(K_1)   = k^2 - k - 2 + eps
    3. rho(K_k-1) = 2k^2 - 6k + 4 + (k-1)*eps - 2*delta
    4. rho(K_l)  >= 2k^2 - 4k - 2 + 2*eps for 1 < l < k-1

    Fact 4 is a theorem only for k >= 5. At k = 4 the middle range is the
    single order l = 2 = k-2, whose packing value 1 costs delta: the margin
    at l = k-2 is (k-3)(k-4) - 3*eps in general, which is -3*eps at k = 4.
    The flag reports the honest comparison either way.
    """

    k: int
    values: dict[int, Fraction]
    checks: dict[str, bool]

    @property
    def all_ok(self) -> bool:
        return all(self.checks.values())


def complete_potentials(k: int) -> CompletePotentialTable:
    p = PotentialParams.for_k(k)
    values = {order: complete_potential(order, k) for order in range(1, k + 1)}
    checks = {
        "top": values[k] == k * (k - 3) + k * p.eps - 2 * p.delta,
        "single": values[1] == k * k - k - 2 + p.eps,
        "near_top": values[k - 1] == 2 * k * k - 6 * k + 4 + (k - 1) * p.eps - 2 * p.delta,
        "middle": all(
            values[order] >= 2 * k * k - 4 * k - 2 + 2 * p.eps
            for order in range(2, k - 1)
        ),
    }
    return CompletePotentialTable(k, values, checks)


def ky_edge_bound(n: int, k: int) -> int:
    """Integer lower edge bound ceil((k/2 - 1/(k-1))n - k(k-3)/(2(k-1)))."""
    if k < 4:
        raise ValueError("edge bound requires k >= 4")
    if n < k:
        raise ValueError(f"edge bound needs n >= k, got n={n}, k={k}")
    value = (Fraction(k, 2) - Fraction(1, k - 1)) * n - Fraction(k * (k - 3), 2 * (k - 1))
    return ceil(value)


def eps_edge_bound(n: int, k: int, t_value: int) -> Fraction:
    """Packing-corrected lower edge bound, returned as an exact rational.

    The formula is ((k-2)(k+1)+eps)n - k(k-3) + 2*delta - k*eps - delta*T,
    all over 2(k-1). Callers may take the ceiling since edge counts are
    integers; the raw rational is returned unrounded.
    """
    if k < 4:
        raise ValueError("edge bound requires k >= 4")
    if n < k:
        raise ValueError(f"edge bound needs n >= k, got n={n}, k={k}")
    p = PotentialParams.for_k(k)
    numer = (
        ((k - 2) * (k + 1) + p.eps) * n
        - k * (k - 3)
        + 2 * p.delta
        - k * p.eps
        - p.delta * t_value
    )
    return numer / (2 * (k - 1))


def main_potential_bound(n: int, k: int) -> Fraction:
    """Upper bound k(k-3) + n*eps - (2 + (n-1)/(k-1))*delta for the potential
    of a composed graph on n vertices (valid once the graph is not K_k)."""
    p = PotentialParams.for_k(k)
    return k * (k - 3) + n * p.eps - (2 + Fraction(n - 1, k - 1)) * p.delta
