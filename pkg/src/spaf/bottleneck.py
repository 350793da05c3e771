"""Bottleneck of the entire network.

The network bottleneck is the smallest pairwise bottleneck over all ordered
pairs. It exists only for strongly connected graphs; otherwise the result
value is ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal

import numpy as np

from .graph import Graph, distinct_capacities, rank_matrix
from .semiring import bool_closure, maxmin_closure


@dataclass(frozen=True)
class BottleneckResult:
    value: Decimal | None
    probe_count: int = 0
    degenerate: bool = False  # n < 2: no ordered pair exists


def strongly_connected_at(ranks: np.ndarray, t: int) -> bool:
    """Is the subgraph of edges with rank >= t strongly connected?"""
    return bool(bool_closure(ranks >= t).all())


def network_bottleneck(g: Graph) -> BottleneckResult:
    """Binary search over the sorted distinct capacities with a reachability probe."""
    if g.n < 2:
        return BottleneckResult(None, 0, degenerate=True)
    fr = distinct_capacities(g)
    ranks = rank_matrix(g, fr)
    probes = 0
    best = None
    lo, hi = 1, fr.d
    while lo <= hi:
        mid = (lo + hi) // 2
        probes += 1
        if strongly_connected_at(ranks, mid):
            best = mid
            lo = mid + 1
        else:
            hi = mid - 1
    return BottleneckResult(None if best is None else fr.value(best), probes)


def network_bottleneck_oracle(g: Graph) -> BottleneckResult:
    """Minimum off-diagonal entry of the (max,min) closure."""
    if g.n < 2:
        return BottleneckResult(None, 0, degenerate=True)
    fr = distinct_capacities(g)
    closure = maxmin_closure(rank_matrix(g, fr))
    off = closure[~np.eye(g.n, dtype=bool)]
    low = int(off.min())
    return BottleneckResult(None if low == 0 else fr.value(low), 0)
