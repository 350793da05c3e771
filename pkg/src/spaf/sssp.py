"""Single-source shortest paths for all flows.

One shortest-path tree is kept alive across all flow thresholds. Thresholds
are visited in increasing order; at each one every vertex whose bottleneck
dropped below the threshold is cut and re-inserted one level deeper, then the
depth buckets are drained from the root outwards. A vertex's depth never
decreases, so each (vertex, depth) pair is examined at most once over the
whole run and the total edge work is bounded by m(n-1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal

from .graph import Graph, distinct_capacities
from .staircase import Staircase, lookup, push_pair, to_values

_NONE = -1


@dataclass(frozen=True)
class SsspAfResult:
    source: int
    staircases: tuple[Staircase, ...]  # indexed by vertex - 1
    parent_at: dict[tuple[int, int], int]  # (vertex, depth) -> parent, 1-indexed
    graph: Graph = field(repr=False, compare=False)
    edge_inspections: int = field(default=0, compare=False)
    pops: tuple[int, ...] = field(default=(), repr=False, compare=False)
    depth_trace: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False, compare=False)

    def staircase(self, v: int) -> Staircase:
        _check_vertex(self.graph.n, v)
        return self.staircases[v - 1]


def _check_vertex(n: int, v: int) -> None:
    if not 1 <= v <= n:
        raise ValueError(f"vertex {v} out of range 1..{n}")


def sssp_af(g: Graph, s: int, *, trace: bool = False) -> SsspAfResult:
    """Solve SSSP-AF from source ``s`` (1-indexed).

    With ``trace=True`` the result carries every depth assigned to each
    vertex, in order, for instrumentation.
    """
    _check_vertex(g.n, s)
    n = g.n
    fr = distinct_capacities(g)
    top = fr.infinity
    # In-edges with capacities as ranks, 0-indexed.
    in_adj = [
        [(u - 1, fr.rank_of[c]) for u, c in g.in_adj[v + 1]] for v in range(n)
    ]
    src = s - 1
    bott = [0] * n
    depth = [0] * n
    parent = [_NONE] * n
    attached = [False] * n
    retired = [False] * n
    bott[src] = top
    attached[src] = True
    # Attached vertices per depth; an empty depth ends the sweep early.
    at_depth = [0] * n
    at_depth[0] = 1

    stairs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    parent_at: dict[tuple[int, int], int] = {}
    pops = [0] * n
    inspections = 0
    history = [[0] for _ in range(n)] if trace else None
    max_depth = n - 1

    def requeue(v: int, queues: list[list[int]]) -> None:
        depth[v] += 1
        if history is not None:
            history[v].append(depth[v])
        if depth[v] > max_depth:
            # No simple path this long; thresholds only shrink reachability.
            retired[v] = True
        else:
            queues[depth[v]].append(v)

    for f in range(1, fr.d + 1):
        queues: list[list[int]] = [[] for _ in range(n)]
        # Cut everything that can no longer carry f. The tree invariant
        # bott[child] <= bott[parent] means whole subtrees go together.
        # Before the first threshold every non-root vertex is detached with
        # bottleneck 0, so all of them land in queue 1 here.
        for v in range(n):
            if not retired[v] and bott[v] < f:
                if attached[v]:
                    at_depth[depth[v]] -= 1
                attached[v] = False
                parent[v] = _NONE
                requeue(v, queues)
        for level in range(1, n):
            if at_depth[level - 1] == 0:
                # Nothing can attach at this depth or below: whatever is still
                # pending is unreachable for f and every larger threshold.
                for later in queues[level:]:
                    for v in later:
                        retired[v] = True
                break
            bucket = queues[level]
            # Buckets only grow at level + 1 while draining this one.
            for v in bucket:
                pops[v] += 1
                best_u, best_b = _NONE, 0
                for u, c in in_adj[v]:
                    inspections += 1
                    if attached[u] and depth[u] == level - 1 and c >= f:
                        b = c if c < bott[u] else bott[u]
                        if b > best_b:
                            best_u, best_b = u, b
                if best_u != _NONE:
                    attached[v] = True
                    parent[v] = best_u
                    bott[v] = best_b
                    at_depth[level] += 1
                    parent_at[(v + 1, level)] = best_u + 1
                else:
                    requeue(v, queues)
        for v in range(n):
            if v != src and attached[v]:
                push_pair(stairs[v], depth[v], f)

    return SsspAfResult(
        source=s,
        staircases=tuple(to_values(st, fr) for st in stairs),
        parent_at=parent_at,
        graph=g,
        edge_inspections=inspections,
        pops=tuple(pops),
        depth_trace=tuple(tuple(h) for h in history) if history is not None else None,
    )


def query_sssp(res: SsspAfResult, v: int, demand) -> tuple[int, Decimal] | None:
    return lookup(res.staircase(v), demand)


def path_sssp(res: SsspAfResult, v: int, length: int) -> list[int]:
    """Walk recorded parents from (v, length) back to the source."""
    _check_vertex(res.graph.n, v)
    path = [v]
    w = v
    for level in range(length, 0, -1):
        u = res.parent_at.get((w, level))
        if u is None:
            raise LookupError(f"no recorded parent for vertex {w} at depth {level}")
        path.append(u)
        w = u
    if w != res.source:
        raise LookupError(f"parent chain from ({v}, {length}) does not reach the source")
    path.reverse()
    return path
