"""Brute-force references for checking the solvers.

Two independent ground truths: per-threshold BFS from every source, and, for
very small graphs, exhaustive enumeration of simple paths. Neither shares code
with the semiring kernels or the persistent-tree solver.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from decimal import Decimal

from .apsp import ApspAfResult
from .graph import Graph, distinct_capacities, generate_random
from .staircase import push_pair

CORPUS_CAPS = (1, 2, 4, 8, 9)
CORPUS_SEEDS = range(1, 501)
ENUM_MAX_N = 8


def _bfs(g: Graph, src: int, min_cap: Decimal) -> list[int | None]:
    dist: list[int | None] = [None] * (g.n + 1)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v, c in g.out_adj[u]:
            if c >= min_cap and dist[v] is None:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def oracle_apsp_af_bfs(g: Graph) -> ApspAfResult:
    """One BFS per (source, distinct capacity) on the edges that carry it."""
    n = g.n
    fr = distinct_capacities(g)
    stairs = [[[] for _ in range(n)] for _ in range(n)]
    for f in fr.values:
        for s in range(1, n + 1):
            dist = _bfs(g, s, f)
            for t in range(1, n + 1):
                if t != s and dist[t] is not None:
                    push_pair(stairs[s - 1][t - 1], dist[t], f)
    table = tuple(tuple(tuple(t) for t in row) for row in stairs)
    return ApspAfResult(n, table, fr, graph=g)


def oracle_apsp_af_enum(g: Graph) -> ApspAfResult:
    """Pareto frontier of (length, path bottleneck) over every simple path."""
    n = g.n
    if n > ENUM_MAX_N:
        raise ValueError(f"enumeration oracle limited to n <= {ENUM_MAX_N}, got {n}")
    best: dict[tuple[int, int], dict[int, Decimal]] = {}

    def walk(start: int, u: int, length: int, width, seen: set[int]) -> None:
        for v, c in g.out_adj[u]:
            if v in seen:
                continue
            w = c if width is None or c < width else width
            per_len = best.setdefault((start, v), {})
            if per_len.get(length + 1, Decimal(0)) < w:
                per_len[length + 1] = w
            seen.add(v)
            walk(start, v, length + 1, w, seen)
            seen.remove(v)

    for s in range(1, n + 1):
        walk(s, s, 0, None, {s})

    table = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            frontier = []
            if i != j:
                for length, w in sorted(best.get((i, j), {}).items()):
                    if not frontier or w > frontier[-1][1]:
                        frontier.append((length, w))
            row.append(tuple(frontier))
        table.append(tuple(row))
    return ApspAfResult(n, tuple(table), distinct_capacities(g), graph=g)


@dataclass(frozen=True)
class ComparisonReport:
    equal: bool
    first_divergence: tuple[int, int, str] | None = None

    def __str__(self) -> str:
        if self.equal:
            return "EQUAL"
        i, j, detail = self.first_divergence
        return f"DIFFER {i} {j} {detail}"


def compare(a: ApspAfResult, b: ApspAfResult) -> ComparisonReport:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    for i in range(a.n):
        for j in range(a.n):
            ta, tb = a.staircases[i][j], b.staircases[i][j]
            if ta != tb:
                return ComparisonReport(False, (i + 1, j + 1, f"{_fmt(ta)} != {_fmt(tb)}"))
    return ComparisonReport(True)


def _fmt(stair) -> str:
    return "(" + ",".join(f"({l},{f})" for l, f in stair) + ")"


def corpus_graph(seed: int) -> Graph:
    """Fixture graph for ``seed``: n in [2, 9], m uniform in [n-1, n(n-1)], caps from CORPUS_CAPS."""
    rng = random.Random(seed)
    n = rng.randint(2, 9)
    m = rng.randint(n - 1, n * (n - 1))
    return generate_random(n, m, CORPUS_CAPS, seed)


def corpus(seeds=CORPUS_SEEDS):
    for seed in seeds:
        yield seed, corpus_graph(seed)
