"""All-pairs shortest paths for all flows.

Three phases:

* acceleration: iterated (max,min)-products of the rank capacity matrix give,
  for every length up to ``r``, the best bottleneck reachable; every strict
  improvement is a staircase step.
* cruising: one distance matrix per flow rank, grown by bridging-set
  (min,+) squaring with horizon ``l -> ceil(3l/2)`` until it covers ``n``.
* finalization: per pair, sweep ranks upwards and extend the staircase.

Paths are not stored; :func:`path_apsp` rebuilds them by stepping greedily
through out-neighbours whose remaining distance matches.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal

import numpy as np

from .graph import FlowRank, Graph, distinct_capacities, rank_matrix
from .semiring import UNREACHABLE, maxmin_identity, maxmin_product
from .staircase import Staircase, dump_result, load_result, lookup, push_pair, to_values

RankStairs = list[list[list[tuple[int, int]]]]


@dataclass(frozen=True)
class ApspAfResult:
    n: int
    staircases: tuple[tuple[Staircase, ...], ...]  # [i-1][j-1]
    flow_rank: FlowRank
    graph: Graph | None = field(default=None, repr=False, compare=False)
    r: int | None = field(default=None, compare=False)
    horizons: tuple[int, ...] = field(default=(), compare=False)
    timings: dict = field(default_factory=dict, repr=False, compare=False)

    def staircase(self, i: int, j: int) -> Staircase:
        _check_vertex(self.n, i)
        _check_vertex(self.n, j)
        return self.staircases[i - 1][j - 1]

    def row(self, i: int) -> tuple[Staircase, ...]:
        _check_vertex(self.n, i)
        return self.staircases[i - 1]

    @property
    def rounds(self) -> int:
        return max(0, len(self.horizons) - 1)


def _check_vertex(n: int, v: int) -> None:
    if not 1 <= v <= n:
        raise ValueError(f"vertex {v} out of range 1..{n}")


def choose_r(n: int, d: int) -> int:
    """Acceleration depth balancing r*n^3 product work against d*n^3/r cruising work."""
    if n < 2:
        raise ValueError("need n >= 2")
    return min(max(math.isqrt(max(d, 0) - 1) + 1 if d > 0 else 1, 1), n - 1)


def acceleration_phase(c: np.ndarray, r: int, top: int | None = None) -> tuple[RankStairs, np.ndarray]:
    """Run ``r`` (max,min)-products; return the staircase seed and ``C^r``.

    ``c`` is a rank capacity matrix (0 = no edge, ``top`` on the diagonal).
    """
    n = c.shape[0]
    if top is None:
        top = int(c.max()) if n else 1
    stairs: RankStairs = [[[] for _ in range(n)] for _ in range(n)]
    prev = maxmin_identity(n, top=top, dtype=c.dtype)
    for length in range(1, r + 1):
        # C * C^(l-1): the witness of each entry is its first hop.
        cur, _ = maxmin_product(c, prev)
        improved = cur > prev
        np.fill_diagonal(improved, False)
        for i, j in zip(*np.nonzero(improved)):
            stairs[i][j].append((length, int(cur[i, j])))
        prev = cur
    return stairs, prev


def init_cruising(stairs: RankStairs, d: int) -> np.ndarray:
    """Expand staircases into one distance matrix per rank: shortest length with flow >= rank."""
    n = len(stairs)
    dist = np.full((d, n, n), UNREACHABLE)
    for i in range(n):
        for j in range(n):
            lo = 0
            for length, f in stairs[i][j]:
                dist[lo:f, i, j] = length
                lo = f
    idx = np.arange(n)
    dist[:, idx, idx] = 0.0
    return dist


def bridging_sets(dist: np.ndarray, ell: int) -> tuple[np.ndarray, np.ndarray]:
    """Per row, the smallest group of equal entries with value in [ceil(l/2), l].

    Ties between equally small groups go to the smaller value. Returns flat
    ``(rows, cols)`` index arrays, rows ascending; rows with no entry in range
    contribute nothing.
    """
    n = dist.shape[0]
    lo = -(-ell // 2)
    hi = min(ell, n - 1)
    if lo > hi:
        return np.empty(0, np.intp), np.empty(0, np.intp)
    span = hi - lo + 1
    in_range = (dist >= lo) & (dist <= hi)
    rows, cols = np.nonzero(in_range)
    if rows.size == 0:
        return rows, cols
    offsets = dist[rows, cols].astype(np.intp) - lo
    counts = np.bincount(rows * span + offsets, minlength=n * span).reshape(n, span)
    masked = np.where(counts > 0, counts, n + 1)
    pick = masked.argmin(axis=1)  # first minimum -> smallest value
    has = counts.max(axis=1) > 0
    chosen = np.where(has, pick + lo, -1).astype(float)
    keep = dist[rows, cols] == chosen[rows]
    return rows[keep], cols[keep]


def _cruise_round(dist: np.ndarray, ell: int, ell1: int) -> np.ndarray:
    rows, ks = bridging_sets(dist, ell)
    if rows.size == 0:
        return dist
    # m[i, j] = min over k in S_i of dist[i, k] + dist[k, j]
    cand = dist[rows, ks][:, None] + dist[ks, :]
    urows, starts = np.unique(rows, return_index=True)
    m = np.minimum.reduceat(cand, starts, axis=0)
    out = dist.copy()
    old = dist[urows]
    out[urows] = np.where(m <= ell1, np.minimum(old, m), old)
    return out


def cruising_phase(dist: np.ndarray, r: int, threads: int = 1) -> tuple[np.ndarray, list[int]]:
    """Grow every per-rank matrix from horizon ``r`` to at least ``n``.

    Returns the new matrices and the horizon trajectory ``[r, ceil(3r/2), ...]``.
    Each round reads only the previous round's matrices.
    """
    d, n, _ = dist.shape if dist.ndim == 3 else (0, 0, 0)
    dist = dist.copy()
    ell = r
    horizons = [ell]
    pool = ThreadPoolExecutor(threads) if threads > 1 and d > 1 else None
    try:
        while ell < n:
            ell1 = -(-3 * ell // 2)
            if pool is None:
                for f in range(d):
                    dist[f] = _cruise_round(dist[f], ell, ell1)
            else:
                done = list(pool.map(lambda f: _cruise_round(dist[f], ell, ell1), range(d)))
                for f, mat in enumerate(done):
                    dist[f] = mat
            ell = ell1
            horizons.append(ell)
    finally:
        if pool is not None:
            pool.shutdown()
    return dist, horizons


def finalize(dist: np.ndarray, stairs: RankStairs) -> RankStairs:
    """Extend each seed staircase by sweeping ranks upwards (replace on equal length)."""
    d = dist.shape[0]
    n = len(stairs)
    out = [[list(stairs[i][j]) for j in range(n)] for i in range(n)]
    # Python ints are much faster to compare than numpy scalars here.
    table = np.where(np.isinf(dist), -1, dist).astype(np.int64).transpose(1, 2, 0).tolist()
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            t = out[i][j]
            lengths = table[i][j]
            for f in range(1, d + 1):
                length = lengths[f - 1]
                if length < 0:
                    continue
                if not t or f > t[-1][1]:
                    push_pair(t, length, f)
    return out


def apsp_af(g: Graph, r: int | None = None, *, threads: int = 1) -> ApspAfResult:
    n = g.n
    fr = distinct_capacities(g)
    timings: dict[str, float] = {}
    if n < 2:
        empty = tuple(tuple(() for _ in range(n)) for _ in range(n))
        return ApspAfResult(n, empty, fr, graph=g, r=0, timings=timings)
    if r is None:
        r = choose_r(n, fr.d)
    if not 1 <= r <= n - 1:
        raise ValueError(f"r={r} outside 1..{n - 1}")
    c = rank_matrix(g, fr)

    t0 = time.perf_counter()
    seed, _ = acceleration_phase(c, r, top=fr.infinity)
    t1 = time.perf_counter()
    dist = init_cruising(seed, fr.d)
    t2 = time.perf_counter()
    dist, horizons = cruising_phase(dist, r, threads=threads)
    t3 = time.perf_counter()
    final = finalize(dist, seed)
    stairs = tuple(tuple(to_values(t, fr) for t in row) for row in final)
    t4 = time.perf_counter()
    timings.update(acceleration=t1 - t0, init=t2 - t1, cruising=t3 - t2, finalize=t4 - t3)
    return ApspAfResult(n, stairs, fr, graph=g, r=r, horizons=tuple(horizons), timings=timings)


def query_apsp(res: ApspAfResult, i: int, j: int, demand) -> tuple[int, Decimal] | None:
    return lookup(res.staircase(i, j), demand)


def path_apsp(res: ApspAfResult, i: int, j: int, demand) -> list[int] | None:
    """Rebuild a quickest path for ``demand`` by greedy successor stepping."""
    hit = query_apsp(res, i, j, demand)
    if hit is None:
        return None
    if res.graph is None:
        raise ValueError("path reconstruction needs the source graph")
    length, flow = hit
    g = res.graph
    path = [i]
    w = i
    for budget in range(length, 0, -1):
        for u, cap in g.out_adj[w]:
            if cap < flow:
                continue
            if budget == 1:
                ok = u == j
            else:
                step = query_apsp(res, u, j, flow)
                ok = step is not None and step[0] == budget - 1
            if ok:
                path.append(u)
                w = u
                break
        else:
            raise RuntimeError(
                f"inconsistent staircases: no successor from {w} towards {j} with {budget} hops left"
            )
    return path


def result_to_json(res: ApspAfResult) -> str:
    pairs = (
        (i + 1, j + 1, res.staircases[i][j]) for i in range(res.n) for j in range(res.n)
    )
    return dump_result(res.n, res.flow_rank, pairs)


def result_from_json(text: str, graph: Graph | None = None) -> ApspAfResult:
    n, fr, stairs = load_result(text)
    if graph is not None and graph.n != n:
        raise ValueError(f"graph has n={graph.n}, result has n={n}")
    table = tuple(
        tuple(stairs.get((i, j), ()) for j in range(1, n + 1)) for i in range(1, n + 1)
    )
    return ApspAfResult(n, table, fr, graph=graph)
