"""Directed unit-cost graphs with positive edge capacities.

Vertices are numbered 1..n on every external surface. Capacities are kept as
:class:`~decimal.Decimal` values so that equality is exact; solvers work on
dense integer ranks (see :class:`FlowRank`) and only map back to values when
building results.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from typing import Iterable, Mapping, Sequence

import numpy as np

# JSON-compatible unsigned decimal literal; results echo these verbatim.
_CAP_LITERAL = re.compile(r"(?:0|[1-9]\d*)(?:\.\d+)?(?:[eE][+-]?\d+)?")


class GraphFormatError(ValueError):
    """Raised for malformed graph files; carries the offending line number."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def _to_capacity(cap) -> tuple[Decimal, str]:
    """Return ``(value, literal)`` for a capacity given as str/int/float/Decimal."""
    literal = cap if isinstance(cap, str) else str(cap)
    literal = literal.strip()
    if not _CAP_LITERAL.fullmatch(literal):
        # Normalise things like Decimal('1E+1') or '+3' if they are still numbers.
        try:
            value = Decimal(literal)
        except InvalidOperation:
            raise ValueError(f"malformed capacity {literal!r}") from None
        if not value.is_finite():
            raise ValueError(f"malformed capacity {literal!r}")
        if value <= 0:
            raise ValueError("non-positive capacity")
        literal = format(value.normalize(), "f")
        if not _CAP_LITERAL.fullmatch(literal):
            raise ValueError(f"malformed capacity {literal!r}")
    value = Decimal(literal)
    if value <= 0:
        raise ValueError("non-positive capacity")
    return value, literal


@dataclass(frozen=True)
class FlowRank:
    """Bijection between the distinct capacity values and ranks 1..d."""

    values: tuple[Decimal, ...]
    literals: tuple[str, ...]
    rank_of: Mapping[Decimal, int] = field(repr=False, compare=False)

    @classmethod
    def from_values(cls, literal_of: Mapping[Decimal, str]) -> "FlowRank":
        values = tuple(sorted(literal_of))
        return cls(
            values=values,
            literals=tuple(literal_of[v] for v in values),
            rank_of={v: k for k, v in enumerate(values, start=1)},
        )

    @property
    def d(self) -> int:
        return len(self.values)

    @property
    def infinity(self) -> int:
        """Rank sentinel that beats every real capacity (used on diagonals)."""
        return len(self.values) + 1

    def value(self, rank: int) -> Decimal:
        return self.values[rank - 1]

    def literal(self, rank: int) -> str:
        return self.literals[rank - 1]

    def ceil_rank(self, demand) -> int | None:
        """Smallest rank whose value is >= demand, or None if demand is too large."""
        demand = as_decimal(demand)
        lo, hi = 0, len(self.values)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.values[mid] < demand:
                lo = mid + 1
            else:
                hi = mid
        return lo + 1 if lo < len(self.values) else None


def as_decimal(x) -> Decimal:
    if isinstance(x, Decimal):
        return x
    if isinstance(x, float):
        return Decimal(repr(x))
    return Decimal(str(x).strip())


@dataclass(frozen=True)
class Graph:
    """Immutable directed graph; build it with :meth:`from_edges` or :func:`parse_graph`.

    ``edges`` holds ``(u, v, cap)`` triples sorted by ``(u, v)``. ``out_adj[u]``
    and ``in_adj[v]`` are 1-indexed tuples of ``(neighbour, cap)`` sorted by
    neighbour (index 0 is an unused placeholder).
    """

    n: int
    edges: tuple[tuple[int, int, Decimal], ...]
    literal_of: Mapping[Decimal, str] = field(repr=False, compare=False)
    out_adj: tuple[tuple[tuple[int, Decimal], ...], ...] = field(repr=False, compare=False)
    in_adj: tuple[tuple[tuple[int, Decimal], ...], ...] = field(repr=False, compare=False)
    _caps: Mapping[tuple[int, int], Decimal] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence]) -> "Graph":
        """Build a graph, dropping self-loops and collapsing parallel edges to the max.

        Raises ValueError for out-of-range vertices or non-positive capacities.
        """
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        literal_of: dict[Decimal, str] = {}
        caps: dict[tuple[int, int], Decimal] = {}
        for u, v, cap in edges:
            u, v = int(u), int(v)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"vertex out of range: ({u}, {v}) with n={n}")
            value, literal = _to_capacity(cap)
            if u == v:
                continue
            # First literal seen for a value becomes its canonical spelling.
            literal_of.setdefault(value, literal)
            if (u, v) not in caps or caps[(u, v)] < value:
                caps[(u, v)] = value
        # Only keep literals for values that survived the collapse.
        literal_of = {c: literal_of[c] for c in set(caps.values())}
        edge_list = tuple((u, v, caps[(u, v)]) for (u, v) in sorted(caps))
        out_adj: list[list] = [[] for _ in range(n + 1)]
        in_adj: list[list] = [[] for _ in range(n + 1)]
        for u, v, c in edge_list:
            out_adj[u].append((v, c))
            in_adj[v].append((u, c))
        for lst in in_adj:
            lst.sort()
        return cls(
            n=n,
            edges=edge_list,
            literal_of=literal_of,
            out_adj=tuple(tuple(a) for a in out_adj),
            in_adj=tuple(tuple(a) for a in in_adj),
            _caps=caps,
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def cap(self, u: int, v: int) -> Decimal | None:
        return self._caps.get((u, v))


def parse_graph(text: str) -> Graph:
    """Parse the ``p <n> <m>`` / ``e <u> <v> <cap>`` text format."""
    n = expected = None
    edges: list[tuple[int, int, str]] = []
    seen = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "p" or len(parts) != 3:
                raise GraphFormatError("expected header 'p <n> <m>'", lineno)
            try:
                n, expected = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("header counts must be integers", lineno) from None
            if n < 1 or expected < 0:
                raise GraphFormatError("header counts out of range", lineno)
            continue
        if parts[0] != "e" or len(parts) != 4:
            raise GraphFormatError("expected edge line 'e <u> <v> <cap>'", lineno)
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphFormatError("edge endpoints must be integers", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"vertex out of range (n={n})", lineno)
        seen += 1
        if seen > expected:
            raise GraphFormatError(f"more than {expected} edge lines", lineno)
        try:
            _to_capacity(parts[3])
        except ValueError as exc:
            raise GraphFormatError(str(exc), lineno) from None
        edges.append((u, v, parts[3]))
    if n is None:
        raise GraphFormatError("missing header 'p <n> <m>'")
    if seen != expected:
        raise GraphFormatError(f"expected {expected} edge lines, found {seen}")
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines += [f"e {u} {v} {g.literal_of[c]}" for u, v, c in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def generate_random(n: int, m: int, cap_pool, seed: int) -> Graph:
    """Uniform random digraph with m distinct ordered pairs; caps drawn from cap_pool."""
    if m > n * (n - 1):
        raise ValueError(f"m={m} exceeds n(n-1)={n * (n - 1)}")
    pool = sorted({_to_capacity(c) for c in cap_pool})
    if m and not pool:
        raise ValueError("empty capacity pool")
    rng = random.Random(seed)
    if n * (n - 1) <= 4 * m or n < 64:
        pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
        chosen = rng.sample(pairs, m)
    else:
        # Rejection sampling keeps large sparse graphs cheap.
        picked: set[tuple[int, int]] = set()
        chosen = []
        while len(chosen) < m:
            u, v = rng.randint(1, n), rng.randint(1, n)
            if u != v and (u, v) not in picked:
                picked.add((u, v))
                chosen.append((u, v))
    return Graph.from_edges(n, [(u, v, rng.choice(pool)[1]) for u, v in chosen])


def distinct_capacities(g: Graph) -> FlowRank:
    return FlowRank.from_values(g.literal_of)


def capacity_matrix(g: Graph) -> np.ndarray:
    """n x n float matrix: cap(i, j) on edges, 0 elsewhere, +inf on the diagonal."""
    c = np.zeros((g.n, g.n))
    for u, v, cap in g.edges:
        c[u - 1, v - 1] = float(cap)
    np.fill_diagonal(c, np.inf)
    return c


def rank_matrix(g: Graph, flow_rank: FlowRank | None = None) -> np.ndarray:
    """Capacity matrix expressed in ranks: 0 for no edge, d+1 on the diagonal."""
    if flow_rank is None:
        flow_rank = distinct_capacities(g)
    c = np.zeros((g.n, g.n), dtype=np.int32)
    for u, v, cap in g.edges:
        c[u - 1, v - 1] = flow_rank.rank_of[cap]
    np.fill_diagonal(c, flow_rank.infinity)
    return c
