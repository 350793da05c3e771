"""Flow staircases: per-pair ``((length, flow), ...)`` frontiers.

A staircase lists, in increasing length, the largest flow each length can
carry; both coordinates strictly increase. Solvers build staircases over
integer ranks and convert them to capacity values at the end.
"""

from __future__ import annotations

import json
from decimal import Decimal
from typing import Iterable, Sequence

from .graph import FlowRank, as_decimal

Staircase = tuple[tuple[int, Decimal], ...]


def push_pair(stair: list, length: int, flow) -> None:
    """Record that ``length`` carries ``flow``: replace the last pair on equal length, else append.

    Callers only push flows larger than the last recorded one.
    """
    if stair and stair[-1][0] == length:
        stair[-1] = (length, flow)
    else:
        stair.append((length, flow))


def is_staircase(stair: Sequence[tuple[int, object]]) -> bool:
    return all(
        l0 < l1 and f0 < f1 for (l0, f0), (l1, f1) in zip(stair, stair[1:])
    )


def to_values(stair: Iterable[tuple[int, int]], flow_rank: FlowRank) -> Staircase:
    return tuple((length, flow_rank.value(r)) for length, r in stair)


def lookup(stair: Staircase, demand) -> tuple[int, Decimal] | None:
    """Shortest pair whose flow covers ``demand``."""
    demand = as_decimal(demand)
    for length, flow in stair:
        if flow >= demand:
            return length, flow
    return None


def dump_result(n: int, flow_rank: FlowRank, pairs: Iterable[tuple[int, int, Staircase]]) -> str:
    """Serialise staircases to the result JSON shape, echoing capacity literals.

    ``pairs`` yields 1-indexed ``(i, j, staircase)``; empty staircases are skipped.
    """
    literal = {v: lit for v, lit in zip(flow_rank.values, flow_rank.literals)}
    items = []
    for i, j, stair in sorted(pairs, key=lambda p: (p[0], p[1])):
        if not stair:
            continue
        t = ", ".join(f"[{length}, {literal[f]}]" for length, f in stair)
        items.append(f'{{"i": {i}, "j": {j}, "t": [{t}]}}')
    flows = ", ".join(flow_rank.literals)
    return f'{{"n": {n}, "flows": [{flows}], "pairs": [{", ".join(items)}]}}\n'


def load_result(text: str) -> tuple[int, FlowRank, dict[tuple[int, int], Staircase]]:
    """Inverse of :func:`dump_result`; flow literals are preserved as written."""
    doc = json.loads(text, parse_float=str, parse_int=str)
    try:
        n = int(doc["n"])
        flow_literals = [str(x) for x in doc["flows"]]
        flow_rank = FlowRank.from_values({Decimal(x): x for x in flow_literals})
        stairs: dict[tuple[int, int], Staircase] = {}
        for item in doc["pairs"]:
            i, j = int(item["i"]), int(item["j"])
            stairs[(i, j)] = tuple((int(length), Decimal(f)) for length, f in item["t"])
    except (KeyError, TypeError, ValueError, ArithmeticError) as exc:
        raise ValueError(f"malformed result file: {exc}") from None
    return n, flow_rank, stairs
