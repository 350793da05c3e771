"""Command-line front end: ``spaf <command> ...``.

Exit status: 0 success, 1 domain outcome (no bottleneck, unanswerable query,
verification mismatch), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from decimal import Decimal, InvalidOperation

from . import __version__
from .apsp import (
    acceleration_phase,
    apsp_af,
    choose_r,
    cruising_phase,
    finalize,
    init_cruising,
    path_apsp,
    query_apsp,
    result_from_json,
    result_to_json,
)
from .bottleneck import network_bottleneck
from .graph import (
    GraphFormatError,
    distinct_capacities,
    generate_random,
    rank_matrix,
    read_graph,
    serialize_graph,
)
from .oracle import compare, corpus, oracle_apsp_af_bfs, oracle_apsp_af_enum
from .sssp import sssp_af
from .staircase import dump_result


class UsageError(Exception):
    pass


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _seed_range(text: str) -> range:
    try:
        a, b = text.split("..")
        return range(int(a), int(b) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def cmd_gen(args) -> int:
    caps = [c for c in args.caps.split(",") if c.strip()]
    try:
        g = generate_random(args.n, args.m, caps, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(serialize_graph(g), args.output)
    return 0


def cmd_bottleneck(args) -> int:
    g = args.input_graph
    res = network_bottleneck(g)
    if res.value is None:
        text = "DEGENERATE" if res.degenerate else "NONE"
    else:
        text = g.literal_of[res.value]
    if args.tsv:
        print(f"{text}\t{res.probe_count}")
    else:
        print(text)
    return 0 if res.value is not None else 1


def cmd_sssp(args) -> int:
    g = args.input_graph
    if not 1 <= args.source <= g.n:
        raise UsageError(f"source {args.source} out of range 1..{g.n}")
    res = sssp_af(g, args.source)
    pairs = ((args.source, v, res.staircase(v)) for v in range(1, g.n + 1))
    _emit(dump_result(g.n, distinct_capacities(g), pairs), args.output)
    return 0


def cmd_apsp(args) -> int:
    g = args.input_graph
    if args.r is not None and g.n >= 2 and not 1 <= args.r <= g.n - 1:
        raise UsageError(f"-r must lie in 1..{g.n - 1}")
    res = apsp_af(g, args.r, threads=args.threads)
    _emit(result_to_json(res), args.output)
    return 0


def cmd_query(args) -> int:
    graph = read_graph(args.graph) if args.graph else None
    if args.path and graph is None:
        raise UsageError("--path needs --graph <graph file>")
    with open(args.input, encoding="utf-8") as fh:
        try:
            res = result_from_json(fh.read(), graph)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    for v in (args.src, args.dst):
        if not 1 <= v <= res.n:
            raise UsageError(f"vertex {v} out of range 1..{res.n}")
    hit = query_apsp(res, args.src, args.dst, args.flow)
    if hit is None:
        print("NONE")
        return 1
    length, flow = hit
    literal = dict(zip(res.flow_rank.values, res.flow_rank.literals))[flow]
    if args.tsv:
        print(f"{length}\t{literal}")
    else:
        print(f"{length} {literal}")
    if args.path:
        print(" ".join(map(str, path_apsp(res, args.src, args.dst, args.flow))))
    return 0


def cmd_verify(args) -> int:
    jobs = []
    if args.input:
        jobs.append((args.input, args.input_graph))
    if args.seeds is not None:
        jobs.extend((f"seed {s}", g) for s, g in corpus(args.seeds))
    if not jobs:
        raise UsageError("verify needs -i and/or --seeds")
    for label, g in jobs:
        reference = oracle_apsp_af_bfs(g)
        report = compare(apsp_af(g), reference)
        if report.equal and g.n <= 6:
            report = compare(oracle_apsp_af_enum(g), reference)
        if not report.equal:
            print(f"{label}: {report}")
            return 1
    print("EQUAL")
    return 0


def cmd_bench(args) -> int:
    g = args.input_graph
    if g.n < 2:
        raise UsageError("bench needs n >= 2")
    fr = distinct_capacities(g)
    r = args.r if args.r is not None else choose_r(g.n, fr.d)
    if not 1 <= r <= g.n - 1:
        raise UsageError(f"-r must lie in 1..{g.n - 1}")
    c = rank_matrix(g, fr)
    best = {"acceleration": float("inf"), "cruising": float("inf"), "finalize": float("inf")}
    rounds = 0
    for _ in range(args.repeat):
        t0 = time.perf_counter()
        seed, _ = acceleration_phase(c, r, top=fr.infinity)
        t1 = time.perf_counter()
        dist = init_cruising(seed, fr.d)
        t2 = time.perf_counter()
        dist, horizons = cruising_phase(dist, r, threads=args.threads)
        t3 = time.perf_counter()
        finalize(dist, seed)
        t4 = time.perf_counter()
        rounds = len(horizons) - 1
        best["acceleration"] = min(best["acceleration"], t1 - t0)
        best["cruising"] = min(best["cruising"], t3 - t2)
        best["finalize"] = min(best["finalize"], (t4 - t3) + (t2 - t1))
    print(f"n\t{g.n}")
    print(f"m\t{g.m}")
    print(f"d\t{fr.d}")
    print(f"r\t{r}")
    print(f"rounds\t{rounds}")
    for phase, secs in best.items():
        print(f"{phase}\t{secs:.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spaf", description="Shortest paths for all flows.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("gen", help="generate a random graph")
    q.add_argument("-n", type=int, required=True)
    q.add_argument("-m", type=int, required=True)
    q.add_argument("--caps", required=True, help="comma-separated capacity pool")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_gen, needs_graph=False)

    q = sub.add_parser("bottleneck", help="bottleneck of the entire network")
    q.add_argument("-i", "--input", required=True)
    q.add_argument("--tsv", action="store_true", help="print 'value<TAB>probes'")
    q.set_defaults(func=cmd_bottleneck, needs_graph=True)

    q = sub.add_parser("sssp-af", help="single-source shortest paths for all flows")
    q.add_argument("-i", "--input", required=True)
    q.add_argument("-s", "--source", type=int, required=True)
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_sssp, needs_graph=True)

    q = sub.add_parser("apsp-af", help="all-pairs shortest paths for all flows")
    q.add_argument("-i", "--input", required=True)
    q.add_argument("-r", type=int, default=None, help="acceleration depth")
    q.add_argument("--threads", type=_positive_int, default=1)
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_apsp, needs_graph=True)

    q = sub.add_parser("query", help="look up a quickest route in a result file")
    q.add_argument("-i", "--input", required=True, help="result JSON")
    q.add_argument("--from", dest="src", type=int, required=True)
    q.add_argument("--to", dest="dst", type=int, required=True)
    q.add_argument("--flow", required=True)
    q.add_argument("--path", action="store_true", help="also print the vertex sequence")
    q.add_argument("--graph", help="graph file (needed for --path)")
    q.add_argument("--tsv", action="store_true")
    q.set_defaults(func=cmd_query, needs_graph=False)

    q = sub.add_parser("verify", help="compare APSP-AF against the brute-force oracles")
    q.add_argument("-i", "--input")
    q.add_argument("--seeds", type=_seed_range, default=None, help="corpus seeds A..B")
    q.set_defaults(func=cmd_verify, needs_graph=True)

    q = sub.add_parser("bench", help="time the APSP-AF phases")
    q.add_argument("-i", "--input", required=True)
    q.add_argument("-r", type=int, default=None)
    q.add_argument("--repeat", type=_positive_int, default=1)
    q.add_argument("--threads", type=_positive_int, default=1)
    q.set_defaults(func=cmd_bench, needs_graph=True)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.input_graph = None
        if args.needs_graph and getattr(args, "input", None):
            args.input_graph = read_graph(args.input)
        if args.command == "query":
            try:
                if not Decimal(args.flow) > 0:
                    raise UsageError("--flow must be positive")
            except InvalidOperation:
                raise UsageError(f"bad --flow {args.flow!r}") from None
        return args.func(args)
    except (UsageError, GraphFormatError, OSError, UnicodeDecodeError) as exc:
        print(f"spaf {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
