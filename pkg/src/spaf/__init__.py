"""Shortest paths for all flows on unit-cost digraphs with edge capacities."""

from .apsp import ApspAfResult, apsp_af, choose_r, path_apsp, query_apsp
from .bottleneck import BottleneckResult, network_bottleneck, network_bottleneck_oracle
from .graph import (
    FlowRank,
    Graph,
    GraphFormatError,
    capacity_matrix,
    distinct_capacities,
    generate_random,
    parse_graph,
    serialize_graph,
)
from .sssp import SsspAfResult, path_sssp, query_sssp, sssp_af

__version__ = "0.1.0"

__all__ = [
    "ApspAfResult",
    "BottleneckResult",
    "FlowRank",
    "Graph",
    "GraphFormatError",
    "SsspAfResult",
    "apsp_af",
    "capacity_matrix",
    "choose_r",
    "distinct_capacities",
    "generate_random",
    "network_bottleneck",
    "network_bottleneck_oracle",
    "parse_graph",
    "path_apsp",
    "path_sssp",
    "query_apsp",
    "query_sssp",
    "serialize_graph",
    "sssp_af",
]
