"""Tiling regions with pegs by L-trominoes whose corner has a hole.

Decide tilability with a maximum flow, count tilings exactly in linear time
through perfect matchings, enumerate and render them.
"""

from .counting import (
    CountStructure,
    TilingCount,
    count_perfect_matchings,
    count_tilings,
    decide_via_counting,
    enumerate_tilings,
    solve,
)
from .instances import GenSpec, generate_random, generate_tileable
from .maxflow import Flow, StPath, decide_via_maxflow, decompose_paths, max_flow
from .network import MatchGraph, RegionNetwork, build_region_network, match_graph, split_networks
from .oracle import brute_force_count, brute_force_enumerate
from .placement import Placement, Tiling
from .region import Region, classify, feasibility_precheck, parse_region, serialize_region
from .tiling import flow_from_tiling, render, tiling_from_flow, validate_tiling

__all__ = [
    "CountStructure", "Flow", "GenSpec", "MatchGraph", "Placement", "Region", "RegionNetwork",
    "StPath", "Tiling", "TilingCount", "brute_force_count", "brute_force_enumerate",
    "build_region_network", "classify", "count_perfect_matchings", "count_tilings",
    "decide_via_counting", "decide_via_maxflow", "decompose_paths", "enumerate_tilings",
    "feasibility_precheck", "flow_from_tiling", "generate_random", "generate_tileable",
    "match_graph", "max_flow", "parse_region", "render", "serialize_region", "solve",
    "split_networks", "tiling_from_flow", "validate_tiling",
]
