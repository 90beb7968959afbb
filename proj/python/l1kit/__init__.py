"""Display sets, rSPR graphs and level-1 network reconstruction."""

from ._core import (
    CapExceeded,
    InvalidInput,
    L1kitError,
    Network,
    ParseError,
    Tree,
    check,
    display_set,
    display_set_report,
    enumerate,
    is_displayed,
    is_rnni_one,
    moving_subtrees,
    network_isomorphic,
    random_network,
    reconstruct,
    rspr_distance_one,
    rspr_graph,
    tree_isomorphic,
)

__all__ = [
    "CapExceeded",
    "InvalidInput",
    "L1kitError",
    "Network",
    "ParseError",
    "Tree",
    "check",
    "display_set",
    "display_set_report",
    "enumerate",
    "is_displayed",
    "is_rnni_one",
    "moving_subtrees",
    "network_isomorphic",
    "random_network",
    "reconstruct",
    "rspr_distance_one",
    "rspr_graph",
    "tree_isomorphic",
]
