"""Graph sampling toolkit: community + densification-law sampling and a
five-property K-S evaluation harness."""

from ._core import (
    Graph,
    SampleGraph,
    __version__,
    densification_exponent,
    dpl_difference,
    dpl_edge_target,
    generate_dpl_attachment,
    generate_preferential_attachment,
    ks_distance,
    load_edge_list,
    modularity,
    modularity_partition,
    properties,
    sample,
)

__all__ = [
    "Graph",
    "SampleGraph",
    "__version__",
    "densification_exponent",
    "dpl_difference",
    "dpl_edge_target",
    "generate_dpl_attachment",
    "generate_preferential_attachment",
    "ks_distance",
    "load_edge_list",
    "modularity",
    "modularity_partition",
    "properties",
    "sample",
]
