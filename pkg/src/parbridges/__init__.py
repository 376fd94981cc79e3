"""Bridge finding in dense multigraphs via partitioned sparse certificates."""

from parbridges.bridges import BridgeReport, DfsState, dfs_lowlink, find_bridges_dfs
from parbridges.certificate import (
    Certificate,
    certificate_edge_ids,
    sparse_certificate,
    spanning_forest,
)
from parbridges.cluster import (
    PartitionPlan,
    PhaseSchedule,
    RunStats,
    build_schedule,
    find_bridges_parallel,
    merge_certificates,
    partition_edges,
)
from parbridges.dsu import DisjointSetForest
from parbridges.graph import (
    Edge,
    Graph,
    GraphParseError,
    connected_components,
    generate_gnp,
    induced_subgraph_by_edge_ids,
    parse_edge_list,
    serialize_edge_list,
)
from parbridges.oracle import bridges_bruteforce

__all__ = [
    "BridgeReport",
    "Certificate",
    "DfsState",
    "DisjointSetForest",
    "Edge",
    "Graph",
    "GraphParseError",
    "PartitionPlan",
    "PhaseSchedule",
    "RunStats",
    "bridges_bruteforce",
    "build_schedule",
    "certificate_edge_ids",
    "connected_components",
    "dfs_lowlink",
    "find_bridges_dfs",
    "find_bridges_parallel",
    "generate_gnp",
    "induced_subgraph_by_edge_ids",
    "merge_certificates",
    "parse_edge_list",
    "partition_edges",
    "serialize_edge_list",
    "spanning_forest",
    "sparse_certificate",
]
