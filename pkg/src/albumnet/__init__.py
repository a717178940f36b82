"""Collaboration-network toolkit for album credit data.

Ingest (collaborator, album, role) records, normalize role labels, build
the bipartite graph, project onto either mode, measure network statistics,
and rank roles by their impact on the giant component.
"""

__version__ = "0.1.0"

from albumnet.analysis import (
    AblationResult,
    AblationSweep,
    GrowthSeries,
    ablation_sweep,
    growth_series,
    pearson,
)
from albumnet.graph import (
    ALBUM_MODE,
    COLLABORATOR_MODE,
    AblationSpec,
    BipartiteGraph,
    ProjectedGraph,
    ablate,
    build_bipartite,
    omitted_edge_stats,
    project,
)
from albumnet.metrics import (
    DegreeDistribution,
    HubRanking,
    NetworkStats,
    compute_stats,
    degree_distribution,
    top_hubs,
)
from albumnet.records import (
    AssociationRecord,
    Dataset,
    DatasetSummary,
    dataset_summary,
    parse_records,
    write_records_csv,
)
from albumnet.roles import RoleLabel, normalize_role, role_inventory

__all__ = [
    "ALBUM_MODE",
    "COLLABORATOR_MODE",
    "AblationResult",
    "AblationSpec",
    "AblationSweep",
    "AssociationRecord",
    "BipartiteGraph",
    "Dataset",
    "DatasetSummary",
    "DegreeDistribution",
    "GrowthSeries",
    "HubRanking",
    "NetworkStats",
    "ProjectedGraph",
    "RoleLabel",
    "__version__",
    "ablate",
    "ablation_sweep",
    "build_bipartite",
    "compute_stats",
    "dataset_summary",
    "degree_distribution",
    "growth_series",
    "normalize_role",
    "omitted_edge_stats",
    "parse_records",
    "pearson",
    "project",
    "role_inventory",
    "top_hubs",
    "write_records_csv",
]
