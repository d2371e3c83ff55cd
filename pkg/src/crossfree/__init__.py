"""crossfree: exact counting, enumeration and growth-rate analysis for
non-crossing path partitions on convex point sets and double chains."""

from .geometry import (
    ConvexConfig,
    PartitionClass,
    PathPartition,
    VertexRole,
    chords_cross,
    classify_partition,
    is_ordered,
    is_ordered2,
    parse_partition,
    vertex_roles,
)
from .recurrences import (
    CountTable,
    ab_tables,
    g_from_gs,
    gfh_tables,
    go_tables,
    gs_tables,
)
from .oracle import (
    EnumerationReport,
    GuardLimitError,
    enumerate_partitions,
    enumeration_report,
    estimate_ordered2_growth,
    role_counts,
)
from .asymptotics import (
    AlgebraicRelation,
    AlphaResult,
    BranchPointError,
    EQ8,
    EQ15,
    EQ22,
    RELATIONS,
    SingularityResult,
    bender_growth,
    optimize_alpha,
    ratio_growth,
    series_residual,
)
from .doublechain import (
    ChainGraph,
    ChainRealization,
    CompositionOutcome,
    CompositionStatus,
    DoubleChainConfig,
    ab_family,
    build_hamiltonian_path,
    close_to_polygonization,
    compose_pair,
    count_polygonizations_exact,
    count_polygonizations_geometric,
    decompose_polygonization,
    edges_cross_dc,
    enumerate_polygonizations,
    is_polygonization,
    realize,
    validate_double_chain,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicRelation",
    "AlphaResult",
    "BranchPointError",
    "ChainGraph",
    "ChainRealization",
    "CompositionOutcome",
    "CompositionStatus",
    "ConvexConfig",
    "CountTable",
    "DoubleChainConfig",
    "EQ8",
    "EQ15",
    "EQ22",
    "EnumerationReport",
    "GuardLimitError",
    "PartitionClass",
    "PathPartition",
    "RELATIONS",
    "SingularityResult",
    "VertexRole",
    "ab_family",
    "ab_tables",
    "bender_growth",
    "build_hamiltonian_path",
    "chords_cross",
    "classify_partition",
    "close_to_polygonization",
    "compose_pair",
    "count_polygonizations_exact",
    "count_polygonizations_geometric",
    "decompose_polygonization",
    "edges_cross_dc",
    "enumerate_partitions",
    "enumerate_polygonizations",
    "enumeration_report",
    "estimate_ordered2_growth",
    "g_from_gs",
    "gfh_tables",
    "go_tables",
    "gs_tables",
    "is_ordered",
    "is_ordered2",
    "is_polygonization",
    "optimize_alpha",
    "parse_partition",
    "ratio_growth",
    "realize",
    "role_counts",
    "series_residual",
    "validate_double_chain",
    "vertex_roles",
]
