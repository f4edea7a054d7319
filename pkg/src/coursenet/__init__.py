"""Course co-enrollment networks: construction, thresholding, and analysis."""

from .analysis import (
    CategoryMap,
    CommonStudentsHistogram,
    CoOccurrenceHistogram,
    LinkageMatrix,
    SubnetworkStatsRow,
    category_linkage,
    category_stats,
    co_occurrence_histogram,
    common_students_histogram,
    department_stats,
    identify_hubs,
    interpolated_median,
    load_category_map,
    subnetwork_stats_table,
    top_hubs,
)
from .errors import (
    ConfigError,
    ConvergenceError,
    CoursenetError,
    DatasetInconsistencyError,
    InputFormatError,
)
from .graph import (
    CourseNetwork,
    DynamicThreshold,
    StaticThreshold,
    ThresholdPolicy,
    build_network,
    dynamic_threshold,
    induced_subgraph,
)
from .ingest import (
    CourseKey,
    CourseSummary,
    EnrollmentRecord,
    ParseReport,
    parse_enrollments,
    summarize_courses,
)
from .metrics import (
    CentralityReport,
    CentralityRow,
    GraphStats,
    average_clustering,
    betweenness_centrality,
    centrality_report,
    degree_centrality,
    density,
    diameter,
    eigenvector_centrality,
    graph_stats,
    local_clustering,
    rank_and_combine,
)
from .pairing import CoursePair, PairDataset, build_pairs, co_occurrence_rate
from .synth import SynthConfig, generate, load_synth_config

__version__ = "0.1.0"

__all__ = [
    "CategoryMap",
    "CentralityReport",
    "CentralityRow",
    "CommonStudentsHistogram",
    "CoOccurrenceHistogram",
    "ConfigError",
    "ConvergenceError",
    "CoursenetError",
    "CourseKey",
    "CourseNetwork",
    "CoursePair",
    "CourseSummary",
    "DatasetInconsistencyError",
    "DynamicThreshold",
    "EnrollmentRecord",
    "GraphStats",
    "InputFormatError",
    "LinkageMatrix",
    "PairDataset",
    "ParseReport",
    "StaticThreshold",
    "SubnetworkStatsRow",
    "SynthConfig",
    "ThresholdPolicy",
    "average_clustering",
    "betweenness_centrality",
    "build_network",
    "build_pairs",
    "category_linkage",
    "category_stats",
    "centrality_report",
    "co_occurrence_histogram",
    "co_occurrence_rate",
    "common_students_histogram",
    "degree_centrality",
    "density",
    "department_stats",
    "diameter",
    "dynamic_threshold",
    "eigenvector_centrality",
    "generate",
    "graph_stats",
    "identify_hubs",
    "induced_subgraph",
    "interpolated_median",
    "load_category_map",
    "load_synth_config",
    "local_clustering",
    "parse_enrollments",
    "rank_and_combine",
    "subnetwork_stats_table",
    "summarize_courses",
    "top_hubs",
]
