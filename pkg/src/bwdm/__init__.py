"""Cluster-count estimation via between/within distances to spatial medians."""

from .baselines import BaselineRecord, ch_index, silhouette_width
from .geometry import (
    MedianResult,
    distance_sum,
    spatial_median,
    spatial_sign,
    univariate_median,
)
from .index import (
    ClusterCountEstimator,
    ClusterSummary,
    IndexCurve,
    IndexRecord,
    abdm,
    awdm,
    bwdm,
    evaluate_partition,
    select_k,
    summarize,
)
from .io import load_csv, load_fixture
from .partition import (
    KCenterClusterer,
    PAMClusterer,
    PartitionerConfig,
    fit_partition,
    make_partitioner,
)
from .synthgen import LabeledSample, ScenarioConfig, generate, preset

__version__ = "0.1.0"

__all__ = [
    "BaselineRecord",
    "ClusterCountEstimator",
    "ClusterSummary",
    "IndexCurve",
    "IndexRecord",
    "KCenterClusterer",
    "LabeledSample",
    "MedianResult",
    "PAMClusterer",
    "PartitionerConfig",
    "ScenarioConfig",
    "abdm",
    "awdm",
    "bwdm",
    "ch_index",
    "distance_sum",
    "evaluate_partition",
    "fit_partition",
    "generate",
    "load_csv",
    "load_fixture",
    "make_partitioner",
    "preset",
    "select_k",
    "silhouette_width",
    "spatial_median",
    "spatial_sign",
    "summarize",
    "univariate_median",
]
