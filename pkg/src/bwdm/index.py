"""The BWDM stopping rule: between/within distances to cluster medians.

For a K-cluster partition, ABDM is the average Euclidean distance between
the spatial medians of each pair of clusters, AWDM the average distance of
each observation to its own cluster's spatial median, and

    BWDM(K) = (ABDM / (K - 1)) / (AWDM / (n - K))

The estimated number of clusters maximizes BWDM over K = 2..k_max.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from sklearn.base import BaseEstimator

from .geometry import spatial_median
from .partition import PartitionerConfig, fit_partition
from .validation import check_data_matrix, check_labels

DEFAULT_K_MAX = 10


@dataclass(frozen=True)
class ClusterSummary:
    """Per-cluster sizes and spatial medians."""

    sizes: list[int]
    medians: list[np.ndarray]

    @property
    def n_clusters(self) -> int:
        return len(self.sizes)

    @property
    def n_samples(self) -> int:
        return int(sum(self.sizes))


@dataclass(frozen=True)
class IndexRecord:
    """Index values for one candidate K."""

    k: int
    abdm: float
    awdm: float
    bwdm: float
    degenerate: bool = False


@dataclass(frozen=True)
class IndexCurve:
    """BWDM values over K = 2..k_max plus the selected K."""

    records: list[IndexRecord]
    best_k: int
    n_samples: int
    labels_by_k: dict[int, np.ndarray] = field(default_factory=dict, repr=False)

    def record(self, k: int) -> IndexRecord:
        for rec in self.records:
            if rec.k == k:
                return rec
        raise KeyError(f"no record for K={k}")


def summarize(data, labels, k: int | None = None, tol: float = 1e-12) -> ClusterSummary:
    """Cluster sizes and spatial medians for a hard partition."""
    X = check_data_matrix(data)
    labels = np.asarray(labels, dtype=int)
    if k is None:
        k = int(labels.max()) + 1
    labels = check_labels(labels, k, X.shape[0])
    sizes, medians = [], []
    for j in range(k):
        members = X[labels == j]
        sizes.append(int(members.shape[0]))
        medians.append(spatial_median(members, tol=tol).median)
    return ClusterSummary(sizes=sizes, medians=medians)


def abdm(summary: ClusterSummary) -> float:
    """Average pairwise Euclidean distance between cluster medians."""
    k = summary.n_clusters
    if k < 2:
        raise ValueError("ABDM undefined for K<2")
    medians = np.vstack(summary.medians)
    total = 0.0
    for i in range(k):
        total += float(np.linalg.norm(medians[i + 1:] - medians[i], axis=1).sum())
    return total / math.comb(k, 2)


def awdm(data, labels, summary: ClusterSummary) -> float:
    """Grand average distance of each observation to its cluster's median."""
    X = check_data_matrix(data)
    labels = np.asarray(labels, dtype=int)
    n = X.shape[0]
    if summary.n_samples != n:
        raise ValueError("summary sizes do not sum to the sample size")
    total = 0.0
    for j, median in enumerate(summary.medians):
        members = X[labels == j]
        total += float(np.linalg.norm(members - median, axis=1).sum())
    return total / n


def bwdm(abdm_value: float, awdm_value: float, k: int, n: int) -> float:
    """Degrees-of-freedom-normalized between/within ratio.

    Returns +inf when the within term vanishes (degenerate partition).
    """
    if k < 2:
        raise ValueError("BWDM undefined for K<2")
    if k >= n:
        raise ValueError("BWDM requires K < n")
    if awdm_value < 0:
        raise ValueError("AWDM must be non-negative")
    if awdm_value == 0.0:
        return math.inf
    return (abdm_value / (k - 1)) / (awdm_value / (n - k))


def evaluate_partition(data, labels, k: int | None = None, tol: float = 1e-12) -> IndexRecord:
    """Compute the full index record for one fitted partition."""
    X = check_data_matrix(data)
    summary = summarize(X, labels, k=k, tol=tol)
    a = abdm(summary)
    w = awdm(X, labels, summary)
    value = bwdm(a, w, summary.n_clusters, X.shape[0])
    return IndexRecord(
        k=summary.n_clusters,
        abdm=a,
        awdm=w,
        bwdm=value,
        degenerate=not math.isfinite(value),
    )


def _pick_best(records: list[IndexRecord]) -> int:
    """Argmax of BWDM, smallest K on ties; degenerate records are skipped
    unless every record is degenerate."""
    candidates = [r for r in records if not r.degenerate] or records
    best = candidates[0]
    for rec in candidates[1:]:
        if rec.bwdm > best.bwdm:
            best = rec
    return best.k


def select_k(
    data,
    k_max: int = DEFAULT_K_MAX,
    config: PartitionerConfig | None = None,
    standardize: bool = False,
    keep_labels: bool = True,
) -> IndexCurve:
    """Fit a partition for each K in 2..k_max and pick the BWDM argmax.

    The same partitioner configuration (seed included) is reused across all
    K so the curve is self-consistent. ``standardize`` z-scores each column
    first (off by default; the index is already invariant to uniform scaling).
    """
    X = check_data_matrix(data)
    n = X.shape[0]
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    if k_max >= n:
        raise ValueError(f"k_max={k_max} must be smaller than the sample size {n}")
    config = config or PartitionerConfig()

    if standardize:
        sd = X.std(axis=0, ddof=1)
        sd[sd == 0] = 1.0
        X = (X - X.mean(axis=0)) / sd

    records: list[IndexRecord] = []
    labels_by_k: dict[int, np.ndarray] = {}
    for k in range(2, k_max + 1):
        labels = fit_partition(X, k, config)
        records.append(evaluate_partition(X, labels, k=k))
        if keep_labels:
            labels_by_k[k] = labels

    return IndexCurve(
        records=records,
        best_k=_pick_best(records),
        n_samples=n,
        labels_by_k=labels_by_k,
    )


class ClusterCountEstimator(BaseEstimator):
    """sklearn-style wrapper around :func:`select_k`.

    After ``fit``, exposes ``best_k_`` (the selected number of clusters),
    ``curve_`` (the per-K index records) and ``labels_`` (the partition at
    ``best_k_``).
    """

    def __init__(
        self,
        k_max: int = DEFAULT_K_MAX,
        method: str = "k_spatial_medians",
        n_init: int = 10,
        max_iter: int = 100,
        tol: float = 1e-5,
        random_state: int = 0,
        standardize: bool = False,
    ):
        self.k_max = k_max
        self.method = method
        self.n_init = n_init
        self.max_iter = max_iter
        self.tol = tol
        self.random_state = random_state
        self.standardize = standardize

    def _config(self) -> PartitionerConfig:
        return PartitionerConfig(
            method=self.method,
            n_init=self.n_init,
            max_iter=self.max_iter,
            seed=self.random_state,
            tol=self.tol,
        )

    def fit(self, X, y=None):
        curve = select_k(
            X,
            k_max=self.k_max,
            config=self._config(),
            standardize=self.standardize,
        )
        self.curve_ = curve
        self.best_k_ = curve.best_k
        self.labels_ = curve.labels_by_k[curve.best_k]
        return self

    def predict(self, X=None):
        if not hasattr(self, "best_k_"):
            raise RuntimeError("estimator is not fitted")
        return self.best_k_
