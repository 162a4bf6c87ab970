"""Reference validity indices: Calinski-Harabasz and average silhouette width.

Both work off mean-based, squared or pairwise distances and serve as the
conventional counterparts the median-based index is compared against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist

from .validation import check_data_matrix, check_labels


@dataclass(frozen=True)
class BaselineRecord:
    k: int
    value: float
    index_name: str  # "ch" or "silhouette"


def ch_index(data, labels) -> float:
    """Variance-ratio criterion [B/(K-1)] / [W/(n-K)] on cluster means."""
    X = check_data_matrix(data)
    labels = np.asarray(labels, dtype=int)
    n = X.shape[0]
    k = int(labels.max()) + 1
    labels = check_labels(labels, k, n)
    if k < 2:
        raise ValueError("CH index undefined for K<2")
    if k >= n:
        raise ValueError("CH index requires K < n")

    grand_mean = X.mean(axis=0)
    between = 0.0
    within = 0.0
    for j in range(k):
        members = X[labels == j]
        center = members.mean(axis=0)
        between += members.shape[0] * float(np.dot(center - grand_mean, center - grand_mean))
        within += float(((members - center) ** 2).sum())
    return (between / (k - 1)) / (within / (n - k))


def silhouette_width(data, labels) -> float:
    """Mean silhouette s(x) = (b - a) / max(a, b); singletons score 0."""
    X = check_data_matrix(data)
    labels = np.asarray(labels, dtype=int)
    n = X.shape[0]
    k = int(labels.max()) + 1
    labels = check_labels(labels, k, n)
    if k < 2:
        raise ValueError("silhouette undefined for K<2")
    if k > n - 1:
        raise ValueError("silhouette requires K <= n-1")

    D = cdist(X, X)
    sizes = np.bincount(labels, minlength=k)
    # cluster_dist[i, j] = total distance from point i to members of cluster j
    cluster_dist = np.zeros((n, k))
    for j in range(k):
        cluster_dist[:, j] = D[:, labels == j].sum(axis=1)

    scores = np.zeros(n)
    for i in range(n):
        own = labels[i]
        if sizes[own] == 1:
            continue  # singleton convention: s = 0
        a = cluster_dist[i, own] / (sizes[own] - 1)
        other = [cluster_dist[i, j] / sizes[j] for j in range(k) if j != own]
        b = min(other)
        scores[i] = (b - a) / max(a, b)
    return float(scores.mean())
