"""Base partitioners producing candidate clusterings for each K.

Two families are provided behind a shared sklearn-style surface:

* :class:`KCenterClusterer` -- Lloyd-style alternation with either spatial
  medians ("k_spatial_medians") or arithmetic means ("k_means") as centers,
  with seeded multi-start.
* :class:`PAMClusterer` -- k-medoids with BUILD initialization and SWAP
  refinement; centers are restricted to data points.

Both score a partition by the total Euclidean distance of each observation
to its cluster center.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict

import numpy as np
from scipy.spatial.distance import cdist
from sklearn.base import BaseEstimator, ClusterMixin

from .geometry import spatial_median
from .validation import canonicalize_labels, check_data_matrix

METHODS = ("k_spatial_medians", "k_means", "pam")


@dataclass(frozen=True)
class PartitionerConfig:
    """Everything needed to reproduce a partitioning run."""

    method: str = "k_spatial_medians"
    n_init: int = 10
    max_iter: int = 100
    seed: int = 0
    tol: float = 1e-5

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if self.n_init < 1:
            raise ValueError("n_init must be >= 1")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        if self.tol <= 0:
            raise ValueError("tol must be positive")

    def to_dict(self) -> dict:
        return asdict(self)


def _check_k(n_samples: int, k: int) -> None:
    if k < 1:
        raise ValueError("number of clusters must be >= 1")
    if k > n_samples:
        raise ValueError(f"number of clusters {k} exceeds sample size {n_samples}")


def _fix_empty_clusters(X, centers, labels, dists) -> np.ndarray:
    """Move the point farthest from its center into each empty cluster."""
    k = centers.shape[0]
    counts = np.bincount(labels, minlength=k)
    own = dists[np.arange(len(labels)), labels].copy()
    for empty in np.flatnonzero(counts == 0):
        donor_mask = counts[labels] > 1
        candidates = np.where(donor_mask, own, -np.inf)
        farthest = int(np.argmax(candidates))
        counts[labels[farthest]] -= 1
        labels[farthest] = empty
        counts[empty] = 1
        own[farthest] = 0.0
    return labels


def _grouped_spatial_medians(X, labels, centers, tol, max_iter=60):
    """Damped Weiszfeld updates for all clusters in lockstep.

    Equivalent to running the single-cluster solver per cluster (same damped
    update, same coincident-point handling) but with one vectorized pass over
    the data per iteration.
    """
    k, d = centers.shape
    Y = centers.copy()
    coincide_tol = 1e-14 * max(1.0, float(np.abs(X).max()))
    tiny = np.finfo(float).tiny
    for _ in range(max_iter):
        diff = X - Y[labels]
        dist = np.sqrt(np.einsum("ij,ij->i", diff, diff))
        off = dist > coincide_tol
        w = np.where(off, 1.0, 0.0) / np.where(off, dist, 1.0)
        sw = np.bincount(labels, weights=w, minlength=k)
        eta = np.bincount(labels, weights=~off, minlength=k)
        num = np.empty((k, d))
        resid = np.empty((k, d))
        for j in range(d):
            num[:, j] = np.bincount(labels, weights=w * X[:, j], minlength=k)
            resid[:, j] = np.bincount(labels, weights=w * diff[:, j], minlength=k)
        r = np.sqrt(np.einsum("ij,ij->i", resid, resid))
        # a cluster is already at its minimizer when the off-point pull does
        # not exceed the multiplicity of the coincident point
        fixed = (sw == 0.0) | ((eta > 0.0) & (r <= eta))
        attracted = num / np.where(sw == 0.0, 1.0, sw)[:, None]
        with np.errstate(over="ignore"):
            damp = np.where(eta > 0.0, eta / np.maximum(r, tiny), 0.0)
        damp = np.minimum(damp, 1.0)
        Y_next = (1.0 - damp)[:, None] * attracted + damp[:, None] * Y
        Y_next[fixed] = Y[fixed]
        delta = Y_next - Y
        step = np.sqrt(np.einsum("ij,ij->i", delta, delta))
        step /= 1.0 + np.sqrt(np.einsum("ij,ij->i", Y, Y))
        Y = Y_next
        if (step < tol).all():
            break
    return Y


def _lloyd_single(X, k, rng, method, max_iter, tol, descent_check=False):
    """One seeded Lloyd run; returns (labels, centers, cost, n_iter)."""
    n = X.shape[0]
    centers = X[rng.choice(n, size=k, replace=False)].copy()
    labels = None
    prev_cost = np.inf
    n_iter = 0
    for n_iter in range(1, max_iter + 1):
        dists = cdist(X, centers)
        new_labels = dists.argmin(axis=1)  # argmin takes the lowest index on ties
        new_labels = _fix_empty_clusters(X, centers, new_labels, dists)
        if labels is not None and np.array_equal(new_labels, labels):
            break
        labels = new_labels
        if method == "k_means":
            for j in range(k):
                centers[j] = X[labels == j].mean(axis=0)
        else:
            centers = _grouped_spatial_medians(X, labels, centers, tol)
        if descent_check:
            cost = cdist(X, centers)[np.arange(n), labels].sum()
            assert cost <= prev_cost + 1e-8 * (1.0 + prev_cost), (
                f"Lloyd cost increased: {prev_cost} -> {cost}"
            )
            prev_cost = cost
    cost = float(cdist(X, centers)[np.arange(n), labels].sum())
    return labels, centers, cost, n_iter


class KCenterClusterer(BaseEstimator, ClusterMixin):
    """Lloyd alternation with spatial-median or mean centers, multi-start.

    Parameters
    ----------
    n_clusters : target number of clusters.
    method : "k_spatial_medians" (default) or "k_means".
    n_init : number of seeded restarts; the lowest-cost run wins, ties
        going to the earliest restart.
    max_iter : Lloyd iteration cap per restart.
    tol : convergence tolerance for the inner spatial-median solves.
    random_state : seed; restart r uses the (seed, r) substream, so results
        do not depend on restart execution order.
    """

    def __init__(
        self,
        n_clusters: int = 2,
        method: str = "k_spatial_medians",
        n_init: int = 10,
        max_iter: int = 100,
        tol: float = 1e-5,
        random_state: int = 0,
        descent_check: bool = False,
    ):
        self.n_clusters = n_clusters
        self.method = method
        self.n_init = n_init
        self.max_iter = max_iter
        self.tol = tol
        self.random_state = random_state
        self.descent_check = descent_check

    def fit(self, X, y=None):
        X = check_data_matrix(X)
        if self.method not in ("k_spatial_medians", "k_means"):
            raise ValueError(f"unknown method {self.method!r}")
        _check_k(X.shape[0], self.n_clusters)

        if self.n_clusters == 1:
            labels = np.zeros(X.shape[0], dtype=int)
            center = (
                X.mean(axis=0)
                if self.method == "k_means"
                else spatial_median(X, tol=self.tol).median
            )
            centers = center[None, :]
            best = (labels, centers, float(cdist(X, centers).sum()), 0)
        else:
            best = None
            for restart in range(self.n_init):
                rng = np.random.default_rng([self.random_state, restart])
                run = _lloyd_single(
                    X,
                    self.n_clusters,
                    rng,
                    self.method,
                    self.max_iter,
                    self.tol,
                    self.descent_check,
                )
                if best is None or run[2] < best[2]:
                    best = run

        labels, centers, cost, n_iter = best
        order = canonicalize_labels(labels)
        remap = np.empty(self.n_clusters, dtype=int)
        remap[labels] = order
        self.labels_ = order
        self.cluster_centers_ = centers[_inverse_permutation(remap)]
        self.inertia_ = cost
        self.n_iter_ = n_iter
        return self

    def predict(self, X):
        X = check_data_matrix(X)
        return cdist(X, self.cluster_centers_).argmin(axis=1)

    def fit_predict(self, X, y=None):
        return self.fit(X).labels_


def _inverse_permutation(perm: np.ndarray) -> np.ndarray:
    inv = np.empty_like(perm)
    inv[perm] = np.arange(len(perm))
    return inv


class PAMClusterer(BaseEstimator, ClusterMixin):
    """k-medoids via BUILD + SWAP (steepest-descent swaps until no gain)."""

    def __init__(self, n_clusters: int = 2, max_iter: int = 100, random_state: int = 0):
        self.n_clusters = n_clusters
        self.max_iter = max_iter
        self.random_state = random_state

    def fit(self, X, y=None):
        X = check_data_matrix(X)
        n = X.shape[0]
        k = self.n_clusters
        _check_k(n, k)
        D = cdist(X, X)

        medoids = self._build(D, k)
        medoids = self._swap(D, medoids)

        medoids = np.asarray(sorted(medoids), dtype=int)
        labels = D[:, medoids].argmin(axis=1)
        order = canonicalize_labels(labels)
        remap = np.empty(k, dtype=int)
        remap[labels] = order
        self.labels_ = order
        self.medoid_indices_ = medoids[_inverse_permutation(remap)]
        self.cluster_centers_ = X[self.medoid_indices_]
        self.inertia_ = float(D[:, medoids].min(axis=1).sum())
        return self

    def predict(self, X):
        X = check_data_matrix(X)
        return cdist(X, self.cluster_centers_).argmin(axis=1)

    def fit_predict(self, X, y=None):
        return self.fit(X).labels_

    @staticmethod
    def _build(D, k):
        n = D.shape[0]
        medoids = [int(D.sum(axis=0).argmin())]
        nearest = D[:, medoids[0]].copy()
        while len(medoids) < k:
            # gain of adding each candidate: reduction in total nearest-distance
            gain = np.maximum(nearest[None, :] - D, 0.0).sum(axis=1)
            gain[medoids] = -np.inf
            best = int(gain.argmax())
            medoids.append(best)
            nearest = np.minimum(nearest, D[:, best])
        return medoids

    def _swap(self, D, medoids):
        medoids = list(medoids)
        n = D.shape[0]
        for _ in range(self.max_iter):
            cost = D[:, medoids].min(axis=1).sum()
            best_delta = 0.0
            best_pair = None
            non_medoids = [i for i in range(n) if i not in medoids]
            for mi, m in enumerate(medoids):
                for h in non_medoids:
                    trial = medoids.copy()
                    trial[mi] = h
                    delta = D[:, trial].min(axis=1).sum() - cost
                    if delta < best_delta - 1e-12:
                        best_delta = delta
                        best_pair = (mi, h)
            if best_pair is None:
                break
            medoids[best_pair[0]] = best_pair[1]
        return medoids


def make_partitioner(config: PartitionerConfig, n_clusters: int):
    """Instantiate the estimator described by ``config`` for a given K."""
    if config.method == "pam":
        return PAMClusterer(
            n_clusters=n_clusters,
            max_iter=config.max_iter,
            random_state=config.seed,
        )
    return KCenterClusterer(
        n_clusters=n_clusters,
        method=config.method,
        n_init=config.n_init,
        max_iter=config.max_iter,
        tol=config.tol,
        random_state=config.seed,
    )


def fit_partition(data, n_clusters: int, config: PartitionerConfig | None = None) -> np.ndarray:
    """Fit the configured partitioner and return canonical labels."""
    config = config or PartitionerConfig()
    return make_partitioner(config, n_clusters).fit_predict(data)
