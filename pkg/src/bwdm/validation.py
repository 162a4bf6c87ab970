"""Input validation helpers shared by all estimators and functions."""

from __future__ import annotations

import numpy as np


def check_data_matrix(X, *, name: str = "X") -> np.ndarray:
    """Coerce ``X`` to a 2-D float array of shape (n_samples, n_features).

    1-D input is treated as a single feature column. Raises ``ValueError``
    on empty input or non-finite entries.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X.reshape(-1, 1)
    if X.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional, got ndim={X.ndim}")
    if X.shape[0] < 1 or X.shape[1] < 1:
        raise ValueError(f"{name} is empty (shape {X.shape})")
    if not np.isfinite(X).all():
        raise ValueError(f"{name} contains NaN or infinite entries")
    return X


def check_labels(labels, n_clusters: int, n_samples: int) -> np.ndarray:
    """Validate a hard cluster assignment.

    Every label must lie in {0, ..., n_clusters - 1} and every cluster must
    be occupied by at least one observation.
    """
    labels = np.asarray(labels, dtype=int)
    if labels.shape != (n_samples,):
        raise ValueError(
            f"labels must have shape ({n_samples},), got {labels.shape}"
        )
    if labels.min() < 0 or labels.max() >= n_clusters:
        raise ValueError("labels out of range for the given cluster count")
    occupied = np.bincount(labels, minlength=n_clusters)
    if (occupied == 0).any():
        empty = int(np.flatnonzero(occupied == 0)[0])
        raise ValueError(f"cluster {empty} is empty")
    return labels


def canonicalize_labels(labels: np.ndarray) -> np.ndarray:
    """Renumber clusters by order of first occurrence.

    Makes multi-start output deterministic regardless of which restart won.
    """
    labels = np.asarray(labels, dtype=int)
    mapping: dict[int, int] = {}
    out = np.empty_like(labels)
    for i, lab in enumerate(labels):
        if lab not in mapping:
            mapping[lab] = len(mapping)
        out[i] = mapping[lab]
    return out
