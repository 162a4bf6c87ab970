"""Tests for the comparison indices (variance ratio and silhouette width)."""

import numpy as np
import pytest
from sklearn.metrics import calinski_harabasz_score, silhouette_score

from bwdm.baselines import ch_index, silhouette_width
from bwdm.index import select_k
from bwdm.synthgen import generate, preset


class TestVarianceRatio:
    def test_hand_value(self):
        X = np.array([[-1.0, 0.0], [1.0, 0.0], [9.0, 0.0], [11.0, 0.0]])
        labels = np.array([0, 0, 1, 1])
        # between-group sum 2*25 + 2*25 = 100, within-group sum 4*1 = 4
        assert ch_index(X, labels) == pytest.approx(50.0)

    def test_matches_reference_implementation(self):
        rng = np.random.default_rng(0)
        for _ in range(5):
            X = rng.normal(size=(50, 3))
            labels = rng.integers(0, 4, size=50)
            labels[:4] = [0, 1, 2, 3]
            expected = calinski_harabasz_score(X, labels)
            assert ch_index(X, labels) == pytest.approx(expected, rel=1e-10)

    def test_scenario_one_argmax_at_two(self):
        sample = generate(preset("sim1", n=300, seed=0))
        curve = select_k(sample.data, k_max=8)
        values = {
            k: ch_index(sample.data, labels)
            for k, labels in curve.labels_by_k.items()
        }
        assert max(values, key=values.get) == 2

    def test_boundary_errors(self):
        X = np.array([[0.0, 0.0], [2.0, 0.0]])
        with pytest.raises(ValueError):
            ch_index(X, np.array([0, 1]))  # n - K = 0
        with pytest.raises(ValueError):
            ch_index(X, np.array([0, 0]))  # K < 2

    def test_similarity_invariance(self):
        rng = np.random.default_rng(21)
        for _ in range(10):
            X = rng.normal(size=(30, 3))
            labels = rng.integers(0, 3, size=30)
            labels[:3] = [0, 1, 2]
            c = rng.uniform(0.1, 10)
            q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
            b = rng.normal(size=3)
            Y = c * X @ q.T + b
            assert ch_index(Y, labels) == pytest.approx(
                ch_index(X, labels), rel=1e-8
            )


def _brute_force_silhouette(X, labels):
    n = len(X)
    ks = np.unique(labels)
    s_values = []
    for i in range(n):
        own = labels[i]
        same = [j for j in range(n) if labels[j] == own and j != i]
        if not same:
            s_values.append(0.0)
            continue
        a = np.mean([np.linalg.norm(X[i] - X[j]) for j in same])
        b = min(
            np.mean([np.linalg.norm(X[i] - X[j]) for j in range(n) if labels[j] == k])
            for k in ks
            if k != own
        )
        s_values.append((b - a) / max(a, b))
    return float(np.mean(s_values))


class TestSilhouette:
    def test_near_ideal_separation(self):
        X = np.array([[0.0, 0.0], [0.1, 0.0], [100.0, 0.0], [100.1, 0.0]])
        labels = np.array([0, 0, 1, 1])
        assert silhouette_width(X, labels) > 0.99

    def test_singleton_scores_zero(self):
        X = np.array([[0.0, 0.0], [1.0, 0.0], [50.0, 0.0]])
        labels = np.array([0, 0, 1])
        brute = _brute_force_silhouette(X, labels)
        assert silhouette_width(X, labels) == pytest.approx(brute)

    def test_matches_brute_force_small_instance(self):
        rng = np.random.default_rng(7)
        X = rng.normal(size=(6, 2))
        labels = np.array([0, 1, 0, 1, 0, 1])
        assert silhouette_width(X, labels) == pytest.approx(
            _brute_force_silhouette(X, labels), abs=1e-12
        )

    def test_matches_reference_implementation(self):
        rng = np.random.default_rng(1)
        for _ in range(5):
            X = rng.normal(size=(40, 2))
            labels = rng.integers(0, 3, size=40)
            labels[:3] = [0, 1, 2]
            expected = silhouette_score(X, labels)
            assert silhouette_width(X, labels) == pytest.approx(expected, rel=1e-10)

    def test_bounded_in_unit_interval(self):
        rng = np.random.default_rng(2)
        for _ in range(10):
            X = rng.normal(size=(25, 2))
            labels = rng.integers(0, 4, size=25)
            labels[:4] = [0, 1, 2, 3]
            value = silhouette_width(X, labels)
            assert -1.0 <= value <= 1.0

    def test_requires_two_clusters(self):
        X = np.zeros((4, 2))
        with pytest.raises(ValueError):
            silhouette_width(X, np.zeros(4, dtype=int))
