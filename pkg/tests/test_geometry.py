"""Spatial sign / spatial median unit and property tests."""

import numpy as np
import pytest
from scipy.optimize import minimize

from bwdm.geometry import (
    distance_sum,
    spatial_median,
    spatial_sign,
    univariate_median,
)


class TestUnivariateMedian:
    def test_odd(self):
        assert univariate_median([1, 3, 2]) == 2

    def test_single(self):
        assert univariate_median([5]) == 5

    def test_even_midpoint(self):
        assert univariate_median([1, 2, 3, 10]) == 2.5

    def test_empty_raises(self):
        with pytest.raises(ValueError, match="empty"):
            univariate_median([])

    def test_nan_raises(self):
        with pytest.raises(ValueError):
            univariate_median([1.0, np.nan])

    def test_sign_sum_condition_odd_n(self):
        rng = np.random.default_rng(3)
        values = rng.normal(size=11)
        med = univariate_median(values)
        assert np.sign(values - med).sum() == 0


class TestSpatialSign:
    def test_three_four_five(self):
        np.testing.assert_allclose(spatial_sign([3, 4], [0, 0]), [0.6, 0.8])

    def test_coincident_is_zero(self):
        np.testing.assert_array_equal(spatial_sign([1, 1], [1, 1]), [0, 0])

    def test_axis(self):
        np.testing.assert_allclose(spatial_sign([0, -2], [0, 0]), [0, -1])

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension"):
            spatial_sign([1, 2], [1, 2, 3])

    def test_unit_norm(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            x, a = rng.normal(size=(2, 4))
            assert np.linalg.norm(spatial_sign(x, a)) == pytest.approx(1.0)


class TestSpatialMedian:
    def test_square_center(self):
        res = spatial_median([[0, 0], [2, 0], [0, 2], [2, 2]])
        np.testing.assert_allclose(res.median, [1, 1], atol=1e-8)
        assert res.converged

    def test_collinear_reduces_to_univariate(self):
        # odd count on a line: the middle point is the minimizer
        res = spatial_median([[0, 0], [1, 0], [5, 0]])
        np.testing.assert_allclose(res.median, [1, 0], atol=1e-8)
        assert res.objective == pytest.approx(5.0)

    def test_single_point(self):
        res = spatial_median([[3.0, 4.0]])
        np.testing.assert_array_equal(res.median, [3, 4])
        assert res.objective == 0.0

    def test_objective_field_consistent(self):
        rng = np.random.default_rng(1)
        X = rng.normal(size=(25, 3))
        res = spatial_median(X)
        assert res.objective == pytest.approx(distance_sum(res.median, X))

    def test_empty_raises(self):
        with pytest.raises(ValueError):
            spatial_median(np.empty((0, 2)))

    def test_max_iter_exceeded_flags_not_raises(self):
        rng = np.random.default_rng(2)
        X = rng.normal(size=(40, 2))
        res = spatial_median(X, tol=1e-15, max_iter=2)
        assert not res.converged
        assert res.iterations == 2

    def test_agrees_with_univariate_in_1d(self):
        rng = np.random.default_rng(4)
        for n in (5, 6, 9, 10):
            values = rng.normal(size=n)
            res = spatial_median(values.reshape(-1, 1))
            # even n has a whole interval of minimizers: compare objectives
            expected = np.abs(values - univariate_median(values)).sum()
            assert res.objective == pytest.approx(expected, abs=1e-7)

    @pytest.mark.parametrize("seed", range(20))
    def test_matches_derivative_free_oracle(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(3, 16))
        d = int(rng.integers(1, 4))
        X = rng.uniform(size=(n, d))
        res = spatial_median(X, check_descent=True)
        oracle = minimize(
            lambda y: distance_sum(y, X),
            X.mean(axis=0),
            method="Nelder-Mead",
            options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 20000},
        )
        assert res.objective <= oracle.fun + 1e-5

    def test_monotone_descent_never_fires(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            X = rng.normal(size=(30, 2))
            spatial_median(X, check_descent=True)

    def test_better_than_candidate_points_and_mean(self):
        rng = np.random.default_rng(6)
        X = rng.normal(size=(15, 3))
        res = spatial_median(X)
        for row in X:
            assert res.objective <= distance_sum(row, X) + 1e-9
        assert res.objective <= distance_sum(X.mean(axis=0), X) + 1e-9

    def test_orthogonal_equivariance(self):
        rng = np.random.default_rng(7)
        X = rng.normal(size=(20, 3))
        q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
        b = rng.normal(size=3)
        m1 = spatial_median(X @ q.T + b).median
        m0 = spatial_median(X).median
        np.testing.assert_allclose(m1, q @ m0 + b, atol=1e-8)

    def test_uniqueness_different_starts(self):
        rng = np.random.default_rng(8)
        X = rng.normal(size=(30, 2))
        tol = 1e-10
        a = spatial_median(X, tol=tol, init=X[0] + 3.0).median
        b = spatial_median(X, tol=tol, init=X[-1] - 5.0).median
        assert np.linalg.norm(a - b) < 10 * tol * (1 + np.linalg.norm(a))

    def test_iterate_on_data_point_moves_off(self):
        # coincident-anchor damping: starting exactly on a non-optimal
        # data point must still reach the minimizer
        X = np.array([[0.0, 0.0], [10.0, 0.0], [10.0, 1.0], [10.0, -1.0]])
        res = spatial_median(X, init=X[0], check_descent=True)
        np.testing.assert_allclose(res.median, [10, 0], atol=1e-6)

    def test_outlier_robustness_vs_mean(self):
        rng = np.random.default_rng(9)
        cloud = rng.normal(size=(9, 2))
        diameter = max(
            np.linalg.norm(a - b) for a in cloud for b in cloud
        )
        clean_median = spatial_median(cloud).median
        clean_mean = cloud.mean(axis=0)

        poisoned = cloud.copy()
        poisoned[0] = [1e6, 1e6]
        shift_median = np.linalg.norm(spatial_median(poisoned).median - clean_median)
        shift_mean = np.linalg.norm(poisoned.mean(axis=0) - clean_mean)
        assert shift_median < diameter
        assert shift_mean > 10 * diameter
