import numpy as np

from deformosc.utils import metrics


class Test_Metrics():

    def test_max_abs(self):
        y_true = np.array([1., 2., 3.])
        y_pred = np.array([1., 2.5, 2.])
        assert metrics.max_abs(y_true, y_pred) == 1.
        assert metrics.max_abs([], []) == 0.
        # broadcasting a scalar reference
        assert metrics.max_abs(0., y_pred) == 2.5

    def test_max_scaled(self):
        y_true = np.array([1e6, 1.])
        y_pred = np.array([1e6 + 1., 1.])
        assert metrics.max_scaled(y_true, y_pred, 1.) == 1e-6
        assert metrics.max_scaled(y_true, y_pred, 1e7) == 1e-7

    def test_scaled_residual(self):
        r = metrics.scaled_residual([-2., 3.], [4., 0.])
        assert r[0] == 0.5
        assert np.isfinite(r[0]) and r[1] > 1e200

    def test_worst_ratio(self):
        assert metrics.worst_ratio([1., 0.5, 0.25]) == 0.5
        assert metrics.worst_ratio([1., 0.5, 0.5]) == 1.
        assert metrics.worst_ratio([1., 1.05, 0.5]) == 1.05
        # converged tail is ignored
        assert metrics.worst_ratio([1e-3, 1e-12, 2e-12], floor=1e-10) == 0.
        assert metrics.worst_ratio([]) == 0.
