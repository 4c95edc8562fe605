import numpy as np

from hypernets.utils import logging
logger = logging.get_logger(__name__)


def check_is_array(y_true, y_pred):
    """Check whether the value is array-like.
    If not, convert the value to array-like.
    """
    if not isinstance(y_true, np.ndarray):
        y_true = np.asarray(y_true)
    if not isinstance(y_pred, np.ndarray):
        y_pred = np.asarray(y_pred)

    if y_true.shape != y_pred.shape:
        y_true, y_pred = np.broadcast_arrays(y_true, y_pred)

    return y_true, y_pred


def max_abs(y_true, y_pred):
    """Maximum absolute deviation (sup norm of the difference).

    Parameters
    ----------
    y_true : array-like, reference values.
    y_pred : array-like, values under test, broadcastable against y_true.

    Returns
    -------
    residual : float, 0.0 for empty input.
    """
    y_true, y_pred = check_is_array(y_true, y_pred)
    if y_true.size == 0:
        return 0.
    return float(np.max(np.abs(y_pred - y_true)))


def scaled_residual(residual, scale, floor=1e-300):
    """Residual divided by a magnitude scale.

    The scale of an identity between terminating sums is the largest absolute
    value among the summed terms, so that growing polynomial values do not
    turn absolute tolerances meaningless.
    """
    residual = np.abs(np.asarray(residual, dtype=float))
    scale = np.maximum(np.abs(np.asarray(scale, dtype=float)), floor)
    return residual / scale


def max_scaled(y_true, y_pred, scale):
    """Maximum of |y_pred - y_true| / max(scale, |y_true|)."""
    y_true, y_pred = check_is_array(y_true, y_pred)
    if y_true.size == 0:
        return 0.
    scale = np.maximum(np.abs(np.asarray(scale, dtype=float)), np.abs(y_true))
    return float(np.max(scaled_residual(y_pred - y_true, scale)))


def worst_ratio(values, floor=0.):
    """Largest ratio of consecutive terms, 0 if there is none.

    A sequence decreases strictly when the result is below one. Terms at or
    below `floor` count as converged and are not compared.
    """
    values = list(values)
    ratios = [cur / prev for prev, cur in zip(values[:-1], values[1:]) if cur > floor and prev > 0]
    return max(ratios) if ratios else 0.
