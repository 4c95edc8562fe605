# -*- coding:utf-8 -*-
"""
Composite Gauss-Legendre quadrature on the real line for integrands with an
e^{-pi |x|} poly(|x|) envelope.
"""
import collections

import numpy as np

from hypernets.utils import logging

from deformosc.config import Config as cfg
from deformosc.utils import consts

logger = logging.get_logger(__name__)

_DYADIC_BREAKS = [0., 0.125, 0.25, 0.5, 1.]


class QuadratureSpec(
    collections.namedtuple('QuadratureSpec',
                           ['rel_tol',
                            'abs_tol',
                            'max_halfwidth',
                            'panel_order',
                            'max_panels'])):
    """Tolerances and budget of `integrate_real_line`.

    max_halfwidth None lets the truncation bound follow from the decay envelope.
    """

    def __new__(cls, rel_tol=None, abs_tol=None, max_halfwidth=None, panel_order=None, max_panels=None):
        rel_tol = cfg.quad_rel_tol if rel_tol is None else float(rel_tol)
        abs_tol = cfg.quad_abs_tol if abs_tol is None else float(abs_tol)
        panel_order = cfg.quad_panel_order if panel_order is None else int(panel_order)
        max_panels = cfg.quad_max_panels if max_panels is None else int(max_panels)
        if rel_tol <= 0 or abs_tol <= 0:
            raise ValueError(f'Quadrature tolerances must be positive, got rel_tol={rel_tol}, abs_tol={abs_tol}.')
        if panel_order < 8:
            raise ValueError(f'panel_order must be at least 8, got {panel_order}.')
        if max_halfwidth is not None and max_halfwidth <= 0:
            raise ValueError(f'max_halfwidth must be positive, got {max_halfwidth}.')
        return super(QuadratureSpec, cls).__new__(cls, rel_tol, abs_tol, max_halfwidth, panel_order, max_panels)


def truncation_halfwidth(d, abs_tol, low=None, high=None, n_iter=8):
    """Half width L with L^d e^{-pi L} below abs_tol / 10.

    Fixed point iteration L <- (d log L - log(abs_tol / 10)) / pi from L = low,
    clamped to [low, high].
    """
    low = cfg.quad_min_halfwidth if low is None else low
    high = cfg.quad_max_halfwidth if high is None else high
    target = np.log(abs_tol / 10.)
    L = low
    for _ in range(n_iter):
        L = max(low, (max(d, 0.) * np.log(L) - target) / np.pi)
        if L >= high:
            return float(high)
    return float(min(max(L, low), high))


def panel_breaks(halfwidth):
    """Dyadic panels on [0, 1] followed by unit panels up to the half width."""
    tail = np.arange(2., np.ceil(halfwidth) + 1.)
    return np.concatenate([_DYADIC_BREAKS, tail])


def _nodes(breaks, order):
    t, wt = np.polynomial.legendre.leggauss(order)
    left, right = breaks[:-1], breaks[1:]
    half = 0.5 * (right - left)
    mid = 0.5 * (right + left)
    # panels in ascending |x|, nodes contiguous per panel
    x = (mid[:, None] + half[:, None] * t[None, :]).ravel()
    w = (half[:, None] * wt[None, :]).ravel()
    return x, w


def _halve(breaks):
    mids = 0.5 * (breaks[:-1] + breaks[1:])
    out = np.empty(2 * len(breaks) - 1)
    out[0::2] = breaks
    out[1::2] = mids
    return out


def refine(apply, spec, halfwidth, symmetric):
    """Panel refinement driver.

    apply(x, w) returns (value, magnitude) where magnitude bounds the sum of
    absolute contributions; it sets the rounding floor of the convergence test.
    Each round halves every panel and compares against the previous result.

    Returns
    -------
    (value, error_estimate)

    Raises
    ------
    RuntimeError
        When the panel count exceeds spec.max_panels before convergence.
    """
    breaks = panel_breaks(halfwidth)

    def evaluate(bk):
        x, w = _nodes(bk, spec.panel_order)
        if symmetric:
            x = np.concatenate([x, -x])
            w = np.concatenate([w, w])
        return apply(x, w)

    previous, _ = evaluate(breaks)
    while True:
        breaks = _halve(breaks)
        n_panels = len(breaks) - 1
        if n_panels > spec.max_panels:
            raise RuntimeError(f'Quadrature did not converge within {spec.max_panels} panels '
                               f'(half width {halfwidth:g}).')
        current, magnitude = evaluate(breaks)
        error = np.abs(current - previous)
        noise = 64. * np.finfo(float).eps * magnitude
        bound = np.maximum(np.maximum(spec.rel_tol * np.abs(current), spec.abs_tol), noise)
        if np.all(error <= bound):
            logger.debug(f'quadrature converged with {n_panels} panels, error {np.max(error):.3e}')
            return current, error
        previous = current


def integrate_real_line(f, spec=None, parity=consts.Parity_NONE, d=0., return_error=False):
    """Integral of f over the real line.

    Parameters
    ----------
    f : callable, f(x) for an array of nodes returns an array of shape (..., len(x)).
    spec : QuadratureSpec, default QuadratureSpec().
    parity : 'even', 'odd' or 'none'.
        even integrands are integrated on [0, L] and doubled, odd integrands
        return 0 without evaluation.
    d : float, polynomial degree of the decay envelope, selects L when
        spec.max_halfwidth is None.
    return_error : bool, default False.

    Returns
    -------
    value : float or ndarray, with the error estimate when return_error is True.

    Raises
    ------
    RuntimeError
        When the panel refinement does not converge.
    """
    if spec is None:
        spec = QuadratureSpec()
    if parity == consts.Parity_ODD:
        return (0., 0.) if return_error else 0.
    if parity not in (consts.Parity_EVEN, consts.Parity_NONE):
        raise ValueError(f'Unknown parity flag {parity}.')

    halfwidth = spec.max_halfwidth or truncation_halfwidth(d, spec.abs_tol)

    def apply(x, w):
        values = np.asarray(f(x), dtype=float)
        return values @ w, np.abs(values) @ w

    value, error = refine(apply, spec, halfwidth, symmetric=(parity == consts.Parity_NONE))
    if parity == consts.Parity_EVEN:
        value, error = 2. * value, 2. * error
    if np.ndim(value) == 0:
        value, error = float(value), float(error)
    if return_error:
        return value, error
    return value


def integrate_half_line(f, spec=None, d=0., return_error=False):
    """Integral of f over [0, L]."""
    if spec is None:
        spec = QuadratureSpec()
    halfwidth = spec.max_halfwidth or truncation_halfwidth(d, spec.abs_tol)

    def apply(x, w):
        values = np.asarray(f(x), dtype=float)
        return values @ w, np.abs(values) @ w

    value, error = refine(apply, spec, halfwidth, symmetric=False)
    if np.ndim(value) == 0:
        value, error = float(value), float(error)
    if return_error:
        return value, error
    return value


def integrate_gram(basis, spec=None, parity=consts.Parity_EVEN, d=0., return_error=False):
    """Matrix of integrals G_mn = int basis_m(x) basis_n(x) dx.

    basis(x) returns shape (K, len(x)); G is formed as B diag(w) B^T. With
    parity 'even' the functions are integrated on [0, L] and doubled, which is
    exact for products of equal parity only; the caller zeroes the rest.
    """
    if spec is None:
        spec = QuadratureSpec()
    if parity not in (consts.Parity_EVEN, consts.Parity_NONE):
        raise ValueError(f'Unsupported parity flag {parity} for a Gram matrix.')
    halfwidth = spec.max_halfwidth or truncation_halfwidth(d, spec.abs_tol)

    def apply(x, w):
        B = np.asarray(basis(x), dtype=float)
        A = np.abs(B)
        return (B * w) @ B.T, (A * w) @ A.T

    value, error = refine(apply, spec, halfwidth, symmetric=(parity == consts.Parity_NONE))
    if parity == consts.Parity_EVEN:
        value, error = 2. * value, 2. * error
    if return_error:
        return value, error
    return value
