# -*- coding:utf-8 -*-
"""
Differential-reflection realization of su(1,1)_gamma on polynomials in z.

    J0 = z d/dz + a + c - 1/2
    J- = d/dz + (c - 1/2)(1 - R)/z
    J+ = z^2 d/dz + 2az + (c - 1/2) z (1 - R),    R f(z) = f(-z)

with |a,2n>   = sqrt((a)_n (a+c)_n / ((c)_n n!)) z^{2n},
     |a,2n+1> = sqrt((a)_{n+1} (a+c)_n / ((c)_{n+1} n!)) z^{2n+1}.
"""
import collections

import numpy as np
from scipy.special import gammaln

from hypernets.utils import logging

from deformosc.utils import consts
from deformosc.utils.specfun import hyp_series, real_part
from deformosc.framework.repalgebra import build_operator
from deformosc.framework.wavefunctions import ln_a0, ln_sqrt_weight, psi_recurrence

logger = logging.get_logger(__name__)


class PolyInZ(
    collections.namedtuple('PolyInZ',
                           ['coeffs'])):
    """Polynomial with the coefficient of z^k at index k; trailing zeros are dropped."""

    def __new__(cls, coeffs):
        coeffs = np.trim_zeros(np.atleast_1d(np.asarray(coeffs, dtype=float)), 'b')
        if coeffs.size == 0:
            coeffs = np.zeros(1)
        return super(PolyInZ, cls).__new__(cls, coeffs)

    @classmethod
    def monomial(cls, k, value=1.):
        coeffs = np.zeros(k + 1)
        coeffs[k] = value
        return cls(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def parity(self):
        k = np.arange(len(self.coeffs))
        if np.all(self.coeffs[k % 2 == 1] == 0):
            return consts.Parity_EVEN
        if np.all(self.coeffs[k % 2 == 0] == 0):
            return consts.Parity_ODD
        return consts.Parity_NONE

    def coef(self, k):
        return float(self.coeffs[k]) if 0 <= k < len(self.coeffs) else 0.

    def __call__(self, z):
        return np.polynomial.polynomial.polyval(z, self.coeffs)


def _check_b(params):
    if params.b != 0:
        raise ValueError(f'The realization is defined for b = 0, got b={params.b}.')


def basis_norm(k, params):
    """Normalization scalar N_k of |a,k> = N_k z^k."""
    _check_b(params)
    a, c = params.a, params.c
    n, odd = divmod(int(k), 2)

    def ln_poch(x, m):
        return gammaln(x + m) - gammaln(x)

    if odd:
        ln_sq = ln_poch(a, n + 1) + ln_poch(a + c, n) - ln_poch(c, n + 1) - gammaln(n + 1.)
    else:
        ln_sq = ln_poch(a, n) + ln_poch(a + c, n) - ln_poch(c, n) - gammaln(n + 1.)
    return float(np.exp(0.5 * ln_sq))


def apply_realized(kind, f, params):
    """Apply J0, J+, J- or R to a polynomial, exactly on the coefficient level.

    Returns
    -------
    PolyInZ.
    """
    if kind not in consts.REALIZED_KINDS:
        raise ValueError(f'Unknown realized operator {kind}, expected one of {consts.REALIZED_KINDS}.')
    a, c = params.a, params.c
    coeffs = f.coeffs
    k = np.arange(len(coeffs), dtype=float)
    # (1 - R) z^k = (1 - (-1)^k) z^k
    flip = np.where(k % 2 == 1, 2., 0.)

    if kind == consts.Kind_R:
        return PolyInZ(np.where(k % 2 == 1, -coeffs, coeffs))
    if kind == consts.Kind_J0:
        return PolyInZ((k + a + c - 0.5) * coeffs)
    if kind == consts.Kind_JMINUS:
        # z^0 is annihilated by both terms, no pole at z = 0
        lowered = (k + (c - 0.5) * flip) * coeffs
        return PolyInZ(lowered[1:])
    raised = (k + 2. * a + (c - 0.5) * flip) * coeffs
    return PolyInZ(np.concatenate([[0.], raised]))


def realized_element(kind, k, params):
    """Matrix element <a,k'| X |a,k> of the realized operator, k' = k, k+1 or k-1."""
    target = {consts.Kind_J0: k, consts.Kind_JPLUS: k + 1, consts.Kind_JMINUS: k - 1}[kind]
    if target < 0:
        return 0.
    image = apply_realized(kind, PolyInZ.monomial(k), params)
    return image.coef(target) * basis_norm(k, params) / basis_norm(target, params)


def realization_consistency(nmax, params, return_detail=False):
    """Max |realized matrix element - algebra matrix element| over k <= nmax.

    Parameters
    ----------
    nmax : int.
    params : ModelParams with b = 0.
    return_detail : bool, default False.
        If True, also return the maximum per operator kind.

    Returns
    -------
    residual : float, or (residual, dict) when return_detail is True.
    """
    _check_b(params)
    N = nmax + 2
    matrices = {kind: build_operator(kind, params, N).entries
                for kind in (consts.Kind_J0, consts.Kind_JPLUS, consts.Kind_JMINUS)}
    detail = {}
    for kind, entries in matrices.items():
        worst = 0.
        for k in range(nmax + 1):
            target = {consts.Kind_J0: k, consts.Kind_JPLUS: k + 1, consts.Kind_JMINUS: k - 1}[kind]
            if target < 0:
                continue
            expected = entries[target, k]
            worst = max(worst, abs(realized_element(kind, k, params) - expected))
        detail[kind] = worst
    residual = max(detail.values())
    if return_detail:
        return residual, detail
    return residual


def _check_guard(z):
    if abs(z) > consts.GENERATING_Z_GUARD:
        raise ValueError(f'|z| = {abs(z)} exceeds the convergence guard {consts.GENERATING_Z_GUARD}.')


def generating_sum(x, z, params, parity, nterms):
    """Partial sum of sum_n psi_k(x) N_k z^k over k = 2n (even) or k = 2n+1 (odd), n <= nterms.

    The psi_k come from the recurrence route.
    """
    _check_b(params)
    _check_guard(z)
    if parity not in (consts.Parity_EVEN, consts.Parity_ODD):
        raise ValueError(f'parity must be even or odd, got {parity}.')
    offset = 0 if parity == consts.Parity_EVEN else 1
    kmax = 2 * nterms + offset
    psi = psi_recurrence(float(x), kmax, params)
    total = 0.
    for k in range(offset, kmax + 1, 2):
        total += psi[k] * basis_norm(k, params) * z ** k
    return float(total)


def generating_closed(x, z, params, parity, return_complex=False):
    """Closed form of the generating sums.

    even: sqrt(w / (G(a) G(c) G(a+c))) (1+z^2)^{-a+ix} 2F1(ix, c+ix; c; -z^2)
    odd:  sqrt(w / (G(a) G(c) G(a+c))) (xz/c) (1+z^2)^{-a+ix} 2F1(1+ix, c+ix; 1+c; -z^2)

    The hypergeometric factor is summed as a complex power series. The product
    is real in exact arithmetic; its imaginary part is checked and dropped.
    """
    _check_b(params)
    _check_guard(z)
    a, c = params.a, params.c
    x, z = float(x), float(z)
    ix = 1j * x
    power = np.exp((-a + ix) * np.log1p(z * z))
    if parity == consts.Parity_EVEN:
        value = power * hyp_series([ix, c + ix], [c], -z * z)
    elif parity == consts.Parity_ODD:
        value = (x * z / c) * power * hyp_series([1. + ix, c + ix], [1. + c], -z * z)
    else:
        raise ValueError(f'parity must be even or odd, got {parity}.')
    value = value * np.exp(ln_a0(params) + ln_sqrt_weight(x, params))
    if return_complex:
        return complex(value)
    return float(real_part(value))
