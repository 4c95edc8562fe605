# -*- coding:utf-8 -*-
"""
Position and momentum wave functions of the su(1,1)_gamma oscillator.

psi_n^{(a,c)}(x) = sqrt(w(x)) A_n(x) where the A_n are continuous dual Hahn
polynomials in x^2. Two routes are provided: the closed hypergeometric form
and the forward solve of the eigenvalue recurrence of q. Normalizations are
combined in log space, so deformation labels up to c ~ 1e4 do not overflow.
"""
import collections

import joblib
import numpy as np
from scipy.special import gammaln, eval_hermite

from hypernets.utils import logging

from deformosc.config import Config as cfg
from deformosc.utils import consts
from deformosc.utils.specfun import ln_abs_gamma
from deformosc.framework.orthopoly import MpQuery, cdh_normalized, mp, laguerre
from deformosc.framework.repalgebra import build_operator, offdiag_args

logger = logging.get_logger(__name__)


class CoeffVector(
    collections.namedtuple('CoeffVector',
                           ['x',
                            'nmax',
                            'coeffs'])):
    """Coefficients A_0(x) ... A_nmax(x) of the formal q eigenvector.

    coeffs has shape (nmax + 1,) + np.shape(x).
    """

    def __new__(cls, x, nmax, coeffs):
        coeffs = np.asarray(coeffs, dtype=float)
        if coeffs.shape[0] != nmax + 1:
            raise ValueError(f'expected {nmax + 1} coefficients, got {coeffs.shape[0]}.')
        return super(CoeffVector, cls).__new__(cls, x, int(nmax), coeffs)


class WaveSample(
    collections.namedtuple('WaveSample',
                           ['family',
                            'n',
                            'x',
                            'value'])):

    def __new__(cls, family, n, x, value):
        if family not in (consts.Family_PSI, consts.Family_PHI_MP, consts.Family_PSI_PARABOSON):
            raise ValueError(f'Unknown wave function family {family}.')
        if not np.isfinite(value):
            raise ValueError(f'{family}_{n}({x}) is not finite.')
        return super(WaveSample, cls).__new__(cls, family, int(n), float(x), float(value))


def _check_undeformed_b(params):
    if params.b != 0:
        raise ValueError(f'Wave functions need b = 0, got b={params.b}; '
                         f'use coeff_recurrence for the formal three parameter coefficients.')


def ln_sqrt_weight(x, params):
    """log sqrt(w(x)) = Re lnG(a+ix) + Re lnG(c+ix) - Re lnG(1/2+ix)."""
    ix = 1j * np.asarray(x, dtype=float)
    return ln_abs_gamma(params.a + ix) + ln_abs_gamma(params.c + ix) - ln_abs_gamma(0.5 + ix)


def weight_w(x, params):
    """Weight w(x) = |Gamma(a+ix) Gamma(c+ix) / Gamma(1/2+ix)|^2.

    Even in x, strictly positive, w(0) = Gamma(a)^2 Gamma(c)^2 / pi.
    """
    _check_undeformed_b(params)
    return np.exp(2. * ln_sqrt_weight(x, params))


def ln_a0(params):
    """log A_0 = -(lnG(a+b) + lnG(b+c) + lnG(a+c)) / 2."""
    a, b, c = params.a, params.b, params.c
    return -0.5 * (gammaln(a + b) + gammaln(b + c) + gammaln(a + c))


def psi_closed(n, x, params, return_scale=False):
    """Wave function psi_n^{(a,c)}(x) from the continuous dual Hahn closed form.

    psi_{2m}   = sqrt(w) (-1)^m S_m(x^2; a, 0, c) / sqrt(G(m+a) G(m+c) G(m+a+c) m!)
    psi_{2m+1} = sqrt(w) (-1)^m x S_m(x^2; a, 1, c) / sqrt(G(m+a+1) G(m+c+1) G(m+a+c) m!)

    Parameters
    ----------
    n : int, nonnegative.
    x : float or array-like.
    params : ModelParams with b = 0.
    return_scale : bool, default False.
        If True, also return the magnitude scale of the summed series terms,
        carried through the same prefactor.

    Returns
    -------
    value : float or ndarray.
    """
    _check_undeformed_b(params)
    if int(n) != n or n < 0:
        raise ValueError(f'level n must be a nonnegative integer, got {n}.')
    a, c = params.a, params.c
    m, odd = divmod(int(n), 2)
    x = np.asarray(x, dtype=float)
    x2 = x * x

    if odd:
        F, scale = cdh_normalized(m, x2, a, 1., c, return_scale=True)
        ln_factor = (0.5 * gammaln(m + a + 1.) - gammaln(a + 1.)
                     + 0.5 * gammaln(m + a + c) - gammaln(a + c)
                     - 0.5 * gammaln(m + c + 1.) - 0.5 * gammaln(m + 1.))
    else:
        F, scale = cdh_normalized(m, x2, a, 0., c, return_scale=True)
        ln_factor = (0.5 * gammaln(m + a) - gammaln(a)
                     + 0.5 * gammaln(m + a + c) - gammaln(a + c)
                     - 0.5 * gammaln(m + c) - 0.5 * gammaln(m + 1.))

    factor = (-1.) ** m * np.exp(ln_factor + ln_sqrt_weight(x, params))
    if odd:
        factor = factor * x
    value = factor * F
    if return_scale:
        return value, np.abs(factor) * scale
    return value


def _unit_recurrence(x, nmax, params):
    """A_k / A_0 from x A_k = beta_{k-1} A_{k-1} + beta_k A_{k+1}, beta_k = sqrt(args_k)/2."""
    x = np.asarray(x, dtype=float)
    beta = np.sqrt(offdiag_args(params, nmax + 2)) / 2.
    ratios = np.empty((nmax + 1,) + x.shape, dtype=float)
    ratios[0] = 1.
    if nmax >= 1:
        ratios[1] = x / beta[0]
    for k in range(1, nmax):
        ratios[k + 1] = (x * ratios[k] - beta[k - 1] * ratios[k - 1]) / beta[k]
    return ratios


def coeff_recurrence(x, nmax, params):
    """Coefficients A_k(x), k <= nmax, by forward recurrence.

    A_0 = 1 / sqrt(G(a+b) G(b+c) G(a+c)), A_1 = x A_0 / sqrt((a+b)(b+c)), then
    A_{2n+1} = (x A_{2n} - sqrt(n (n+a+c-1)) A_{2n-1}) / sqrt((n+a+b)(n+b+c)) and
    A_{2n+2} = (x A_{2n+1} - sqrt((n+a+b)(n+b+c)) A_{2n}) / sqrt((n+1)(n+a+c)).

    For b > 0 these are the formal coefficients of the three parameter algebra.

    Returns
    -------
    CoeffVector.
    """
    if nmax < 1:
        raise ValueError(f'nmax must be at least 1, got {nmax}.')
    coeffs = np.exp(ln_a0(params)) * _unit_recurrence(x, nmax, params)
    return CoeffVector(x, nmax, coeffs)


def psi_recurrence(x, nmax, params):
    """psi_0 ... psi_nmax at x by the recurrence route, shape (nmax + 1,) + np.shape(x).

    sqrt(w) and A_0 are joined in log space before scaling the ratios.
    """
    _check_undeformed_b(params)
    ratios = _unit_recurrence(x, max(int(nmax), 1), params)[:nmax + 1]
    return np.exp(ln_a0(params) + ln_sqrt_weight(x, params)) * ratios


def psi_grid(x, nmax, params, n_jobs=None, chunk_size=512):
    """Evaluate psi_0 ... psi_nmax on a grid, in parallel over disjoint chunks.

    Chunks are concatenated in submission order, so the result does not
    depend on n_jobs.
    """
    if n_jobs is None:
        n_jobs = cfg.n_jobs
    x = np.asarray(x, dtype=float).ravel()
    chunks = [x[i:i + chunk_size] for i in range(0, len(x), chunk_size)] or [x]
    fn = joblib.delayed(psi_recurrence)
    paral = joblib.Parallel(n_jobs=n_jobs)
    res = paral(fn(chunk, nmax, params) for chunk in chunks)
    return np.concatenate(res, axis=-1)


def phi_mp_fn(n, x, a):
    """Normalized Meixner-Pollaczek function.

    phi_n^{(a)}(x) = 2^a sqrt(n!) / sqrt(2 pi G(n+2a)) |G(a+ix)| P_n^{(a)}(x; pi/2)
    """
    x = np.asarray(x, dtype=float)
    ln_factor = (a * np.log(2.) + 0.5 * gammaln(n + 1.) - 0.5 * np.log(2. * np.pi)
                 - 0.5 * gammaln(n + 2. * a) + ln_abs_gamma(a + 1j * x))
    return np.exp(ln_factor) * mp(MpQuery(n, x, a))


def psi_paraboson(n, xi, a):
    """Paraboson oscillator wave function.

    Psi_{2m}   = (-1)^m sqrt(m!/G(m+a))   |xi|^{a-1/2}    e^{-xi^2/2} L_m^{(a-1)}(xi^2)
    Psi_{2m+1} = (-1)^m sqrt(m!/G(m+a+1)) |xi|^{a-1/2} xi e^{-xi^2/2} L_m^{(a)}(xi^2)
    """
    if a <= 0:
        raise ValueError(f'paraboson parameter needs a > 0, got {a}.')
    m, odd = divmod(int(n), 2)
    xi = np.asarray(xi, dtype=float)
    alpha = a if odd else a - 1.
    norm = np.exp(0.5 * (gammaln(m + 1.) - gammaln(m + alpha + 1.)))
    if odd:
        # |xi|^{a-1/2} xi, finite and zero at the origin for every a > 0
        power = np.sign(xi) * np.abs(xi) ** (a + 0.5)
    else:
        with np.errstate(divide='ignore'):
            power = np.abs(xi) ** (a - 0.5)
    return (-1.) ** m * norm * power * np.exp(-0.5 * xi * xi) * laguerre(m, alpha, xi * xi)


def canonical_oscillator(n, xi):
    """Hermite function H_n(xi) e^{-xi^2/2} / sqrt(2^n n! sqrt(pi))."""
    xi = np.asarray(xi, dtype=float)
    ln_norm = -0.5 * (n * np.log(2.) + gammaln(n + 1.) + 0.5 * np.log(np.pi))
    return np.exp(ln_norm - 0.5 * xi * xi) * eval_hermite(n, xi)


def scaled_psi(n, xi, params):
    """c^{1/4} psi_n^{(a,c)}(sqrt(c) xi), the function whose c -> infinity limit is Psi_n^{(a)}."""
    xi = np.asarray(xi, dtype=float)
    psi = psi_recurrence(np.sqrt(params.c) * xi, n, params)[n]
    return params.c ** 0.25 * psi


def momentum_coeff(n, p, params):
    """Component i^n psi_n(p) of the formal p eigenvector."""
    return (1j ** (int(n) % 4)) * psi_closed(n, p, params)


def _eigen_residual(kind, vector, value, params):
    nmax = vector.shape[0] - 1
    op = build_operator(kind, params, nmax + 1).entries
    lhs = op @ vector
    return float(np.max(np.abs(lhs[:nmax] - value * vector[:nmax])))


def eigen_residual(x, nmax, params, route=consts.Route_CLOSED):
    """max_n |(Q psi(x))_n - x psi_n(x)| over n <= nmax - 1 at a scalar x."""
    if route == consts.Route_CLOSED:
        vector = np.array([psi_closed(k, x, params) for k in range(nmax + 1)])
    else:
        vector = psi_recurrence(x, nmax, params)
    return _eigen_residual(consts.Kind_Q, vector, x, params)


def momentum_residual(p, nmax, params):
    """max_n |(P u)_n - p u_n| with u_n = i^n psi_n(p), over n <= nmax - 1."""
    vector = np.array([momentum_coeff(k, p, params) for k in range(nmax + 1)])
    return _eigen_residual(consts.Kind_P, vector, p, params)


def beta_bound_flag(params):
    """Whether psi_0(0)^2 = B(a, c)/pi is at most one.

    Returns
    -------
    (acceptable, value) : (bool, float) with value = B(a, c)/pi.
    """
    value = params.beta_ac / np.pi
    return bool(value <= 1.), value


def peak_scan(params, nmax=10, x_range=(-10., 10.), step=0.01):
    """Scan |psi_n(x)|^2 for n <= nmax on a grid and locate its maximum.

    Returns
    -------
    dict with keys n, x, peak, origin_value and at_origin. Not meeting the
    maximum at (0, 0) is logged, never raised.
    """
    x = np.arange(x_range[0], x_range[1] + 0.5 * step, step)
    x = np.where(np.abs(x) < 0.5 * step, 0., x)
    prob = psi_recurrence(x, nmax, params) ** 2
    n_star, i_star = np.unravel_index(int(np.argmax(prob)), prob.shape)
    origin_value = params.beta_ac / np.pi
    at_origin = bool(n_star == 0 and x[i_star] == 0.)
    if not at_origin:
        logger.warning(f'peak of |psi_n|^2 at n={n_star}, x={x[i_star]:.4g} '
                       f'for a={params.a}, c={params.c}, not at the origin.')
    return {'n': int(n_star),
            'x': float(x[i_star]),
            'peak': float(prob[n_star, i_star]),
            'origin_value': float(origin_value),
            'at_origin': at_origin}


def sample(family, n, x, params):
    """One WaveSample of the named family; params.a is used by the limit families."""
    if family == consts.Family_PSI:
        value = psi_closed(n, x, params)
    elif family == consts.Family_PHI_MP:
        value = phi_mp_fn(n, x, params.a)
    else:
        value = psi_paraboson(n, x, params.a)
    return WaveSample(family, n, x, value)


__all__ = ['CoeffVector', 'WaveSample', 'weight_w', 'ln_sqrt_weight', 'psi_closed',
           'coeff_recurrence', 'psi_recurrence', 'psi_grid', 'phi_mp_fn', 'psi_paraboson',
           'canonical_oscillator', 'scaled_psi', 'momentum_coeff', 'eigen_residual',
           'momentum_residual', 'beta_bound_flag', 'peak_scan', 'sample']
