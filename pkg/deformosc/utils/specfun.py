# -*- coding:utf-8 -*-
"""
Scalar special-function kernel: complex log-gamma, squared gamma moduli,
Pochhammer symbols and terminating hypergeometric sums.

All functions accept numpy arrays and broadcast; scalars in give scalars out.
"""
import collections

import numpy as np

from hypernets.utils import logging
from deformosc.config import Config as cfg

logger = logging.get_logger(__name__)

# Lanczos approximation, g = 7, n = 9.
_LANCZOS_G = 7.
_LANCZOS_COEF = np.array([
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
])
_LOG_SQRT_2PI = 0.5 * np.log(2. * np.pi)
_LOG_PI = np.log(np.pi)
_LOG_2 = np.log(2.)


def _unwrap_scalar(value, scalar):
    return value[0] if scalar else value


def _check_poles(z):
    poles = (z.imag == 0.) & (z.real <= 0.) & (z.real == np.round(z.real))
    if np.any(poles):
        raise ValueError(f'{z[poles].flat[0].real:g} is a pole of the gamma function.')


def _ln_gamma_lanczos(z):
    """Log-gamma for Re z >= 1/2."""
    z = z - 1.
    series = np.full_like(z, _LANCZOS_COEF[0])
    for i in range(1, len(_LANCZOS_COEF)):
        series = series + _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _LOG_SQRT_2PI + (z + 0.5) * np.log(t) - t + np.log(series)


def _ln_sin_pi(z):
    """log(sin(pi z)) for Im z >= 0 without overflow of sinh."""
    out = np.empty_like(z)
    small = z.imag < 20.
    if np.any(small):
        out[small] = np.log(np.sin(np.pi * z[small]))
    large = ~small
    if np.any(large):
        zl = z[large]
        # sin(pi z) = i/2 * exp(-i pi z) * (1 - exp(2 i pi z))
        out[large] = -1j * np.pi * zl + np.log(0.5j) + np.log1p(-np.exp(2j * np.pi * zl))
    return out


def ln_gamma_complex(z):
    """Complex log-gamma.

    The Lanczos sum is used for Re z >= 1/2 and the reflection formula
    log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z) otherwise.
    The real part is accurate to about 1e-15 relative; the imaginary part
    follows the principal branch for Re z >= 1/2 and is defined modulo 2 pi
    for reflected arguments.

    Parameters
    ----------
    z : complex or array-like of complex.

    Returns
    -------
    value : complex or ndarray of complex, conjugate symmetric in z.

    Raises
    ------
    ValueError
        When z is 0 or a negative integer.
    """
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    _check_poles(z)

    # evaluate on the upper half plane, mirror the rest
    lower = z.imag < 0.
    zu = np.where(lower, np.conj(z), z)

    out = np.empty_like(zu)
    right = zu.real >= 0.5
    if np.any(right):
        out[right] = _ln_gamma_lanczos(zu[right])
    left = ~right
    if np.any(left):
        zl = zu[left]
        out[left] = _LOG_PI - _ln_sin_pi(zl) - _ln_gamma_lanczos(1. - zl)

    out = np.where(lower, np.conj(out), out)
    return _unwrap_scalar(out, scalar)


def ln_abs_gamma(z):
    """Re log Gamma(z) = log |Gamma(z)|."""
    return np.real(ln_gamma_complex(z))


def abs_gamma_sq(z):
    """|Gamma(z)|^2 = exp(2 Re log Gamma(z)), strictly positive.

    Raises
    ------
    ValueError
        When z is 0 or a negative integer.
    """
    return np.exp(2. * ln_abs_gamma(z))


def pochhammer(a, k):
    """Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.

    Parameters
    ----------
    a : float or array-like, real or complex.
    k : int, nonnegative.
    """
    k = int(k)
    if k < 0:
        raise ValueError(f'Pochhammer symbol needs a nonnegative integer k, got {k}.')
    a = np.asarray(a)
    result = np.ones_like(a, dtype=np.result_type(a, float))
    for j in range(k):
        result = result * (a + j)
    return result[()] if result.ndim == 0 else result


class TermSeriesSpec(
    collections.namedtuple('TermSeriesSpec',
                           ['n',
                            'numerator_params',
                            'denominator_params',
                            'argument'])):
    """Terminating generalized hypergeometric series with exactly n+1 terms.

    Parameters broadcast against each other, so one spec evaluates the series on
    a whole grid of complex parameters at once.
    """

    def __new__(cls, n, numerator_params, denominator_params, argument=1.):
        if int(n) != n or n < 0:
            raise ValueError(f'termination index n must be a nonnegative integer, got {n}.')
        numerator_params = tuple(np.asarray(p, dtype=complex) for p in numerator_params)
        denominator_params = tuple(np.asarray(p, dtype=complex) for p in denominator_params)
        argument = np.asarray(argument, dtype=complex)
        return super(TermSeriesSpec, cls).__new__(cls, int(n), numerator_params, denominator_params, argument)


def hyp_terminating(spec, return_scale=False):
    """Finite sum sum_{k=0}^{n} prod (num)_k / prod (den)_k * z^k / k!.

    The sum runs forward in k with a running term update, so no factorial
    tables are formed.

    Parameters
    ----------
    spec : TermSeriesSpec.
    return_scale : bool, default False.
        If True, also return the largest absolute value among the summed
        terms, the magnitude scale of the rounding error.

    Returns
    -------
    value : complex or ndarray of complex.
    scale : float or ndarray of float, only if return_scale is True.

    Raises
    ------
    ZeroDivisionError
        When a denominator parameter reaches zero within the first n terms.
    """
    arrays = spec.numerator_params + spec.denominator_params + (spec.argument,)
    shape = np.broadcast_shapes(*(np.shape(p) for p in arrays))

    term = np.ones(shape, dtype=complex)
    total = np.ones(shape, dtype=complex)
    scale = np.ones(shape, dtype=float)
    for k in range(spec.n):
        num = np.ones(shape, dtype=complex)
        for p in spec.numerator_params:
            num = num * (p + k)
        den = np.ones(shape, dtype=complex)
        for q in spec.denominator_params:
            if np.any(q + k == 0):
                raise ZeroDivisionError(f'denominator parameter {q} reaches zero at term {k + 1}.')
            den = den * (q + k)
        term = term * num / den * spec.argument / (k + 1)
        total = total + term
        scale = np.maximum(scale, np.abs(term))

    total = total[()] if total.ndim == 0 else total
    if return_scale:
        scale = scale[()] if scale.ndim == 0 else scale
        return total, scale
    return total


def real_part(value, scale=None, imag_tol=None):
    """Real part of a series that is real in exact arithmetic.

    Checks |Im| <= imag_tol * (1 + |Re|) plus rounding noise of the summed
    terms (64 ulp of `scale`), then drops the imaginary part.

    Raises
    ------
    RuntimeError
        When the imaginary part exceeds the bound.
    """
    if imag_tol is None:
        imag_tol = cfg.imag_tol
    value = np.asarray(value, dtype=complex)
    bound = imag_tol * (1. + np.abs(value.real))
    if scale is not None:
        bound = bound + 64. * np.finfo(float).eps * np.asarray(scale, dtype=float)
    excess = np.abs(value.imag) > bound
    if np.any(excess):
        worst = value[excess].flat[0] if value.ndim > 0 else value[()]
        raise RuntimeError(f'Series expected to be real has imaginary part {worst.imag:.3e} '
                           f'(real part {worst.real:.3e}).')
    re = value.real
    return re[()] if re.ndim == 0 else re


def hyp_series(numerator_params, denominator_params, argument, max_terms=None, term_tol=None):
    """Nonterminating series sum_k prod (num)_k / prod (den)_k * z^k / k! for scalar parameters.

    Summation stops when |term| <= term_tol * |sum| or after max_terms terms;
    reaching the cap is logged.

    Returns
    -------
    value : complex.
    """
    if max_terms is None:
        max_terms = cfg.series_max_terms
    if term_tol is None:
        term_tol = cfg.series_term_tol
    num = [complex(p) for p in numerator_params]
    den = [complex(q) for q in denominator_params]
    z = complex(argument)

    term = 1. + 0j
    total = 1. + 0j
    for k in range(max_terms):
        ratio = z / (k + 1)
        for p in num:
            ratio *= p + k
        for q in den:
            if q + k == 0:
                raise ZeroDivisionError(f'denominator parameter {q} reaches zero at term {k + 1}.')
            ratio /= q + k
        term *= ratio
        total += term
        if abs(term) <= term_tol * abs(total):
            return total
    logger.warning(f'series stopped at the cap of {max_terms} terms, last term {abs(term):.3e}.')
    return total
