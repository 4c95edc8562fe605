# -*- coding:utf-8 -*-
"""
Meixner-Pollaczek, continuous dual Hahn and Laguerre polynomials.

The polynomials are evaluated from their terminating hypergeometric
definitions; the three-term recurrences in n are kept as independent oracles.
"""
import collections

import numpy as np

from hypernets.utils import logging

from deformosc.utils.specfun import TermSeriesSpec, hyp_terminating, pochhammer, real_part

logger = logging.get_logger(__name__)


class CdhQuery(
    collections.namedtuple('CdhQuery',
                           ['n',
                            'x2',
                            'a',
                            'b',
                            'c'])):
    """Continuous dual Hahn query S_n(x2; a, b, c).

    Notes
    ----------
    x2 is the squared spectral variable and may be negative (formal solutions of
    the three parameter algebra use x^2 - b^2).
    """
    def __new__(cls, n, x2, a, b=0., c=1.):
        if int(n) != n or n < 0:
            raise ValueError(f'degree n must be a nonnegative integer, got {n}.')
        if a <= 0 or c <= 0 or b < 0:
            raise ValueError(f'continuous dual Hahn parameters need a > 0, c > 0, b >= 0, '
                             f'got a={a}, b={b}, c={c}.')
        return super(CdhQuery, cls).__new__(cls, int(n), x2, float(a), float(b), float(c))


class MpQuery(
    collections.namedtuple('MpQuery',
                           ['n',
                            'x',
                            'a'])):
    """Meixner-Pollaczek query P_n^{(a)}(x; pi/2)."""
    def __new__(cls, n, x, a):
        if int(n) != n or n < 0:
            raise ValueError(f'degree n must be a nonnegative integer, got {n}.')
        if a <= 0:
            raise ValueError(f'Meixner-Pollaczek parameter needs a > 0, got {a}.')
        return super(MpQuery, cls).__new__(cls, int(n), x, float(a))


def cdh_normalized(n, x2, a, b, c, return_scale=False):
    """3F2(-n, a+ix, a-ix; a+b, a+c; 1) with x = sqrt(x2).

    For negative x2 the pair a +- ix becomes the real pair a -+ sqrt(-x2).
    The result is real; the magnitude scale is the largest summed term.
    """
    ix = 1j * np.sqrt(np.asarray(x2, dtype=complex))
    spec = TermSeriesSpec(n, [-n, a + ix, a - ix], [a + b, a + c], 1.)
    value, scale = hyp_terminating(spec, return_scale=True)
    value = real_part(value, scale)
    if return_scale:
        return value, scale
    return value


def cdh(q, return_scale=False):
    """Continuous dual Hahn polynomial.

    S_n(x^2; a, b, c) = (a+b)_n (a+c)_n 3F2(-n, a+ix, a-ix; a+b, a+c; 1).

    Parameters
    ----------
    q : CdhQuery, x2 may be an array.
    return_scale : bool, default False.
        If True, also return the largest absolute summed term times the
        Pochhammer prefactor.

    Returns
    -------
    value : float or ndarray of float.
    """
    value, scale = cdh_normalized(q.n, q.x2, q.a, q.b, q.c, return_scale=True)
    prefactor = pochhammer(q.a + q.b, q.n) * pochhammer(q.a + q.c, q.n)
    if return_scale:
        return value * prefactor, scale * abs(prefactor)
    return value * prefactor


def mp(q, return_scale=False):
    """Meixner-Pollaczek polynomial at phi = pi/2.

    P_n^{(a)}(x; pi/2) = (2a)_n / n! * i^n * 2F1(-n, a+ix; 2a; 2).

    Parameters
    ----------
    q : MpQuery, x may be an array.

    Returns
    -------
    value : float or ndarray of float.
    """
    x = np.asarray(q.x, dtype=float)
    spec = TermSeriesSpec(q.n, [-q.n, q.a + 1j * x], [2. * q.a], 2.)
    value, scale = hyp_terminating(spec, return_scale=True)
    prefactor = pochhammer(2. * q.a, q.n) / np.prod(np.arange(1, q.n + 1, dtype=float))
    value = real_part(value * (1j ** q.n) * prefactor, scale * prefactor)
    if return_scale:
        return value, scale * prefactor
    return value


def laguerre(n, alpha, t):
    """Generalized Laguerre polynomial L_n^{(alpha)}(t).

    Seeded with L_0 = 1 and L_1 = alpha + 1 - t, then
    (k+1) L_{k+1} = (2k + 1 + alpha - t) L_k - (k + alpha) L_{k-1}.
    """
    if int(n) != n or n < 0:
        raise ValueError(f'degree n must be a nonnegative integer, got {n}.')
    t = np.asarray(t, dtype=float)
    prev = np.ones_like(t)
    if n == 0:
        return prev[()] if prev.ndim == 0 else prev
    cur = alpha + 1. - t
    for k in range(1, int(n)):
        prev, cur = cur, ((2 * k + 1 + alpha - t) * cur - (k + alpha) * prev) / (k + 1)
    return cur[()] if cur.ndim == 0 else cur


def mp_recurrence(n, x, a):
    """Meixner-Pollaczek value by (k+1) P_{k+1} = 2x P_k - (k + 2a - 1) P_{k-1}."""
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev[()] if prev.ndim == 0 else prev
    cur = 2. * x
    for k in range(1, int(n)):
        prev, cur = cur, (2. * x * cur - (k + 2. * a - 1.) * prev) / (k + 1)
    return cur[()] if cur.ndim == 0 else cur


def cdh_recurrence(n, x2, a, b, c):
    """Continuous dual Hahn value by its three-term recurrence in n.

    With s_k = S_k / ((a+b)_k (a+c)_k), A_k = (k+a+b)(k+a+c), C_k = k(k+b+c-1):
    -(a^2 + x^2) s_k = A_k s_{k+1} - (A_k + C_k) s_k + C_k s_{k-1}.
    """
    x2 = np.asarray(x2, dtype=float)
    prev = np.zeros_like(x2)
    cur = np.ones_like(x2)
    for k in range(int(n)):
        A = (k + a + b) * (k + a + c)
        C = k * (k + b + c - 1.)
        prev, cur = cur, ((A + C - (a * a + x2)) * cur - C * prev) / A
    value = cur * pochhammer(a + b, n) * pochhammer(a + c, n)
    return value[()] if np.ndim(value) == 0 else value


def cdh_diff_residuals(n, x, a, b, c, return_scale=False):
    """Residuals of the two difference relations between S_n(.; a, b, c) and S_n(.; a, b+1, c).

    r1 = (x^2 + b^2) S_n(x^2; a, b+1, c) - (n+a+b)(n+b+c) S_n(x^2; a, b, c) + S_{n+1}(x^2; a, b, c)
    r2 = S_n(x^2; a, b, c) - S_n(x^2; a, b+1, c) + n (n+a+c-1) S_{n-1}(x^2; a, b+1, c)

    Both vanish identically. With return_scale the local magnitude scale of
    each relation (largest term or summand involved) is returned as well.

    Returns
    -------
    (r1, r2) or ((r1, r2), (scale1, scale2))
    """
    x2 = np.asarray(x, dtype=float) ** 2
    s_n, k_n = cdh(CdhQuery(n, x2, a, b, c), return_scale=True)
    s_next, k_next = cdh(CdhQuery(n + 1, x2, a, b, c), return_scale=True)
    t_n, m_n = cdh(CdhQuery(n, x2, a, b + 1., c), return_scale=True)

    u1 = (x2 + b * b) * t_n
    u2 = (n + a + b) * (n + b + c) * s_n
    r1 = u1 - u2 + s_next
    scale1 = np.maximum.reduce([np.abs(u1), np.abs(u2), np.abs(s_next),
                                (x2 + b * b) * m_n, abs((n + a + b) * (n + b + c)) * k_n, k_next])

    if n > 0:
        t_prev, m_prev = cdh(CdhQuery(n - 1, x2, a, b + 1., c), return_scale=True)
        v3 = n * (n + a + c - 1.) * t_prev
        m3 = abs(n * (n + a + c - 1.)) * m_prev
    else:
        v3, m3 = np.zeros_like(x2), np.zeros_like(x2)
    r2 = s_n - t_n + v3
    scale2 = np.maximum.reduce([np.abs(s_n), np.abs(t_n), np.abs(v3), k_n, m_n, m3])

    if return_scale:
        return (r1, r2), (scale1, scale2)
    return r1, r2


def hyp_contiguous_residuals(n, A, B, C, D, z=1.):
    """Residuals of the two 3F2 contiguous identities behind the difference relations.

    F(-n,A,B;C,D;z) - F(-n-1,A,B;C,D;z) - zAB/(CD) F(-n,A+1,B+1;C+1,D+1;z)
    (n+C) F(-n,A,B;C+1,D;z) - n F(-n+1,A,B;C+1,D;z) - C F(-n,A,B;C,D;z)

    Returns
    -------
    ((e1, e2), (scale1, scale2)) with complex residuals and real scales.
    """
    def F(m, num, den):
        if m < 0:
            return 0j, 0.
        return hyp_terminating(TermSeriesSpec(m, [-m] + num, den, z), return_scale=True)

    f0, k0 = F(n, [A, B], [C, D])
    f1, k1 = F(n + 1, [A, B], [C, D])
    f2, k2 = F(n, [A + 1, B + 1], [C + 1, D + 1])
    ratio = z * A * B / (C * D)
    e1 = f0 - f1 - ratio * f2
    scale1 = max(k0, k1, abs(ratio) * k2)

    g0, m0 = F(n, [A, B], [C + 1, D])
    g1, m1 = F(n - 1, [A, B], [C + 1, D])
    e2 = (n + C) * g0 - n * g1 - C * f0
    scale2 = max(abs(n + C) * m0, n * m1, abs(C) * k0)

    return (e1, e2), (scale1, scale2)
