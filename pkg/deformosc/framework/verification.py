# -*- coding:utf-8 -*-
"""
Identity and limit checks with structured reports.

Every check returns VerificationReport objects; a failed identity is a report
with passed=False, never an exception.
"""
import collections
import json
from pathlib import Path

import joblib
import numpy as np
from scipy.special import gammaln

from hypernets.utils import logging

from deformosc.config import Config as cfg
from deformosc.utils import consts
from deformosc.utils.metrics import max_abs, max_scaled, scaled_residual, worst_ratio
from deformosc.utils.specfun import TermSeriesSpec, hyp_terminating, ln_abs_gamma, ln_gamma_complex, \
    pochhammer
from deformosc.framework import orthopoly, repalgebra, realization, wavefunctions
from deformosc.framework.quadrature import QuadratureSpec, integrate_gram, integrate_half_line, \
    integrate_real_line

logger = logging.get_logger(__name__)


class VerificationReport(
    collections.namedtuple('VerificationReport',
                           ['check_id',
                            'params',
                            'scale',
                            'residual',
                            'tolerance',
                            'passed',
                            'notes'])):
    """Outcome of one check. passed holds exactly when residual <= tolerance."""

    def __new__(cls, check_id, params, scale, residual, tolerance, notes=''):
        residual = float(residual)
        tolerance = float(tolerance)
        passed = bool(residual <= tolerance)
        return super(VerificationReport, cls).__new__(
            cls, check_id, params, str(scale), residual, tolerance, passed, str(notes))

    def to_dict(self):
        return {'check_id': self.check_id,
                'params': self.params.to_dict(),
                'scale': self.scale,
                'residual': self.residual,
                'tolerance': self.tolerance,
                'passed': self.passed,
                'notes': self.notes}


def _report(check_id, params, scale, residual, tolerance, notes=''):
    report = VerificationReport(check_id, params, scale, residual, tolerance, notes)
    log = logger.info if report.passed else logger.warning
    log(f'{check_id}: residual {report.residual:.3e}, tolerance {report.tolerance:.1e}, '
        f'passed={report.passed}')
    return report


def _base(params):
    return repalgebra.ModelParams(params.a, params.c)


def _envelope_degree(nmax, params):
    return 2. * nmax + 2. * params.a + 2. * params.c


# -------------------------------------------------------------------------------------------------
# orthonormality

def gram_matrix(nmax, params, spec=None, route=consts.Route_RECURRENCE, return_error=False):
    """Gram matrix G_mn = int psi_m psi_n dx for m, n <= nmax.

    Products of opposite parity are odd and set to zero without quadrature.

    Returns
    -------
    (G, report) or (G, report, error_estimate).
    """
    if spec is None:
        spec = QuadratureSpec()
    if params.b != 0:
        raise ValueError(f'gram_matrix needs b = 0, got b={params.b}.')

    if route == consts.Route_RECURRENCE:
        def basis(x):
            return wavefunctions.psi_recurrence(x, nmax, params)
    elif route == consts.Route_CLOSED:
        def basis(x):
            return np.array([wavefunctions.psi_closed(k, x, params) for k in range(nmax + 1)])
    else:
        raise ValueError(f'Unknown evaluation route {route}.')

    G, error = integrate_gram(basis, spec, parity=consts.Parity_EVEN,
                              d=_envelope_degree(nmax, params), return_error=True)
    k = np.arange(nmax + 1)
    mixed = (k[:, None] + k[None, :]) % 2 == 1
    G = np.where(mixed, 0., G)
    error = np.where(mixed, 0., error)

    residual = max_abs(np.eye(nmax + 1), G)
    report = _report(f'gram.{route}', params, f'm, n <= {nmax}', residual, consts.Tol_GRAM,
                     f'max quadrature error estimate {float(np.max(error)):.3e}')
    if return_error:
        return G, report, error
    return G, report


# -------------------------------------------------------------------------------------------------
# continuous dual Hahn orthogonality

def _ln_cdh_norm(n, a, b, c):
    return gammaln(n + a + b) + gammaln(n + a + c) + gammaln(n + b + c) + gammaln(n + 1.)


def cdh_ln_weight(x, a, b, c, weight_form=consts.WeightForm_DIRECT):
    """log of the half line weight of S_n(x^2; a, b, c).

    direct:    |G(a+ix) G(b+ix) G(c+ix) / G(2ix)|^2 / (2 pi)
    rewritten: 2 w(x) x^{2b}, available for b in {0, 1}
    """
    x = np.asarray(x, dtype=float)
    ix = 1j * x
    if weight_form == consts.WeightForm_DIRECT:
        ln_w = 2. * (ln_abs_gamma(a + ix) + ln_abs_gamma(c + ix) - ln_abs_gamma(2. * ix))
        if b == 0:
            # |G(ix)|^2 with the pole of G at 0 kept out of the kernel
            ln_w = ln_w + 2. * ln_abs_gamma(1. + ix) - 2. * np.log(np.abs(x))
        else:
            ln_w = ln_w + 2. * ln_abs_gamma(b + ix)
        return ln_w - np.log(2. * np.pi)
    if weight_form == consts.WeightForm_REWRITTEN:
        if b not in (0., 1.):
            raise ValueError(f'The rewritten weight form needs b in {{0, 1}}, got b={b}.')
        ln_w = 2. * (ln_abs_gamma(a + ix) + ln_abs_gamma(c + ix) - ln_abs_gamma(0.5 + ix))
        return np.log(2.) + ln_w + 2. * b * np.log(np.abs(x))
    raise ValueError(f'Unknown weight form {weight_form}.')


def cdh_orthogonality(m, n, a, b, c, spec=None, weight_form=consts.WeightForm_DIRECT, return_value=False):
    """Half line orthogonality of continuous dual Hahn polynomials.

    int_0^inf S_m S_n weight dx = delta_mn G(n+a+b) G(n+a+c) G(n+b+c) n!

    The integrand is normalized by sqrt(h_m h_n) in log space, so the residual
    is |I / sqrt(h_m h_n) - delta_mn|.
    """
    if spec is None:
        spec = QuadratureSpec()
    if a <= 0 or c <= 0 or b < 0:
        raise ValueError(f'Orthogonality needs a, c > 0 and b >= 0, got a={a}, b={b}, c={c}.')

    def ln_factor(k):
        return (gammaln(a + b + k) - gammaln(a + b) + gammaln(a + c + k) - gammaln(a + c)
                - 0.5 * _ln_cdh_norm(k, a, b, c))

    ln_fm, ln_fn = ln_factor(m), ln_factor(n)

    def f(x):
        x2 = x * x
        Fm = orthopoly.cdh_normalized(m, x2, a, b, c)
        Fn = orthopoly.cdh_normalized(n, x2, a, b, c)
        return np.exp(ln_fm + ln_fn + cdh_ln_weight(x, a, b, c, weight_form)) * Fm * Fn

    d = 2. * (m + n) + 2. * (a + b + c)
    value = integrate_half_line(f, spec, d=d)
    residual = abs(value - (1. if m == n else 0.))
    params = repalgebra.ModelParams(a, c, b=b)
    report = _report(f'cdh-orth.{weight_form}.m{m}n{n}', params, f'm={m}, n={n}, b={b}',
                     residual, consts.Tol_CDH_ORTH,
                     f'normalized integral {value:.17g}')
    if return_value:
        return report, value
    return report


# -------------------------------------------------------------------------------------------------
# completeness

def gaussian_bump(center, width):
    def g(y):
        return np.exp(-0.5 * ((np.asarray(y) - center) / width) ** 2)
    return g


def kernel_value(x, y, N, params):
    """K_N(x, y) = sum_{n < N} psi_n(x) psi_n(y), symmetric in x and y."""
    px = wavefunctions.psi_recurrence(np.asarray(x, dtype=float), N - 1, params)
    py = wavefunctions.psi_recurrence(np.asarray(y, dtype=float), N - 1, params)
    return np.sum(px * py, axis=0)


def completeness_errors(x, params, testfn_width, levels=None, center=None, spec=None):
    """|int K_N(x, y) g(y) dy - g(x)| for each N in levels.

    The overlaps <psi_n, g> come from one quadrature over the full line.
    """
    if levels is None:
        levels = consts.COMPLETENESS_LEVELS
    if center is None:
        center = x
    if spec is None:
        spec = QuadratureSpec()
    top = max(levels) - 1
    g = gaussian_bump(center, testfn_width)

    def f(y):
        return wavefunctions.psi_recurrence(y, top, params) * g(y)

    overlaps = integrate_real_line(f, spec, parity=consts.Parity_NONE,
                                   d=_envelope_degree(top, params))
    at_x = wavefunctions.psi_recurrence(float(x), top, params)
    target = float(g(x))
    return [abs(float(np.dot(at_x[:N], overlaps[:N])) - target) for N in levels]


def delta_completeness(x, params, testfn_width, levels=None, center=None, spec=None,
                       return_errors=False):
    """Smooth surrogate of sum_n psi_n(x) psi_n(x') = delta(x - x').

    The report checks the final error; monotonicity of the sequence is checked
    by `completeness_monotonicity`.
    """
    if levels is None:
        levels = consts.COMPLETENESS_LEVELS
    errors = completeness_errors(x, params, testfn_width, levels, center, spec)
    report = _report('kernel.completeness', params,
                     f'x={x}, width={testfn_width}, N in {list(levels)}',
                     errors[-1], consts.Tol_COMPLETENESS,
                     'errors ' + ', '.join(f'{e:.3e}' for e in errors))
    if return_errors:
        return report, errors
    return report


def completeness_monotonicity(errors, params, slack=1.1, floor=1e-10):
    return _report('kernel.completeness.monotone', params, f'{len(errors)} levels',
                   worst_ratio(errors, floor), slack,
                   'errors ' + ', '.join(f'{e:.3e}' for e in errors))


# -------------------------------------------------------------------------------------------------
# limits

def c_half_error(params, nmax=10, x=None):
    """sup_x, n <= nmax |psi_n^{(a,1/2)}(x) - phi_n^{(a)}(x)|."""
    if params.c != 0.5:
        raise ValueError(f'The c = 1/2 reduction needs c = 0.5, got c={params.c}.')
    if x is None:
        x = np.arange(-80, 81) / 10.
    return max(max_abs(wavefunctions.phi_mp_fn(n, x, params.a), wavefunctions.psi_closed(n, x, params))
               for n in range(nmax + 1))


def c_infinity_errors(a, n, ladder=None, xi=None):
    """sup over xi of |c^{1/4} psi_n(sqrt(c) xi) - Psi_n(xi)| along the c ladder."""
    if ladder is None:
        ladder = consts.C_LADDER
    if xi is None:
        xi = np.linspace(consts.PARABOSON_CUSP_RADIUS, 4., 376)
    target = wavefunctions.psi_paraboson(n, xi, a)
    return [max_abs(target, wavefunctions.scaled_psi(n, xi, repalgebra.ModelParams(a, c))) for c in ladder]


def limit_suite(kind, params_grid, report_sink=None, nmax=None):
    """Reduction checks at c = 1/2 and paraboson limit checks for c -> infinity.

    Parameters
    ----------
    kind : 'c_half' or 'c_infinity'.
    params_grid : iterable of ModelParams. For c_infinity only a is used.
    report_sink : list, optional, receives the reports as well.
    nmax : int, highest level, default 10 for c_half and 6 for c_infinity.

    Returns
    -------
    list of VerificationReport.
    """
    reports = []
    if kind == consts.Limit_C_HALF:
        nmax = 10 if nmax is None else nmax
        for params in params_grid:
            reports.append(_report('limits.c_half', params, f'n <= {nmax}, x in [-8, 8]',
                                   c_half_error(params, nmax), consts.Tol_C_HALF))
    elif kind == consts.Limit_C_INFINITY:
        nmax = 6 if nmax is None else nmax
        for params in params_grid:
            for n in range(nmax + 1):
                errors = c_infinity_errors(params.a, n)
                notes = 'ladder ' + ', '.join(f'c={c:g}: {e:.3e}' for c, e in zip(consts.C_LADDER, errors))
                scale = f'n={n}, xi in [{consts.PARABOSON_CUSP_RADIUS}, 4]'
                # strictly decreasing means every ratio below one
                reports.append(_report(f'limits.c_infinity.monotone.n{n}', params, scale,
                                       worst_ratio(errors), 1. - 1e-12, notes))
                reports.append(_report(f'limits.c_infinity.n{n}', params, scale,
                                       errors[-1], consts.Tol_C_INFINITY, notes))
            if params.a == 0.5:
                xi = np.linspace(consts.PARABOSON_CUSP_RADIUS, 4., 376)
                ground = max_abs(wavefunctions.canonical_oscillator(0, xi),
                                 wavefunctions.scaled_psi(0, xi, repalgebra.ModelParams(0.5, consts.C_LADDER[-1])))
                reports.append(_report('limits.c_infinity.canonical_ground', params,
                                       f'c={consts.C_LADDER[-1]:g}', ground, consts.Tol_C_INFINITY))
    else:
        raise ValueError(f'Unknown limit kind {kind}.')

    if report_sink is not None:
        report_sink.extend(reports)
    return reports


# -------------------------------------------------------------------------------------------------
# three parameter algebra

def formal_coeff(k, x, params):
    """Closed form of A_k(x) for the three parameter algebra, with x^2 - b^2 as argument.

    A_{2n}   = (-1)^n S_n(x^2 - b^2; a, b, c) / sqrt(G(n+a+b) G(n+b+c) G(n+a+c) n!)
    A_{2n+1} = (-1)^n x S_n(x^2 - b^2; a, b+1, c) / sqrt(G(n+a+b+1) G(n+b+c+1) G(n+a+c) n!)

    Returns
    -------
    (value, scale)
    """
    a, b, c = params.a, params.b, params.c
    n, odd = divmod(int(k), 2)
    x = float(x)
    bb = b + 1. if odd else b
    F, scale = orthopoly.cdh_normalized(n, x * x - b * b, a, bb, c, return_scale=True)
    ln_factor = (gammaln(n + a + bb) - gammaln(a + bb) + gammaln(n + a + c) - gammaln(a + c)
                 - 0.5 * (gammaln(n + a + bb) + gammaln(n + bb + c) + gammaln(n + a + c) + gammaln(n + 1.)))
    factor = (-1.) ** n * np.exp(ln_factor)
    if odd:
        factor = factor * x
    return factor * F, abs(factor) * scale


def b_deformed_residual(n, x, params):
    """Residuals of the two recurrences of the three parameter algebra at level n.

    r1 = x A_{2n}   - sqrt(n (n+a+c-1)) A_{2n-1}      - sqrt((n+a+b)(n+b+c)) A_{2n+1}
    r2 = x A_{2n+1} - sqrt((n+a+b)(n+b+c)) A_{2n}     - sqrt((n+1)(n+a+c)) A_{2n+2}

    Each residual is scaled by the largest term or summed series term involved.
    """
    a, b, c = params.a, params.b, params.c
    x = float(x)
    beta_even = np.sqrt((n + a + b) * (n + b + c))
    beta_odd_prev = np.sqrt(n * (n + a + c - 1.))
    beta_odd = np.sqrt((n + 1.) * (n + a + c))

    A_even, s_even = formal_coeff(2 * n, x, params)
    A_odd, s_odd = formal_coeff(2 * n + 1, x, params)
    A_next, s_next = formal_coeff(2 * n + 2, x, params)
    if n > 0:
        A_prev, s_prev = formal_coeff(2 * n - 1, x, params)
    else:
        A_prev, s_prev = 0., 0.

    t1 = [x * A_even, beta_odd_prev * A_prev, beta_even * A_odd]
    r1 = t1[0] - t1[1] - t1[2]
    k1 = max([abs(t) for t in t1] + [abs(x) * s_even, beta_odd_prev * s_prev, beta_even * s_odd])

    t2 = [x * A_odd, beta_even * A_even, beta_odd * A_next]
    r2 = t2[0] - t2[1] - t2[2]
    k2 = max([abs(t) for t in t2] + [abs(x) * s_odd, beta_even * s_even, beta_odd * s_next])

    return float(scaled_residual(r1, k1)), float(scaled_residual(r2, k2))


# -------------------------------------------------------------------------------------------------
# hypergeometric reductions behind the c = 1/2 case

def reduction_identities(a, x, nmax=10):
    """Scaled residuals of the 3F2 -> 2F1 reductions and of the duplication formula.

    Returns
    -------
    dict, identity name -> max scaled residual over n <= nmax.
    """
    ix = 1j * float(x)
    out = {'even_reduction': 0., 'odd_reduction': 0., 'even_transformation': 0.,
           'odd_transformation': 0., 'duplication': 0.}

    def F(n, num, den, z=1.):
        return hyp_terminating(TermSeriesSpec(n, [-n] + num, den, z), return_scale=True)

    for n in range(nmax + 1):
        lhs, k1 = F(n, [a + ix, a - ix], [a, a + 0.5])
        rhs, k2 = hyp_terminating(TermSeriesSpec(2 * n, [-2 * n, a + ix], [2. * a], 2.), return_scale=True)
        out['even_reduction'] = max(out['even_reduction'], float(scaled_residual(lhs - rhs, max(k1, k2))))

        ratio = pochhammer(0.5, n) / pochhammer(a + 0.5, n)
        other, k3 = F(n, [ix, -ix], [a, 0.5])
        out['even_transformation'] = max(out['even_transformation'],
                                         float(scaled_residual(lhs - ratio * other, max(k1, ratio * k3))))

        lhs, k1 = F(n, [a + ix, a - ix], [a + 1., a + 0.5])
        ratio = pochhammer(1.5, n) / pochhammer(a + 0.5, n)
        other, k3 = F(n, [1. + ix, 1. - ix], [a + 1., 1.5])
        out['odd_transformation'] = max(out['odd_transformation'],
                                        float(scaled_residual(lhs - ratio * other, max(k1, ratio * k3))))
        if x != 0:
            rhs, k2 = hyp_terminating(TermSeriesSpec(2 * n + 1, [-2 * n - 1, a + ix], [2. * a], 2.),
                                      return_scale=True)
            factor = 1j * a / float(x)
            out['odd_reduction'] = max(out['odd_reduction'],
                                       float(scaled_residual(lhs - factor * rhs, max(k1, abs(factor) * k2))))

    # G(z) G(z + 1/2) = 2^{1-2z} sqrt(pi) G(2z), real parts of the logarithms
    z = np.array([a + ix, 0.5 * a + ix, a + 0.25 + 0.5 * ix])
    lhs = np.real(ln_gamma_complex(z) + ln_gamma_complex(z + 0.5))
    rhs = np.real((1. - 2. * z) * np.log(2.) + 0.5 * np.log(np.pi) + ln_gamma_complex(2. * z))
    out['duplication'] = max_scaled(rhs, lhs, 1.)
    return out


# -------------------------------------------------------------------------------------------------
# suites

def _suite_gram(params, nmax, spec):
    base = _base(params)
    reports = []
    _, rec = gram_matrix(nmax, base, spec, route=consts.Route_RECURRENCE)
    _, closed = gram_matrix(nmax, base, spec, route=consts.Route_CLOSED)
    reports += [rec, closed]
    reports.append(_report('gram.route_invariance', base, f'm, n <= {nmax}',
                           abs(rec.residual - closed.residual), consts.Tol_GRAM))
    return reports


def _suite_commutators(params, nmax, spec):
    N = max(40, nmax + 2)
    reports = [_report(f'commutators.{name}', params, f'N={N}, interior={N - 2}', value, consts.Tol_COMMUTATOR)
               for name, value in repalgebra.commutator_suite(params, N).items()]

    adjoint = max_abs(repalgebra.build_operator(consts.Kind_JPLUS, params, N).entries.T,
                      repalgebra.build_operator(consts.Kind_JMINUS, params, N).entries)
    reports.append(_report('commutators.adjoint', params, f'N={N}', adjoint, 0.))

    lowering = max_scaled(repalgebra.lowering_args(params, N), repalgebra.offdiag_args(params, N), 1.)
    reports.append(_report('commutators.lowering_action', params, f'N={N}', lowering, consts.Tol_COMMUTATOR))

    if params.gamma == 0 and params.b == 0:
        label = params.a if params.c == 0.5 else params.c
        worst = max(max_abs(repalgebra.undeformed_operator(kind, label, N).entries,
                            repalgebra.build_operator(kind, params, N).entries)
                    for kind in (consts.Kind_J0, consts.Kind_JPLUS, consts.Kind_JMINUS, consts.Kind_R))
        reports.append(_report('commutators.undeformed', params, f'N={N}', worst, consts.Tol_COMMUTATOR))

    base = _base(params)
    _, pb = repalgebra.paraboson_residuals(repalgebra.ModelParams(params.a, consts.C_LADDER[-1]), N)
    reports.append(_report('commutators.paraboson', base, f'N={N}, interior={N - 2}', pb, consts.Tol_COMMUTATOR))
    distances = [repalgebra.paraboson_residuals(repalgebra.ModelParams(params.a, c), N)[0]
                 for c in consts.C_LADDER]
    reports.append(_report('commutators.paraboson_ladder', base, f'N={N}, c in {consts.C_LADDER}',
                           worst_ratio(distances), 1. - 1e-12,
                           'distances ' + ', '.join(f'{d:.3e}' for d in distances)))
    return reports


def _suite_diff_relations(params, nmax, spec):
    reports = []
    x = np.linspace(-3., 3., 13)
    for b in sorted({0., params.b, 0.5}):
        worst = 0.
        for n in range(min(nmax, 20) + 1):
            (r1, r2), (k1, k2) = orthopoly.cdh_diff_residuals(n, x, params.a, b, params.c, return_scale=True)
            worst = max(worst, float(np.max(scaled_residual(r1, k1))), float(np.max(scaled_residual(r2, k2))))
        reports.append(_report(f'diff-relations.b{b:g}', repalgebra.ModelParams(params.a, params.c, b=b),
                               f'n <= {min(nmax, 20)}, x in [-3, 3]', worst, consts.Tol_DIFF_RELATION))

    worst = 0.
    for n in range(min(nmax, 20) + 1):
        for xv in (0.3, 1.7):
            ix = 1j * xv
            (e1, e2), (k1, k2) = orthopoly.hyp_contiguous_residuals(
                n, params.a + ix, params.a - ix, params.a + params.b, params.a + params.c)
            worst = max(worst, float(scaled_residual(e1, k1)), float(scaled_residual(e2, k2)))
    reports.append(_report('diff-relations.contiguous', params, f'n <= {min(nmax, 20)}',
                           worst, consts.Tol_DIFF_RELATION))

    worst = max(max(reduction_identities(params.a, xv).values()) for xv in (0.4, 1.3, 2.6))
    reports.append(_report('diff-relations.reductions', params, 'n <= 10, x in {0.4, 1.3, 2.6}',
                           worst, consts.Tol_DIFF_RELATION))
    return reports


def _suite_realization(params, nmax, spec):
    base = _base(params)
    residual, detail = realization.realization_consistency(15, base, return_detail=True)
    reports = [_report('realization.consistency', base, 'k <= 15', residual, consts.Tol_REALIZATION,
                       ', '.join(f'{k}: {v:.3e}' for k, v in detail.items()))]
    for z, nterms in ((0.5, 40), (0.9, 400)):
        for parity in (consts.Parity_EVEN, consts.Parity_ODD):
            worst = 0.
            for x in (0., 0.7, 1.9):
                closed = realization.generating_closed(x, z, base, parity)
                partial = realization.generating_sum(x, z, base, parity, nterms)
                worst = max(worst, abs(closed - partial) / max(1., abs(closed)))
            reports.append(_report(f'realization.generating.{parity}.z{z:g}', base,
                                   f'nterms={nterms}, x in {{0, 0.7, 1.9}}', worst, consts.Tol_GENERATING))
    return reports


def _suite_limits(params, nmax, spec):
    base = _base(params)
    if base.c == 0.5:
        return limit_suite(consts.Limit_C_HALF, [base])
    return limit_suite(consts.Limit_C_INFINITY, [base])


def _suite_cdh_orth(params, nmax, spec):
    reports = []
    a, c = params.a, params.c
    for b in (0., 1.):
        for m in range(4):
            for n in range(m, 4):
                direct, v1 = cdh_orthogonality(m, n, a, b, c, spec, consts.WeightForm_DIRECT, return_value=True)
                rewritten, v2 = cdh_orthogonality(m, n, a, b, c, spec, consts.WeightForm_REWRITTEN,
                                                  return_value=True)
                reports += [direct, rewritten]
                reports.append(_report(f'cdh-orth.weight_forms.b{b:g}.m{m}n{n}', direct.params,
                                       f'm={m}, n={n}', abs(v1 - v2) / max(1., abs(v1)), consts.Tol_WEIGHT_FORMS))
    return reports


def _suite_b_deform(params, nmax, spec):
    reports = []
    values = [params.b] if params.b > 0 else [0.25, 0.5, 1.]
    xs = (0.3, 1.1, 2.5)
    for b in values:
        p = repalgebra.ModelParams(params.a, params.c, b=b)
        worst = max(max(b_deformed_residual(n, x, p)) for n in range(min(nmax, 15) + 1) for x in xs)
        reports.append(_report(f'b-deform.recurrence.b{b:g}', p, f'n <= {min(nmax, 15)}, x in {xs}',
                               worst, consts.Tol_B_DEFORM, consts.H_SHIFT_CONVENTION))
        closed = np.array([formal_coeff(k, 1.1, p) for k in range(12)])
        forward = wavefunctions.coeff_recurrence(1.1, 11, p).coeffs
        reports.append(_report(f'b-deform.routes.b{b:g}', p, 'k <= 11, x=1.1',
                               max_scaled(closed[:, 0], forward, closed[:, 1]), consts.Tol_B_DEFORM))
        spectrum = np.diag(repalgebra.build_operator(consts.Kind_H, p, 8).entries) - np.arange(8)
        reports.append(_report(f'b-deform.spectrum.b{b:g}', p, 'n < 8', max_abs(p.a, spectrum),
                               consts.Tol_COMMUTATOR, consts.H_SHIFT_CONVENTION))
    return reports


def _suite_kernel(params, nmax, spec):
    base = _base(params)
    reports = []
    origin = float(wavefunctions.psi_closed(0, 0., base)) ** 2
    acceptable, bound = wavefunctions.beta_bound_flag(base)
    scan = wavefunctions.peak_scan(base)
    reports.append(_report('kernel.origin', base, 'psi_0(0)^2 vs B(a, c)/pi',
                           abs(origin - bound) / bound, consts.Tol_BETA_ORIGIN,
                           f'B(a,c)/pi={bound:.6g}, acceptable={acceptable}, '
                           f'peak at n={scan["n"]}, x={scan["x"]:.4g}, at_origin={scan["at_origin"]}'))

    worst = 0.
    for x in (-2.3, 0.0, 0.9, 4.1):
        closed = np.array([wavefunctions.psi_closed(k, x, base, return_scale=True) for k in range(31)])
        forward = wavefunctions.psi_recurrence(x, 30, base)
        worst = max(worst, max_scaled(closed[:, 0], forward, closed[:, 1]))
    reports.append(_report('kernel.route_agreement', base, 'k <= 30', worst, consts.Tol_ROUTE))

    eig = max(wavefunctions.eigen_residual(x, 20, base) for x in (0.5, 1.3, 3.))
    reports.append(_report('kernel.q_eigenvector', base, 'n <= 19', eig, consts.Tol_EIGEN))
    mom = wavefunctions.momentum_residual(1.3, 20, base)
    reports.append(_report('kernel.p_eigenvector', base, 'n <= 19, p=1.3', mom, consts.Tol_EIGEN))

    completeness, errors = delta_completeness(0.5, base, consts.COMPLETENESS_WIDTH, spec=spec,
                                              return_errors=True)
    reports += [completeness, completeness_monotonicity(errors, base)]
    return reports


_SUITES = collections.OrderedDict([
    (consts.Suite_GRAM, _suite_gram),
    (consts.Suite_COMMUTATORS, _suite_commutators),
    (consts.Suite_DIFF_RELATIONS, _suite_diff_relations),
    (consts.Suite_REALIZATION, _suite_realization),
    (consts.Suite_LIMITS, _suite_limits),
    (consts.Suite_CDH_ORTH, _suite_cdh_orth),
    (consts.Suite_B_DEFORM, _suite_b_deform),
    (consts.Suite_KERNEL, _suite_kernel),
])


def _run_one(name, params, nmax, spec):
    logger.info(f'suite {name} started')
    reports = _SUITES[name](params, nmax, spec)
    logger.info(f'suite {name} finished, {sum(r.passed for r in reports)}/{len(reports)} passed')
    return reports


def run_suites(params, nmax=None, suites=None, n_jobs=None, spec=None):
    """Run verification suites, concurrently when n_jobs > 1.

    Returns
    -------
    OrderedDict, suite name -> list of VerificationReport, in the order requested.
    """
    if nmax is None:
        nmax = cfg.nmax
    if n_jobs is None:
        n_jobs = cfg.n_jobs
    if suites is None:
        suites = consts.SUITE_LIST
    unknown = [s for s in suites if s not in _SUITES]
    if unknown:
        raise ValueError(f'Unknown suites {unknown}, expected a subset of {consts.SUITE_LIST}.')

    fn = joblib.delayed(_run_one)
    paral = joblib.Parallel(n_jobs=n_jobs)
    res = paral(fn(name, params, nmax, spec) for name in suites)
    return collections.OrderedDict(zip(suites, res))


def all_passed(reports_by_suite):
    return all(r.passed for reports in reports_by_suite.values() for r in reports)


def failed_checks(reports_by_suite):
    return [r.check_id for reports in reports_by_suite.values() for r in reports if not r.passed]


def make_json_safe(obj):
    if isinstance(obj, VerificationReport):
        return make_json_safe(obj.to_dict())
    if isinstance(obj, dict):
        return {str(k): make_json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [make_json_safe(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        v = float(obj)
        return v if np.isfinite(v) else str(v)
    if isinstance(obj, (np.integer, np.bool_)):
        return obj.item()
    return obj


def write_reports(reports_by_suite, path):
    """Write one JSON document per suite, merged under the suite names."""
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    payload = make_json_safe(reports_by_suite)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        json.dump(payload, f, indent=2)
        f.write('\n')
    return path
