import json

import numpy as np
import pytest

from deformosc.utils import consts
from deformosc.framework.quadrature import QuadratureSpec
from deformosc.framework.repalgebra import make_params, ModelParams
from deformosc.framework.wavefunctions import ln_sqrt_weight, psi_closed
from deformosc.framework.verification import VerificationReport, gram_matrix, cdh_orthogonality, \
    kernel_value, delta_completeness, completeness_monotonicity, worst_ratio, c_half_error, \
    c_infinity_errors, limit_suite, formal_coeff, b_deformed_residual, reduction_identities, run_suites, \
    all_passed, failed_checks, make_json_safe, write_reports
from deformosc.tests import skip_if_single_cpu

REPORT_FIELDS = {'check_id', 'params', 'scale', 'residual', 'tolerance', 'passed', 'notes'}


class Test_Verification():

    def test_report(self):
        params = make_params(1., 1.)
        assert VerificationReport('x', params, 'n <= 3', 1e-9, 1e-8).passed
        assert not VerificationReport('x', params, 'n <= 3', 1e-7, 1e-8).passed
        assert VerificationReport('x', params, '', 0., 0.).passed
        d = VerificationReport('x', params, 'n <= 3', 1e-9, 1e-8, 'ok').to_dict()
        assert set(d) == REPORT_FIELDS
        assert d['params'] == {'a': 1., 'c': 1., 'gamma': 1., 'b': 0.}

    def test_gram_ground(self):
        G, report = gram_matrix(0, make_params(1., 1.))
        assert G.shape == (1, 1)
        assert abs(G[0, 0] - 1.) < 1e-10
        assert report.passed and report.check_id == 'gram.recurrence'

    def test_gram(self):
        params = make_params(1., 2.)
        G, report, error = gram_matrix(8, params, return_error=True)
        assert report.passed
        assert np.max(np.abs(G - np.eye(9))) <= consts.Tol_GRAM
        for m in range(9):
            for n in range(9):
                if (m + n) % 2 == 1:
                    assert G[m, n] == 0. and error[m, n] == 0.
        G_closed, report_closed = gram_matrix(8, params, route=consts.Route_CLOSED)
        assert report_closed.passed
        assert np.allclose(G, G_closed, atol=1e-9)

    def test_gram_orthonormal_to_level_16(self):
        for a, c in ((0.6, 0.6), (1., 2.), (2., 0.5), (0.5, 0.5)):
            G, report = gram_matrix(16, make_params(a, c))
            assert G.shape == (17, 17)
            assert report.passed
            assert np.max(np.abs(G - np.eye(17))) <= consts.Tol_GRAM

    def test_gram_quadrature_self_consistent(self):
        # tightening rel_tol moves the entries by less than the error estimate
        params = make_params(1., 2.)
        spec = QuadratureSpec(rel_tol=1e-12)
        G, _, error = gram_matrix(8, params, spec, return_error=True)
        G_tight, _ = gram_matrix(8, params, QuadratureSpec(rel_tol=5e-13))
        assert np.all(np.abs(G - G_tight) <= error + spec.abs_tol)

    def test_gram_errors(self):
        with pytest.raises(ValueError):
            gram_matrix(2, make_params(1., 1., b=0.5))
        with pytest.raises(ValueError):
            gram_matrix(2, make_params(1., 1.), route='other')

    def test_cdh_orthogonality(self):
        report, value = cdh_orthogonality(0, 0, 1., 0., 1., return_value=True)
        assert report.passed and abs(value - 1.) <= 1e-8
        assert cdh_orthogonality(0, 1, 1., 0., 1.).passed
        for m, n in ((0, 0), (1, 2), (2, 2)):
            direct, v1 = cdh_orthogonality(m, n, 0.7, 1., 1.3, return_value=True)
            rewritten, v2 = cdh_orthogonality(m, n, 0.7, 1., 1.3, weight_form=consts.WeightForm_REWRITTEN,
                                              return_value=True)
            assert direct.passed and rewritten.passed
            assert abs(v1 - v2) <= consts.Tol_WEIGHT_FORMS * max(1., abs(v1))
        with pytest.raises(ValueError):
            cdh_orthogonality(0, 0, 1., 0.5, 1., weight_form=consts.WeightForm_REWRITTEN)
        with pytest.raises(ValueError):
            cdh_orthogonality(0, 0, -1., 0., 1.)

    def test_kernel_symmetric(self):
        params = make_params(0.8, 1.3)
        assert kernel_value(0.3, -1.2, 12, params) == kernel_value(-1.2, 0.3, 12, params)

    def test_completeness(self):
        params = make_params(1., 1.)
        report, errors = delta_completeness(0.5, params, consts.COMPLETENESS_WIDTH, return_errors=True)
        assert len(errors) == len(consts.COMPLETENESS_LEVELS)
        assert report.passed and errors[-1] <= consts.Tol_COMPLETENESS
        assert completeness_monotonicity(errors, params).passed
        # strictly decreasing over N = 8 ... 64
        assert errors[0] > errors[1] > errors[2] > errors[3]
        assert errors[3] < 1e-2

    def test_worst_ratio(self):
        assert worst_ratio([1., 0.5, 0.25]) == 0.5
        assert worst_ratio([1., 2.]) == 2.
        assert worst_ratio([1e-3, 1e-12, 2e-12], floor=1e-10) == 0.
        assert worst_ratio([]) == 0.
        assert not completeness_monotonicity([1., 1.2], make_params(1., 1.)).passed

    def test_c_half(self):
        for a in (0.7, 1., 2.):
            assert c_half_error(make_params(a, 0.5)) <= consts.Tol_C_HALF
        with pytest.raises(ValueError):
            c_half_error(make_params(1., 1.))
        reports = limit_suite(consts.Limit_C_HALF, [make_params(1., 0.5)])
        assert [r.check_id for r in reports] == ['limits.c_half']
        assert reports[0].passed

    def test_c_infinity(self):
        errors = c_infinity_errors(0.5, 0)
        assert errors[0] > errors[1] > errors[2]
        assert errors[-1] <= consts.Tol_C_INFINITY

        sink = []
        reports = limit_suite(consts.Limit_C_INFINITY, [ModelParams(0.5, 1.)], report_sink=sink, nmax=1)
        assert sink == reports
        ids = [r.check_id for r in reports]
        assert 'limits.c_infinity.canonical_ground' in ids
        assert 'limits.c_infinity.monotone.n1' in ids
        assert all(r.passed for r in reports)

    def test_c_infinity_ladder(self):
        errors = c_infinity_errors(2., 3)
        assert errors[0] > errors[1] > errors[2]

    def test_limit_kind(self):
        with pytest.raises(ValueError):
            limit_suite('c_zero', [make_params(1., 1.)])

    def test_b_deformed(self):
        params = make_params(1., 1.5, b=0.5)
        r1, r2 = b_deformed_residual(3, 2.5, params)
        assert r1 <= consts.Tol_B_DEFORM and r2 <= consts.Tol_B_DEFORM
        r1, _ = b_deformed_residual(0, 0.9, params)
        assert r1 <= 1e-14
        for b in (0.25, 1.):
            p = make_params(0.7, 1.2, b=b)
            worst = max(max(b_deformed_residual(n, x, p)) for n in range(16) for x in (0.3, 1.1, 2.5))
            assert worst <= consts.Tol_B_DEFORM

    def test_b_continuity(self):
        params = ModelParams(0.9, 1.4)
        x = 1.7
        for k in range(8):
            value, _ = formal_coeff(k, x, params)
            assert abs(value * np.exp(ln_sqrt_weight(x, params)) - psi_closed(k, x, params)) < 1e-12
        small = ModelParams(0.9, 1.4, b=1e-9)
        assert max(b_deformed_residual(4, x, small)) <= consts.Tol_B_DEFORM

    def test_reductions(self):
        for a in (0.6, 1., 2.3):
            for x in (0., 0.4, 2.6):
                out = reduction_identities(a, x)
                assert set(out) == {'even_reduction', 'odd_reduction', 'even_transformation',
                                    'odd_transformation', 'duplication'}
                assert max(out.values()) <= consts.Tol_DIFF_RELATION

    def test_run_suites(self, tmp_path):
        params = make_params(1., 1.)
        reports = run_suites(params, nmax=6, suites=[consts.Suite_REALIZATION, consts.Suite_COMMUTATORS])
        assert list(reports) == [consts.Suite_REALIZATION, consts.Suite_COMMUTATORS]
        assert all_passed(reports)
        assert failed_checks(reports) == []
        ids = [r.check_id for r in reports[consts.Suite_COMMUTATORS]]
        assert 'commutators.adjoint' in ids and 'commutators.[H,q]=-ip' in ids

        path = write_reports(reports, tmp_path / 'sub' / 'report.json')
        text = path.read_text(encoding='utf-8')
        assert text.endswith('}\n')
        payload = json.loads(text)
        assert list(payload) == [consts.Suite_REALIZATION, consts.Suite_COMMUTATORS]
        for item in payload[consts.Suite_COMMUTATORS]:
            assert set(item) == REPORT_FIELDS
            assert item['params'] == {'a': 1., 'c': 1., 'gamma': 1., 'b': 0.}

    def test_failed_checks(self):
        params = make_params(1., 1.)
        bad = VerificationReport('commutators.adjoint', params, '', 1., 0.)
        good = VerificationReport('gram.recurrence', params, '', 0., 1e-8)
        reports = {'commutators': [bad], 'gram': [good]}
        assert not all_passed(reports)
        assert failed_checks(reports) == ['commutators.adjoint']

    def test_run_suites_unknown(self):
        with pytest.raises(ValueError):
            run_suites(make_params(1., 1.), suites=['nope'])

    def test_b_deform_suite(self):
        reports = run_suites(make_params(1., 1.), nmax=8, suites=[consts.Suite_B_DEFORM])
        reports = reports[consts.Suite_B_DEFORM]
        assert len(reports) == 9
        assert all(r.passed for r in reports)
        assert all(consts.H_SHIFT_CONVENTION in r.notes for r in reports if '.routes.' not in r.check_id)

    @skip_if_single_cpu
    def test_run_suites_parallel(self):
        params = make_params(0.75, 1.5)
        suites = [consts.Suite_COMMUTATORS, consts.Suite_DIFF_RELATIONS]
        serial = run_suites(params, nmax=6, suites=suites, n_jobs=1)
        parallel = run_suites(params, nmax=6, suites=suites, n_jobs=2)
        for name in suites:
            assert [r.residual for r in serial[name]] == [r.residual for r in parallel[name]]

    def test_make_json_safe(self):
        out = make_json_safe({'a': np.float64(np.inf), 'b': [np.int64(3), np.bool_(True)], 1: (0.5,)})
        assert out == {'a': 'inf', 'b': [3, True], '1': [0.5]}
