import numpy as np
import pytest
from scipy import integrate
from scipy.special import beta as beta_fn

from deformosc.utils import consts, get_random_state
from deformosc.utils.metrics import max_scaled
from deformosc.framework.repalgebra import make_params, ModelParams
from deformosc.framework.wavefunctions import CoeffVector, WaveSample, weight_w, psi_closed, coeff_recurrence, \
    psi_recurrence, psi_grid, phi_mp_fn, psi_paraboson, canonical_oscillator, scaled_psi, momentum_coeff, \
    eigen_residual, momentum_residual, beta_bound_flag, peak_scan, sample
from deformosc.tests import skip_if_single_cpu


class Test_Wavefunctions():

    def test_weight(self):
        assert abs(weight_w(0., make_params(1., 1.)) - 1. / np.pi) < 1e-14
        assert abs(weight_w(0., make_params(0.5, 0.5)) - np.pi) < 1e-13
        params = make_params(0.7, 1.9)
        x = np.linspace(0.1, 6., 12)
        assert np.allclose(weight_w(x, params), weight_w(-x, params), rtol=1e-14, atol=0.)
        assert np.all(weight_w(x, params) > 0)
        with pytest.raises(ValueError):
            weight_w(0., make_params(1., 1., b=0.5))

    def test_ground_state_at_origin(self):
        assert abs(psi_closed(0, 0., make_params(0.5, 0.5)) - 1.) < 1e-13
        rng = get_random_state(9527)
        for a, c in rng.uniform(0.3, 4., (20, 2)):
            params = ModelParams(a, c)
            expected = beta_fn(a, c) / np.pi
            assert abs(psi_closed(0, 0., params) ** 2 - expected) <= 1e-12 * expected
            assert abs(psi_recurrence(0., 0, params)[0] ** 2 - expected) <= 1e-12 * expected

    def test_odd_levels_vanish_at_origin(self):
        params = make_params(1., 2.)
        values = psi_recurrence(0., 9, params)
        for n in range(1, 10, 2):
            assert values[n] == 0.
            assert psi_closed(n, 0., params) == 0.

    def test_coeff_recurrence(self):
        params = make_params(1., 1.)
        cv = coeff_recurrence(0.8, 3, params)
        assert isinstance(cv, CoeffVector)
        assert cv.coeffs.shape == (4,)
        # A_0 = 1 / sqrt(G(1)^3), A_1 = x A_0 / sqrt(a c)
        assert abs(cv.coeffs[0] - 1.) < 1e-15
        assert abs(cv.coeffs[1] - 0.8) < 1e-15
        x = np.linspace(-1., 1., 5)
        assert coeff_recurrence(x, 4, params).coeffs.shape == (5, 5)
        with pytest.raises(ValueError):
            coeff_recurrence(0.8, 0, params)
        with pytest.raises(ValueError):
            CoeffVector(0.8, 3, np.zeros(3))

    def test_routes_agree(self):
        rng = get_random_state(2022)
        worst = 0.
        for _ in range(50):
            a, c = rng.uniform(0.3, 3., 2)
            x = rng.uniform(-4., 4.)
            params = ModelParams(a, c)
            closed = np.array([psi_closed(k, x, params, return_scale=True) for k in range(31)])
            forward = psi_recurrence(x, 30, params)
            worst = max(worst, max_scaled(closed[:, 0], forward, closed[:, 1]))
        assert worst <= consts.Tol_ROUTE

    def test_parity(self):
        params = make_params(0.8, 1.6)
        x = np.linspace(0.2, 5., 9)
        plus = psi_recurrence(x, 8, params)
        minus = psi_recurrence(-x, 8, params)
        for n in range(9):
            assert np.allclose(minus[n], (-1) ** n * plus[n], rtol=1e-13, atol=1e-15)

    def test_eigenvectors(self):
        for a, c in ((1., 1.), (0.6, 2.4), (2., 0.25)):
            params = make_params(a, c)
            for x in (0.5, 1.3, 3.):
                assert eigen_residual(x, 20, params) <= consts.Tol_EIGEN
                assert eigen_residual(x, 20, params, route=consts.Route_RECURRENCE) <= consts.Tol_EIGEN
            assert momentum_residual(1.3, 20, params) <= consts.Tol_EIGEN

    def test_momentum_coeff(self):
        params = make_params(1., 1.)
        p = 0.9
        assert momentum_coeff(0, p, params) == psi_closed(0, p, params)
        assert abs(momentum_coeff(2, p, params) + psi_closed(2, p, params)) < 1e-15
        assert abs(momentum_coeff(1, p, params) - 1j * psi_closed(1, p, params)) < 1e-15

    def test_mp_functions(self):
        x = np.linspace(-3., 3., 13)
        assert np.allclose(phi_mp_fn(0, x, 0.5), 1. / np.sqrt(np.cosh(np.pi * x)), rtol=1e-12, atol=1e-15)
        assert abs(phi_mp_fn(1, 0., 1.3)) < 1e-15

    def test_c_half_reduction(self):
        x = np.linspace(-6., 6., 49)
        for a in (0.5, 1., 1.7):
            params = make_params(a, 0.5)
            for n in range(11):
                assert np.max(np.abs(psi_closed(n, x, params) - phi_mp_fn(n, x, a))) <= consts.Tol_C_HALF

    def test_paraboson(self):
        xi = np.linspace(-3., 3., 25)
        expected = np.pi ** -0.25 * np.exp(-0.5 * xi ** 2)
        assert np.allclose(psi_paraboson(0, xi, 0.5), expected, rtol=1e-13, atol=1e-16)
        assert psi_paraboson(0, 0., 2.) == 0.
        for n in range(7):
            assert np.allclose(psi_paraboson(n, xi, 0.5), canonical_oscillator(n, xi), rtol=1e-11, atol=1e-13)
        with pytest.raises(ValueError):
            psi_paraboson(0, xi, 0.)

    def test_paraboson_odd_at_origin(self):
        for a in (0.25, 0.5, 1.5):
            for n in (1, 3, 5):
                assert psi_paraboson(n, 0., a) == 0.
        xi = np.array([-1e-8, 0., 1e-8])
        values = psi_paraboson(1, xi, 0.25)
        assert np.all(np.isfinite(values))
        assert values[0] == -values[2] and values[1] == 0.
        # Psi_1^{(1)} = |xi|^{1/2} xi e^{-xi^2/2}
        xi = np.linspace(-3., 3., 13)
        expected = np.sqrt(np.abs(xi)) * xi * np.exp(-0.5 * xi ** 2)
        assert np.allclose(psi_paraboson(1, xi, 1.), expected, rtol=1e-13, atol=1e-16)

    def test_scalar_inputs_give_scalars(self):
        params = make_params(1., 2.)
        assert np.ndim(weight_w(0.3, params)) == 0
        assert np.ndim(psi_closed(3, 0.7, params)) == 0
        assert np.ndim(momentum_coeff(2, 0.7, params)) == 0
        assert np.ndim(phi_mp_fn(2, 0.3, 1.)) == 0
        assert np.ndim(psi_paraboson(1, 0.5, 1.)) == 0
        closed = np.array([psi_closed(k, 0.9, params, return_scale=True) for k in range(6)])
        assert closed.shape == (6, 2)
        assert max_scaled(closed[:, 0], psi_recurrence(0.9, 5, params), closed[:, 1]) <= consts.Tol_ROUTE

    def test_paraboson_normalized(self):
        for a in (0.75, 1.5):
            for n in range(4):
                value, _ = integrate.quad(lambda t: psi_paraboson(n, t, a) ** 2, 0., np.inf, limit=200)
                assert abs(2. * value - 1.) < 1e-6

    def test_normalization(self):
        params = make_params(1., 1.)
        for n in range(4):
            value, _ = integrate.quad(lambda t: psi_closed(n, t, params) ** 2, -np.inf, np.inf, limit=200)
            assert abs(value - 1.) < 1e-7
        value, _ = integrate.quad(lambda t: psi_closed(0, t, params) * psi_closed(2, t, params),
                                  -np.inf, np.inf, limit=200)
        assert abs(value) < 1e-7

    def test_paraboson_limit(self):
        xi = np.linspace(0.25, 4., 76)
        for n in (0, 1, 2):
            errors = [np.max(np.abs(scaled_psi(n, xi, ModelParams(1., c)) - psi_paraboson(n, xi, 1.)))
                      for c in (1e2, 1e3, 1e4)]
            assert errors[0] > errors[1] > errors[2]

    @skip_if_single_cpu
    def test_psi_grid_parallel(self):
        params = make_params(0.9, 1.4)
        x = np.linspace(-5., 5., 1201)
        serial = psi_grid(x, 6, params, n_jobs=1, chunk_size=100)
        parallel = psi_grid(x, 6, params, n_jobs=2, chunk_size=100)
        assert serial.shape == (7, 1201)
        assert np.array_equal(serial, parallel)
        assert np.allclose(serial, psi_recurrence(x, 6, params), rtol=1e-14, atol=0.)

    def test_beta_bound(self):
        ok, value = beta_bound_flag(make_params(1., 1.))
        assert ok and abs(value - 1. / np.pi) < 1e-14
        ok, value = beta_bound_flag(ModelParams(0.1, 0.2))
        assert not ok and value > 1.

    def test_peak_scan(self):
        result = peak_scan(make_params(1., 0.5))
        assert result['at_origin']
        assert result['n'] == 0 and result['x'] == 0.
        assert abs(result['peak'] - result['origin_value']) <= 1e-12 * result['origin_value']

    def test_sample(self):
        params = make_params(1., 0.5)
        s = sample(consts.Family_PSI, 2, 0.4, params)
        assert isinstance(s, WaveSample)
        assert abs(s.value - sample(consts.Family_PHI_MP, 2, 0.4, params).value) < 1e-10
        assert sample(consts.Family_PSI_PARABOSON, 1, 0.4, params).family == consts.Family_PSI_PARABOSON
        with pytest.raises(ValueError):
            WaveSample('other', 0, 0., 1.)
        with pytest.raises(ValueError):
            WaveSample(consts.Family_PSI, 0, 0., np.nan)
