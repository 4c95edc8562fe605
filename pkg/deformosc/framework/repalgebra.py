# -*- coding:utf-8 -*-
"""
Parameters of su(1,1)_gamma and truncated matrices of R, J0, J+, J-, q, p, H
on the span of |a,0>, ..., |a,N-1>.
"""
import collections

import numpy as np
from scipy.special import beta as beta_fn

from hypernets.utils import logging

from deformosc.utils import consts

logger = logging.get_logger(__name__)


class ModelParams(
    collections.namedtuple('ModelParams',
                           ['a',
                            'c',
                            'gamma',
                            'b'])):
    """Representation label a, deformation label c, gamma = (2a-1)(2c-1) and the
    third deformation parameter b (zero for the two parameter model).
    """

    def __new__(cls, a, c, gamma=None, b=0.):
        a, c, b = float(a), float(c), float(b)
        if not a > 0:
            raise ValueError(f'Representation label a must be positive, got a={a}.')
        if not c > 0:
            raise ValueError(f'Deformation label c must be positive, got c={c}.')
        if not b >= 0:
            raise ValueError(f'Deformation parameter b must be nonnegative, got b={b}.')
        derived = (2. * a - 1.) * (2. * c - 1.)
        if gamma is not None and gamma != derived:
            raise ValueError(f'gamma={gamma} does not match (2a-1)(2c-1)={derived}.')
        return super(ModelParams, cls).__new__(cls, a, c, derived, b)

    @property
    def is_undeformed(self):
        return self.gamma == 0.

    @property
    def is_b_deformed(self):
        return self.b > 0.

    @property
    def beta_ac(self):
        return float(beta_fn(self.a, self.c))

    @property
    def allowed(self):
        """Whether a lies in the admissible set of its own gamma."""
        return is_allowed(self.a, self.gamma)

    @property
    def physically_acceptable(self):
        """psi_0(0)^2 = B(a, c)/pi must not exceed one."""
        return self.beta_ac <= np.pi

    def to_dict(self):
        return {'a': self.a, 'c': self.c, 'gamma': self.gamma, 'b': self.b}


def make_params(a, c, b=0.):
    """Build ModelParams with gamma = (2a-1)(2c-1).

    Raises
    ------
    ValueError
        For a <= 0, c <= 0, b < 0 or a outside `allowed_a_interval(gamma)`.
    """
    params = ModelParams(a, c, b=b)
    if not params.allowed:
        raise ValueError(f"a={a} lies outside the admissible intervals for gamma={params.gamma}.")
    if not params.physically_acceptable:
        logger.warning(f'B(a, c) = {params.beta_ac:.6g} > pi for a={a}, c={c}: '
                       f'|psi_0(0)|^2 exceeds one.')
    return params


def allowed_a_interval(gamma):
    """Representation labels a admissible for a given nonzero gamma.

    Returns
    -------
    intervals : list of (low, high) open intervals, high may be np.inf.

    Raises
    ------
    ValueError
        For gamma == 0, where every a > 0 is allowed.
    """
    if gamma == 0:
        raise ValueError('allowed_a_interval is undefined for gamma = 0: every a > 0 is allowed.')
    if gamma < 0:
        return [(0., 0.5), ((1. - gamma) / 2., np.inf)]
    if gamma < 1:
        return [(0., (1. - gamma) / 2.), (0.5, np.inf)]
    return [(0.5, np.inf)]


def is_allowed(a, gamma):
    if gamma == 0:
        return a > 0
    return any(low < a < high for low, high in allowed_a_interval(gamma))


class OperatorMatrix(
    collections.namedtuple('OperatorMatrix',
                           ['kind',
                            'dim',
                            'entries'])):
    """Dense truncated matrix of an operator, immutable after construction."""

    def __new__(cls, kind, dim, entries):
        entries = np.array(entries)
        if entries.shape != (dim, dim):
            raise ValueError(f'entries of shape {entries.shape} do not match dim={dim}.')
        entries.flags.writeable = False
        return super(OperatorMatrix, cls).__new__(cls, kind, int(dim), entries)

    def __matmul__(self, other):
        return self.entries @ _as_array(other)


def _as_array(m):
    return m.entries if isinstance(m, OperatorMatrix) else np.asarray(m)


def offdiag_args(params, N):
    """Squared coefficients linking |a,n> and |a,n+1>, n = 0..N-2.

    J+ |a,n> and J- |a,n+1> carry the same factor; for even n it is
    (n+2a+2b)(n+2b+2c), for odd n it is (n+1)(n+2a+2c-1).
    """
    a, b, c = params.a, params.b, params.c
    n = np.arange(N - 1, dtype=float)
    even = (n % 2) == 0
    args = np.where(even,
                    (n + 2. * a + 2. * b) * (n + 2. * b + 2. * c),
                    (n + 1.) * (n + 2. * a + 2. * c - 1.))
    if np.any(args <= 0):
        raise ValueError(f'Nonpositive square root argument for params {params}.')
    return args


def lowering_args(params, N):
    """Squared J- coefficients for |a,n>, n = 1..N-1, from the J- action itself."""
    a, b, c = params.a, params.b, params.c
    n = np.arange(1, N, dtype=float)
    even = (n % 2) == 0
    return np.where(even,
                    n * (n + 2. * a + 2. * c - 2.),
                    (n + 2. * a + 2. * b - 1.) * (n + 2. * b + 2. * c - 1.))


def j0_diagonal(params, N):
    return np.arange(N, dtype=float) + params.a + params.b + params.c - 0.5


def build_operator(kind, params, N):
    """Truncated matrix of an algebra element or observable.

    Parameters
    ----------
    kind : str, one of 'R', 'J0', 'Jplus', 'Jminus', 'Q', 'P', 'H'.
    params : ModelParams, b > 0 selects the three parameter actions.
    N : int, at least 2.

    Returns
    -------
    OperatorMatrix.

    Notes
    ----------
    q = (J+ + J-)/2, p = i(J+ - J-)/2 and H = J0 - (b + c - 1/2), so that the
    spectrum of H is n + a for every b.
    """
    if kind not in consts.OPERATOR_KINDS:
        raise ValueError(f'Unknown operator kind {kind}, expected one of {consts.OPERATOR_KINDS}.')
    if N < 2:
        raise ValueError(f'Truncation dimension N must be at least 2, got {N}.')

    n = np.arange(N)
    if kind == consts.Kind_R:
        entries = np.diag(np.where(n % 2 == 0, 1., -1.))
    elif kind == consts.Kind_J0:
        entries = np.diag(j0_diagonal(params, N))
    elif kind == consts.Kind_H:
        entries = np.diag(j0_diagonal(params, N) - (params.b + params.c - 0.5))
    else:
        root = np.sqrt(offdiag_args(params, N))
        jplus = np.diag(root, k=-1)
        jminus = np.diag(root, k=1)
        if kind == consts.Kind_JPLUS:
            entries = jplus
        elif kind == consts.Kind_JMINUS:
            entries = jminus
        elif kind == consts.Kind_Q:
            entries = (jplus + jminus) / 2.
        else:
            entries = 0.5j * (jplus - jminus)

    return OperatorMatrix(kind, N, entries)


def undeformed_operator(kind, a, N):
    """Truncated su(1,1) matrices: J0 = n + a, J+ ~ sqrt((n+1)(n+2a)), J- ~ sqrt(n(n+2a-1)).

    H is J0 itself.
    """
    n = np.arange(N, dtype=float)
    if kind == consts.Kind_R:
        entries = np.diag(np.where(n % 2 == 0, 1., -1.))
    elif kind in (consts.Kind_J0, consts.Kind_H):
        entries = np.diag(n + a)
    else:
        root = np.sqrt((n[:-1] + 1.) * (n[:-1] + 2. * a))
        jplus = np.diag(root, k=-1)
        jminus = np.diag(root, k=1)
        entries = {consts.Kind_JPLUS: jplus,
                   consts.Kind_JMINUS: jminus,
                   consts.Kind_Q: (jplus + jminus) / 2.,
                   consts.Kind_P: 0.5j * (jplus - jminus)}[kind]
    return OperatorMatrix(kind, N, entries)


def paraboson_operator(kind, a, N):
    """Truncated paraboson matrices.

    Jplus / Jminus hold b+ and b-: b+ |2n> = sqrt(2(n+a)) |2n+1>,
    b+ |2n+1> = sqrt(2(n+1)) |2n+2>. Q = (b+ + b-)/sqrt(2), P = i(b+ - b-)/sqrt(2).
    """
    m = np.arange(N - 1, dtype=float)
    args = np.where(m % 2 == 0, m + 2. * a, m + 1.)
    root = np.sqrt(args)
    bplus = np.diag(root, k=-1)
    bminus = np.diag(root, k=1)
    if kind == consts.Kind_R:
        return build_operator(consts.Kind_R, ModelParams(a, 1.), N)
    entries = {consts.Kind_JPLUS: bplus,
               consts.Kind_JMINUS: bminus,
               consts.Kind_Q: (bplus + bminus) / np.sqrt(2.),
               consts.Kind_P: 1j * (bplus - bminus) / np.sqrt(2.)}[kind]
    return OperatorMatrix(kind, N, entries)


def scaled_operator(kind, params, N):
    """J+/sqrt(2c), J-/sqrt(2c), q/sqrt(c) and p/sqrt(c): the operators whose
    c -> infinity limit is the paraboson oscillator."""
    if kind in (consts.Kind_JPLUS, consts.Kind_JMINUS):
        factor = np.sqrt(2. * params.c)
    elif kind in (consts.Kind_Q, consts.Kind_P):
        factor = np.sqrt(params.c)
    else:
        raise ValueError(f'Operator kind {kind} has no paraboson scaling.')
    m = build_operator(kind, params, N)
    return OperatorMatrix(kind, N, m.entries / factor)


def commutator_residual(A, B, expected, interior):
    """Max |(AB - BA - expected)_{ij}| over the leading interior x interior block.

    Parameters
    ----------
    A, B : OperatorMatrix.
    expected : OperatorMatrix or array-like of the same dimension.
    interior : int, at most N - 2 for truncated ladder operators.

    Raises
    ------
    ValueError
        When the dimensions differ or interior exceeds N.
    """
    a, b, e = _as_array(A), _as_array(B), _as_array(expected)
    if not (a.shape == b.shape == e.shape):
        raise ValueError(f'Dimension mismatch: {a.shape}, {b.shape}, {e.shape}.')
    if interior > a.shape[0]:
        raise ValueError(f'interior={interior} exceeds the dimension {a.shape[0]}.')
    diff = a @ b - b @ a - e
    block = diff[:interior, :interior]
    if block.size == 0:
        return 0.
    return float(np.max(np.abs(block)))


def anticommutator_residual(A, B, expected):
    """Max |(AB + BA - expected)_{ij}| over the full matrix."""
    a, b, e = _as_array(A), _as_array(B), _as_array(expected)
    return float(np.max(np.abs(a @ b + b @ a - e)))


def commutator_suite(params, N, interior=None):
    """Residuals of every defining relation of the algebra and of the
    Hamilton-Lie equations.

    Returns
    -------
    residuals : dict, relation name -> float. Relations with R are checked on
        the full matrix, the others on the interior block.
    """
    if interior is None:
        interior = N - 2
    ops = {k: build_operator(k, params, N) for k in consts.OPERATOR_KINDS}
    R, J0, Jp, Jm = ops['R'].entries, ops['J0'].entries, ops['Jplus'].entries, ops['Jminus'].entries
    Q, P, H = ops['Q'].entries, ops['P'].entries, ops['H'].entries
    eye = np.eye(N)
    zeros = np.zeros((N, N))

    return {
        '[H,q]=-ip': commutator_residual(H, Q, -1j * P, interior),
        '[H,p]=iq': commutator_residual(H, P, 1j * Q, interior),
        '[J+,J-]=-2J0-gR-4bJ0R': commutator_residual(
            Jp, Jm, -2. * J0 - params.gamma * R - 4. * params.b * J0 @ R, interior),
        '[J0,J+]=J+': commutator_residual(J0, Jp, Jp, interior),
        '[J0,J-]=-J-': commutator_residual(J0, Jm, -Jm, interior),
        '{R,J+}=0': anticommutator_residual(R, Jp, zeros),
        '{R,J-}=0': anticommutator_residual(R, Jm, zeros),
        '[R,J0]=0': commutator_residual(R, J0, zeros, N),
        'R^2=1': float(np.max(np.abs(R @ R - eye))),
    }


def paraboson_residuals(params, N):
    """Distance of the scaled ladder operators from b+- and the interior residual
    of [Q, P] - i(1 + (2a-1)R) for the paraboson matrices."""
    dist = max(float(np.max(np.abs(scaled_operator(k, params, N).entries
                                   - paraboson_operator(k, params.a, N).entries)))
               for k in (consts.Kind_JPLUS, consts.Kind_JMINUS))
    Q = paraboson_operator(consts.Kind_Q, params.a, N)
    P = paraboson_operator(consts.Kind_P, params.a, N)
    R = paraboson_operator(consts.Kind_R, params.a, N).entries
    expected = 1j * (np.eye(N) + (2. * params.a - 1.) * R)
    return dist, commutator_residual(Q, P, expected, N - 2)
