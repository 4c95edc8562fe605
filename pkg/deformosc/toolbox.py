# -*- coding:utf-8 -*-
import numpy as np
import pandas as pd
from scipy.linalg import eigh_tridiagonal

from hypernets.utils import logging

from deformosc.config import Config as cfg
from deformosc.utils import consts
from deformosc.framework.repalgebra import build_operator
from deformosc.framework.wavefunctions import psi_grid
from deformosc.framework.verification import gram_matrix

logger = logging.get_logger(__name__)


class OscToolBox:

    @staticmethod
    def grid(x_min=None, x_max=None, x_step=None):
        """Uniform grid x_min, x_min + x_step, ... up to x_max, rounded to 12 decimals.

        Raises
        ------
        ValueError
            When x_min >= x_max or x_step <= 0.
        """
        x_min = cfg.x_min if x_min is None else x_min
        x_max = cfg.x_max if x_max is None else x_max
        x_step = cfg.x_step if x_step is None else x_step
        if not x_min < x_max:
            raise ValueError(f'x_min must be below x_max, got x_min={x_min}, x_max={x_max}.')
        if not x_step > 0:
            raise ValueError(f'x_step must be positive, got {x_step}.')
        count = int(np.floor((x_max - x_min) / x_step + 1e-9)) + 1
        # + 0. turns -0.0 into 0.0
        return np.round(x_min + x_step * np.arange(count), 12) + 0.

    @staticmethod
    def tabulate(params, nmax=None, x=None, n_jobs=None):
        """Wave functions psi_0 ... psi_nmax on a grid.

        Returns
        -------
        DataFrame with columns x, n, psi; rows ordered by n, then x.
        """
        nmax = cfg.nmax if nmax is None else nmax
        x = OscToolBox.grid() if x is None else np.asarray(x, dtype=float)
        # + 0. turns -0.0 into 0.0
        values = psi_grid(x, nmax, params, n_jobs=n_jobs) + 0.
        levels = np.repeat(np.arange(nmax + 1), len(x))
        return pd.DataFrame({'x': np.tile(x, nmax + 1), 'n': levels, 'psi': values.ravel()})

    @staticmethod
    def spectrum(params, nmax=None):
        """Energies of H and eigenvalues of the truncated position matrix.

        Returns
        -------
        (DataFrame n, energy ; DataFrame k, q_eigenvalue), both of length nmax.
        """
        nmax = cfg.nmax if nmax is None else nmax
        if nmax < 1:
            raise ValueError(f'nmax must be at least 1, got {nmax}.')
        N = max(nmax, 2)
        energy = np.diag(build_operator(consts.Kind_H, params, N).entries)[:nmax]
        if nmax == 1:
            q_eig = np.zeros(1)
        else:
            Q = build_operator(consts.Kind_Q, params, nmax).entries
            q_eig = eigh_tridiagonal(np.diag(Q), np.diag(Q, k=1), eigvals_only=True)
        energies = pd.DataFrame({'n': np.arange(nmax), 'energy': energy})
        q_values = pd.DataFrame({'k': np.arange(nmax), 'q_eigenvalue': q_eig})
        return energies, q_values

    @staticmethod
    def gram(params, nmax=None, spec=None):
        """Gram matrix in long format, columns m, n, value."""
        nmax = cfg.nmax if nmax is None else nmax
        G, report = gram_matrix(nmax, params, spec)
        m, n = np.meshgrid(np.arange(nmax + 1), np.arange(nmax + 1), indexing='ij')
        return pd.DataFrame({'m': m.ravel(), 'n': n.ravel(), 'value': G.ravel()}), report

    @staticmethod
    def to_csv(df, path=None):
        """Write with '.' decimals, 17 significant digits and '\\n' line endings."""
        return df.to_csv(path, index=False, float_format=consts.CSV_FLOAT_FORMAT,
                         lineterminator=consts.CSV_LINE_TERMINATOR)

    @staticmethod
    def to_json(df, path=None):
        return df.to_json(path, orient='records', double_precision=15)
