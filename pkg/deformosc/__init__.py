def _init():
    import warnings
    from hypernets.utils import logging, isnotebook

    warnings.filterwarnings('ignore')
    if isnotebook():
        logging.set_level('warn')

_init()

from .framework.repalgebra import make_params, ModelParams, build_operator
from .framework.wavefunctions import psi_closed, coeff_recurrence, weight_w
from .framework.verification import run_suites, VerificationReport

from ._version import __version__
