from . import consts
from . import specfun
from . import metrics


def get_random_state(seed=9527):
    """Turn seed into a numpy Generator.

    Parameters
    ----------
    seed : None, int or np.random.Generator, default 9527.
    """
    import numpy as np

    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)
