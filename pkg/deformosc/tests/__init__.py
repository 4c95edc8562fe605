import pytest

try:
    import joblib
    n_cpus = joblib.cpu_count()
except:
    n_cpus = 1

skip_if_single_cpu = pytest.mark.skipif(n_cpus < 2, reason='Not enough cpus for a parallel run.')
