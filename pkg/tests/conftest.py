import time

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def timings():
    """Wall-clock cost of the expensive session fixtures, keyed by name."""
    return {}


@pytest.fixture(scope="session")
def fig2_roots(timings):
    from dfflab.bethe import continuation_sweep

    t0 = time.perf_counter()
    sweep = continuation_sweep(210, 210, 105, 20.0, 0.04, 0.04)
    timings["fig2_roots"] = time.perf_counter() - t0
    return sweep


@pytest.fixture(scope="session")
def fig2_curve(fig2_roots, timings):
    from dfflab.bethe import hubbard_dff_from_roots

    t0 = time.perf_counter()
    curve = hubbard_dff_from_roots(fig2_roots, 512)
    timings["fig2_curve"] = time.perf_counter() - t0
    return curve


@pytest.fixture(scope="session")
def lmg_curves(timings):
    from dfflab.lmg import lmg_dff_sweep

    t0 = time.perf_counter()
    curves = {S: lmg_dff_sweep(S, 0.5, 0.8, 1.1, 0.005) for S in (128, 256, 512, 1024)}
    timings["lmg_curves"] = time.perf_counter() - t0
    return curves
