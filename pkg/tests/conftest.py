import pytest

from mimo_ee.params import SystemParams

# hardware parameter set used throughout the numerical experiments
REFERENCE_KW = dict(
    B=1e6,
    N0=10.0 ** -20.4,
    alpha=1.0 / 0.39,
    P_BS=0.1,
    P_UT=0.1,
    P_OSC=2.0,
    P_s=5.0,
    P_dec=1.15e-9,   # 1.15 W per Gbit/s
    C0=1e-9,
)


def reference_params(gc_db: float = -150.0) -> SystemParams:
    return SystemParams(Gc=10.0 ** (gc_db / 10.0), **REFERENCE_KW)


@pytest.fixture
def params_150():
    return reference_params(-150.0)
