import numpy as np
import pytest

from uurjpdd import _fallback
from uurjpdd.measurement import BasisPair, random_unitary

try:
    from uurjpdd import _kernels
except ImportError:  # extension not built
    _kernels = None

BACKENDS = [pytest.param(_fallback, id="python")]
BACKENDS.append(
    pytest.param(_kernels, id="cython")
    if _kernels is not None
    else pytest.param(None, id="cython", marks=pytest.mark.skip(reason="extension not built"))
)


@pytest.fixture(params=BACKENDS)
def kernels(request):
    return request.param


def random_pair(d, seed):
    return BasisPair(random_unitary(d, seed))


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
