import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
import pytest

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

values = st.floats(min_value=-50, max_value=50, allow_nan=False, width=32)
small_ints = st.integers(min_value=-20, max_value=20).map(float)


def series(min_size=1, max_size=12, elements=values):
    return st.lists(elements, min_size=min_size, max_size=max_size)


@pytest.fixture(params=["compiled", "python"])
def kernels(request):
    from frechet_ann import _backend
    if request.param == "compiled":
        if _backend.compiled is None:
            pytest.skip("compiled extension not built")
        return _backend.compiled
    return _backend.python


def pytest_terminal_summary(terminalreporter):
    from criteria import LINES
    if LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(LINES):
            terminalreporter.write_line(LINES[number])
