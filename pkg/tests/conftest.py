import time

import pytest
from hypothesis import settings

settings.register_profile("suite", deadline=None, max_examples=50)
settings.load_profile("suite")

_SUITE_START = time.perf_counter()


@pytest.fixture(scope="session")
def suite_elapsed():
    """Callable giving seconds since the test session began."""
    return lambda: time.perf_counter() - _SUITE_START


def pytest_collection_modifyitems(items):
    # The whole-suite runtime check must observe everything else first.
    items.sort(key=lambda item: "suite_runtime" in item.name)
