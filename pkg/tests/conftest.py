import functools
import sys

import pytest

from shiregions import arrangement as arr


@functools.lru_cache(maxsize=None)
def shi_regions(n):
    a = arr.shi(n)
    return a, tuple(arr.enumerate_regions(a))


@pytest.fixture(scope="session")
def shi_cache():
    return shi_regions



def pytest_terminal_summary(terminalreporter):
    mod = next((m for name, m in list(sys.modules.items())
                if name.rsplit(".", 1)[-1] == "test_acceptance"), None)
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)
