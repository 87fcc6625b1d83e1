import sys

import pytest
from hypothesis import settings

from hadring.rings import ring_make

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SPECS = [
    "gf2:1:0x3",
    "gf2:2:0x7",
    "gf2:8:0x11b",
    "quot:0b100",
    "quot:0x10",
    "quot:0b110",  # u^2 + u = u(u+1): zero divisors, no nilpotents
]


@pytest.fixture(params=SPECS)
def ring(request):
    return ring_make(request.param)


@pytest.fixture
def gf4():
    return ring_make("gf2:2:0b111")


@pytest.fixture
def gf2():
    return ring_make("gf2:1:0x3")


@pytest.fixture
def gf256():
    return ring_make("gf2:8:0x11b")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
