from __future__ import annotations

import os

import pytest
from hypothesis import HealthCheck, settings

from _support import ACCEPTANCE, sl_generators
from lieaffine.liecore import generate

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def sl2():
    return generate(2, sl_generators(2))


@pytest.fixture
def sl3():
    return generate(3, sl_generators(3))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, title = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
