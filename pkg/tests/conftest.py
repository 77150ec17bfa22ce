import time

import pytest

from diffrad import default_tower

_T0 = time.monotonic()

SUITE_BUDGET_SECONDS = 60.0


@pytest.fixture(scope="session")
def tower():
    return default_tower()


def suite_elapsed() -> float:
    return time.monotonic() - _T0


def pytest_sessionfinish(session, exitstatus):
    elapsed = suite_elapsed()
    ok = elapsed < SUITE_BUDGET_SECONDS
    print(
        f"\nsuite runtime [{'PASS' if ok else 'FAIL'}] "
        f"{elapsed:.1f}s (budget {SUITE_BUDGET_SECONDS:.0f}s)"
    )
    if not ok and session.exitstatus == 0:
        session.exitstatus = 1
