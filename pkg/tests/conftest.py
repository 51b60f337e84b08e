from functools import lru_cache

import pytest

from quatmckay import verify
from quatmckay.specs import build_group


@lru_cache(maxsize=None)
def group(spec: str):
    return build_group(spec)


@lru_cache(maxsize=None)
def analysis(spec: str, seed: int = 0):
    return verify.analyze(group(spec), seed)


@pytest.fixture(scope="session")
def su2_types():
    return verify.su2_types(0)


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
