from itertools import product
from pathlib import Path

import numpy as np
import pytest

from hammingcode import CodeParams

GOLDEN = Path(__file__).parent / "golden"

# (m, k) pairs covering the repetition code, perfect codes and shortened codes
SMALL_CODES = [(1, 2), (3, 3), (4, 3), (5, 4), (8, 4), (11, 4), (12, 5), (26, 5)]


@pytest.fixture
def golden():
    return GOLDEN


@pytest.fixture
def h74():
    return CodeParams(4, 3)


@pytest.fixture(params=SMALL_CODES, ids=lambda mk: f"m{mk[0]}k{mk[1]}")
def small_code(request):
    return CodeParams(*request.param)


def brute_force_codeword(data, m, k):
    """Codeword found by search: the unique word of length m + k that carries
    ``data`` at the non-power-of-two positions and satisfies every parity
    equation. Written without any package code."""
    n = m + k
    data_pos = [p for p in range(1, n + 1) if p & (p - 1)]
    matches = []
    for checks in product((0, 1), repeat=k):
        word = [0] * n
        for p, b in zip(data_pos, data):
            word[p - 1] = b
        for i, b in enumerate(checks):
            word[(1 << i) - 1] = b
        if all(sum(word[p - 1] for p in range(1, n + 1) if (p >> i) & 1) % 2 == 0 for i in range(k)):
            matches.append(word)
    assert len(matches) == 1
    return matches[0]


def random_bits(rng, shape):
    return rng.integers(0, 2, size=shape, dtype=np.uint8)


# acceptance criteria get one PASS/FAIL line each in the terminal summary
_acceptance_results = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance_results.append((marker.args[0] if marker.args else item.name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance_results:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
