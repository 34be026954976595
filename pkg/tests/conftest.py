import random
import re
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


def pytest_addoption(parser):
    parser.addoption("--nfam-seed", type=int, default=20240611,
                     help="seed for randomized family growth in the tests")


@pytest.fixture
def seed(request):
    return request.config.getoption("--nfam-seed")


@pytest.fixture
def rng(seed):
    return random.Random(seed)


_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+?)(\[|$)")


def pytest_terminal_summary(terminalreporter):
    verdicts = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            if rep.when != "call" and status == "passed":
                continue
            m = _CRITERION.search(rep.nodeid.split("::")[-1])
            if not m:
                continue
            key = (int(m.group(1)), m.group(2))
            ok = status == "passed"
            verdicts[key] = verdicts.get(key, True) and ok
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), ok in sorted(verdicts.items()):
        terminalreporter.write_line(f"criterion {num} {name}: {'PASS' if ok else 'FAIL'}")
