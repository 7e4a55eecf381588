import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from schutzen.corpus import CORPUS, corpus_presentation  # noqa: E402
from schutzen.pipeline import Instance  # noqa: E402

SEED = int(os.environ.get("SCHUTZEN_SEED", "0"))

_instances = {}


def instance(name):
    if name not in _instances:
        _instances[name] = Instance.build(corpus_presentation(name))
    return _instances[name]


@pytest.fixture(params=sorted(CORPUS))
def corpus_name(request):
    return request.param


@pytest.fixture
def z3():
    return instance("z3")


# acceptance summary: one line per criterion
_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid or "::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::test_criterion_")[1]
    num = int(name.split("_")[0])
    if report.when == "call" or report.outcome != "passed":
        prev = _criteria.get(num, True)
        _criteria[num] = prev and report.outcome == "passed"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        terminalreporter.write_line(f"criterion {num}: {'PASS' if _criteria[num] else 'FAIL'}")
