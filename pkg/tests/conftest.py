import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from tgwa import (QWeylParams, TqmuParams, build_quantized_weyl, build_tqmu,
                  build_type_A2_example)

_criteria = {}


@pytest.fixture
def a2():
    return build_type_A2_example()


@pytest.fixture
def tq_a2():
    return build_tqmu(TqmuParams([[2, -1], [-1, 2]]))


@pytest.fixture
def tq_a2_mu5():
    return build_tqmu(TqmuParams([[2, -1], [-1, 2]], mu={(1, 2): 5}))


@pytest.fixture
def qweyl2():
    return build_quantized_weyl(QWeylParams([4, 9], {(1, 2): "1/2"}))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or report.failed:
        prev = _criteria.get(crit, "PASS")
        _criteria[crit] = "FAIL" if (report.failed or prev == "FAIL") else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_criteria):
        terminalreporter.write_line(f"criterion {crit}: {_criteria[crit]}")
