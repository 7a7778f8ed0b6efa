import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qindep.catalog import CATALOG, get_graph  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20240613)


@pytest.fixture(scope="session")
def clebsch():
    return get_graph("clebsch")


@pytest.fixture(scope="session")
def petersen():
    return get_graph("petersen")


@pytest.fixture(scope="session")
def catalog_graphs():
    return {name: factory() for name, (factory, _) in CATALOG.items()}


# one PASS/FAIL line per acceptance criterion, printed after the run
_ACCEPTANCE: dict[int, tuple[str, str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or (rep.when != "call" and rep.passed):
        return
    number, title = marker.args
    detail = "; ".join(str(v) for k, v in rep.user_properties if k == "detail")
    status = "PASS" if rep.passed else ("SKIP" if rep.skipped else "FAIL")
    if status != "PASS" and not detail:
        detail = str(rep.longrepr).strip().splitlines()[-1] if rep.longrepr else ""
    _ACCEPTANCE[number] = (status, title, detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        status, title, detail = _ACCEPTANCE[number]
        line = f"criterion {number:>2}: {status}  {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
