from __future__ import annotations

import pytest

from dihedral_codes.setting import make_setting

GRID = [(2, 1, 7), (3, 1, 4), (2, 2, 5), (5, 1, 3)]
Z4_15 = (2, 1, 15)

# filled by tests/test_acceptance.py: criterion number -> (title, passed)
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


@pytest.fixture(scope="session")
def z4():
    return make_setting(*Z4_15)


@pytest.fixture(scope="session", params=GRID, ids=lambda t: "p%d-m%d-n%d" % t)
def grid_setting(request):
    return make_setting(*request.param)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {title}")
