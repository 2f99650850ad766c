import time

import pytest

# criterion id -> (description, passed, detail); filled by tests/test_acceptance.py
ACCEPTANCE = {}
_SESSION_START = time.perf_counter()


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(cid, description, passed, detail)``."""

    def record(cid, description, passed, detail=""):
        ACCEPTANCE[cid] = (description, bool(passed), detail)
        line = f"ACCEPTANCE {cid} {'PASS' if passed else 'FAIL'}: {description}"
        print(line + (f" [{detail}]" if detail else ""))
        return passed

    return record


@pytest.fixture(scope="session")
def session_start():
    return _SESSION_START


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(ACCEPTANCE, key=lambda c: (len(c), c)):
        description, passed, detail = ACCEPTANCE[cid]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{cid:>3} {status}  {description}" + (f"  [{detail}]" if detail else ""))
