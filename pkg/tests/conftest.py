import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")
_results: dict[int, list[str]] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome != "passed":
        _results.setdefault(int(m.group(1)), []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        ok = all(o == "passed" for o in _results[n])
        terminalreporter.write_line(f"ACCEPTANCE criterion {n}: {'PASS' if ok else 'FAIL'}")
