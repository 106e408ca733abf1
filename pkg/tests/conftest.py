import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# criterion number -> {title: failed}
_criteria = {}


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call" and call.excinfo is None:
        return
    number, title = mark.args
    parts = _criteria.setdefault(number, {})
    parts[title] = parts.get(title, False) or call.excinfo is not None


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        parts = _criteria[number]
        verdict = "FAIL" if any(parts.values()) else "PASS"
        titles = "; ".join(t + (" [failed]" if failed and len(parts) > 1 else "") for t, failed in parts.items())
        terminalreporter.write_line(f"{verdict} criterion {number}: {titles}")
