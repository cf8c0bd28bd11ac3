from __future__ import annotations

import functools

import pytest

from preproj.context import Context


@functools.lru_cache(maxsize=None)
def context(tag: str, opposite: bool = False) -> Context:
    """Shared contexts; their ideal and module caches persist across tests."""
    return Context(tag, opposite=opposite)


@pytest.fixture
def A1():
    return context("A1")


@pytest.fixture
def A2():
    return context("A2")


@pytest.fixture
def A3():
    return context("A3")


@pytest.fixture
def D4():
    return context("D4")


# -- acceptance report -----------------------------------------------------------------

_criteria: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or not marker.args:
        return
    num, title = marker.args[0], marker.kwargs.get("title", "")
    entry = _criteria.setdefault(num, {"title": title, "ok": True, "seen": False})
    if report.when == "call":
        entry["seen"] = True
    if report.failed:
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        e = _criteria[num]
        status = "PASS" if e["ok"] and e["seen"] else "FAIL"
        terminalreporter.write_line(f"criterion {num:>2}: {status}  {e['title']}")
