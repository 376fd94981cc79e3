from __future__ import annotations

import itertools

import pytest

from parbridges.graph import Graph


def path3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2)])


def triangle() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


def two_triangles() -> Graph:
    # Edge 6 joins the triangles.
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def all_simple_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


def with_extra(g: Graph, pairs, first_id: int) -> Graph:
    """``g`` plus ``pairs`` as new edges numbered from ``first_id``."""
    m0 = first_id
    ids = g.ids.tolist() + list(range(m0, m0 + len(pairs)))
    us = g.us.tolist() + [p[0] for p in pairs]
    vs = g.vs.tolist() + [p[1] for p in pairs]
    return Graph(g.vertex_count, us, vs, ids)


@pytest.fixture
def p3() -> Graph:
    return path3()


@pytest.fixture
def tri() -> Graph:
    return triangle()


@pytest.fixture
def bowtie() -> Graph:
    return two_triangles()


_CRITERIA: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion this test gates")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label = marker.args[0]
    if report.when == "call" or (report.when == "setup" and not report.passed):
        status = "PASS" if report.passed else "SKIP" if report.skipped else "FAIL"
        detail = ""
        if report.skipped and isinstance(report.longrepr, tuple):
            detail = report.longrepr[2]
        elif report.failed:
            detail = str(report.longrepr).strip().splitlines()[-1]
        notes = [v for k, v in item.user_properties if k == "detail"]
        _CRITERIA[label] = (status, "; ".join(notes + ([detail] if detail else [])))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_CRITERIA, key=lambda s: (int(s.split()[0].rstrip("ab")), s)):
        status, detail = _CRITERIA[label]
        terminalreporter.write_line(f"{status:4}  {label}" + (f"  [{detail}]" if detail else ""))
