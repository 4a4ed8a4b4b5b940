from pathlib import Path

import numpy as np
import pytest

from spernash import Game

GAMES_DIR = Path(__file__).resolve().parent.parent / "games"

_criteria: dict[int, tuple[str, list[str]]] = {}


@pytest.fixture
def pd() -> Game:
    return Game.from_bimatrix([[2, 0], [3, 1]], [[2, 3], [0, 1]], [["X", "Y"], ["X", "Y"]])


@pytest.fixture
def bos() -> Game:
    return Game.from_bimatrix([[2, 0], [0, 1]], [[1, 0], [0, 2]], [["X", "Y"], ["X", "Y"]])


@pytest.fixture
def pennies() -> Game:
    return Game.from_bimatrix([[1, -1], [-1, 1]], [[-1, 1], [1, -1]])


def random_profile(rng, counts):
    return [rng.dirichlet(np.ones(k)) for k in counts]


def pytest_runtest_logreport(report):
    marker = getattr(report, "acceptance", None)
    if marker is None or (report.when != "call" and report.passed):
        return
    number, title = marker
    _criteria.setdefault(number, (title, []))[1].append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        outcome.get_result().acceptance = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcomes = _criteria[number]
        verdict = "PASS" if outcomes and all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"[{verdict}] {number}. {title}")
