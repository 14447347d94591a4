from functools import lru_cache

import pytest

from denniston.construction import build_denniston
from denniston.gf_tower import build_field, build_plain_field

# (p, s, m, r) -> q = p**s; the grid exercised by the acceptance suite
GRID = [
    (2, 1, 2, 1),
    (3, 1, 2, 1),
    (2, 2, 2, 1),
    (5, 1, 2, 1),
    (2, 1, 3, 1),
    (2, 1, 3, 2),
    (3, 1, 3, 1),
    (3, 1, 3, 2),
]
SMALL_GRID = [g for g in GRID if g[0] ** (g[1] * 3 * g[2]) <= 4096]


@lru_cache(maxsize=None)
def field(p, s, m, modulus=None):
    return build_field(p, s, m, modulus=modulus)


@lru_cache(maxsize=None)
def plain(p, d):
    return build_plain_field(p, d)


@lru_cache(maxsize=None)
def denniston(p, s, m, r):
    return build_denniston(field(p, s, m), r)


def grid_id(g):
    p, s, m, r = g
    return f"q{p ** s}-m{m}-r{r}"


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def f16():
    return field(2, 1, 2)
