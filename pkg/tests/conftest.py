import os
import random

import pytest

from cpgen.graph import Graph

ACCEPTANCE_LINES = []


def record_criterion(label, passed, detail="", status=None):
    status = status or ("PASS" if passed else "FAIL")
    ACCEPTANCE_LINES.append(f"{label}: {status}  {detail}".rstrip())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(int(os.environ.get("CPGEN_TEST_SEED", "12345")))


def random_subcubic(rng, n, tries=None):
    """Random graph of max degree 3 on ``n`` vertices."""
    g = Graph(n)
    tries = tries if tries is not None else 3 * n
    for _ in range(tries):
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b and not g.has_edge(a, b) and g.degree(a) < 3 and g.degree(b) < 3:
            g.add_edge(a, b)
    return g


def random_cubic(rng, n, attempts=200):
    """Random cubic graph via the pairing model (rejecting loops and multi-edges)."""
    for _ in range(attempts):
        points = [v for v in range(n) for _ in range(3)]
        rng.shuffle(points)
        g = Graph(n)
        ok = True
        for i in range(0, len(points), 2):
            a, b = points[i], points[i + 1]
            if a == b or g.has_edge(a, b):
                ok = False
                break
            g.add_edge(a, b)
        if ok:
            return g
    raise RuntimeError("no simple cubic graph found")
