import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("fixed", derandomize=True, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("fixed")


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def planar_hull(points):
    """Andrew's monotone chain; counter-clockwise, collinear points dropped."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def twice_area(points):
    """2 * area of conv(points) by the shoelace formula (= normalized volume)."""
    h = planar_hull(points)
    if len(h) < 3:
        return 0
    s = 0
    for i in range(len(h)):
        x1, y1 = h[i]
        x2, y2 = h[(i + 1) % len(h)]
        s += x1 * y2 - x2 * y1
    return abs(s)


def mixed_area(p, q):
    """2-D mixed volume: vol(P+Q) - vol(P) - vol(Q), in normalized units."""
    pq = [(a[0] + b[0], a[1] + b[1]) for a in p for b in q]
    return Fraction(twice_area(pq) - twice_area(p) - twice_area(q), 2)


def random_support(rng, n, lo=1, hi=5, cmax=3):
    k = rng.randint(lo, hi)
    return [[rng.randint(0, cmax) for _ in range(n)] for _ in range(k)]


def random_system(rng, n, lo=1, hi=5, cmax=3):
    return [random_support(rng, n, lo, hi, cmax) for _ in range(n)]


Q1 = [[1, 1], [3, 0], [4, 0], [4, 1], [3, 3], [1, 4], [0, 4], [0, 3]]
Q2 = [[0, 1], [0, 0], [3, 0], [4, 1], [4, 4], [3, 4]]


@pytest.fixture
def example1():
    from bkkunmix import SupportSystem
    return SupportSystem.from_lists([Q1, Q2])


_CRITERIA = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    state = {"label": request.node.name, "detail": ""}
    yield state
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    line = f"{'PASS' if ok else 'FAIL'}  {state['label']}: {state['detail']}"
    _CRITERIA.append(line)
    print("\n" + line)


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
