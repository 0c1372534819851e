import random

import pytest

from conormal.poset import (
    Adjacency,
    CornerPoset,
    Face,
    boundary_components,
    closed_manifold,
    hypercube,
    interval,
    product,
    simplex,
)


def bigon() -> CornerPoset:
    """A disk whose two boundary arcs meet in two corners sharing the index set {1, 2}."""
    faces = [
        Face("X", 0, ()),
        Face("A", 1, (1,)),
        Face("B", 1, (2,)),
        Face("v", 2, (1, 2)),
        Face("w", 2, (1, 2)),
    ]
    adjs = [
        Adjacency("A", "X", 1),
        Adjacency("B", "X", 2),
        Adjacency("v", "B", 1),
        Adjacency("v", "A", 2),
        Adjacency("w", "B", 1),
        Adjacency("w", "A", 2),
    ]
    return CornerPoset(2, faces, adjs)


def all_builders() -> dict[str, CornerPoset]:
    out = {"closed": closed_manifold(), "interval": interval(), "bigon": bigon()}
    out.update({f"boundary:{p}": boundary_components(p) for p in range(1, 11)})
    out.update({f"simplex:{k}": simplex(k) for k in range(1, 7)})
    out.update({f"cube:{k}": hypercube(k) for k in range(1, 7)})
    return out


_FACTOR_POOL = {
    "closed": closed_manifold,
    "boundary:1": lambda: boundary_components(1),
    "interval": interval,
    "boundary:3": lambda: boundary_components(3),
    "simplex:2": lambda: simplex(2),
    "simplex:3": lambda: simplex(3),
    "bigon": bigon,
}

MAX_FACES = 400


def random_products(count: int = 100, seed: int = 20261014) -> list[tuple[str, CornerPoset]]:
    """Deterministic iterated products of small builders, each at most MAX_FACES faces."""
    rng = random.Random(seed)
    names = sorted(_FACTOR_POOL)
    out = []
    while len(out) < count:
        picks = [rng.choice(names) for _ in range(rng.randint(2, 4))]
        size = 1
        for name in picks:
            size *= len(_FACTOR_POOL[name]().faces)
        if size > MAX_FACES:
            continue
        poset = _FACTOR_POOL[picks[0]]()
        for name in picks[1:]:
            poset = product(poset, _FACTOR_POOL[name]())
        out.append(("x".join(picks), poset))
    return out


@pytest.fixture(scope="session")
def builders():
    return all_builders()


@pytest.fixture(scope="session")
def products100():
    return random_products()


_CRITERIA: dict[int, tuple[str, list[str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = marker.args
        _CRITERIA.setdefault(number, (title, []))[1].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, outcomes = _CRITERIA[number]
        verdict = "PASS" if outcomes and all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title}")
