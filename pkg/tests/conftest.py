import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--full",
        action="store_true",
        default=False,
        help="run the long-running exhaustive tier (Klein bottle n=10 and n=11)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--full"):
        return
    skip = pytest.mark.skip(reason="long-running tier; pass --full to run")
    for item in items:
        if "full" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def small_corpus():
    """Every generated triangulation with at most 8 vertices, by (surface, n)."""
    from surftri.generator import enumerate_all, triangulations
    from surftri.triangulation import KLEIN_BOTTLE, PROJECTIVE_PLANE, SPHERE

    sizes = [(SPHERE, n) for n in range(4, 9)] + [(PROJECTIVE_PLANE, n) for n in (6, 7, 8)] + [(KLEIN_BOTTLE, 8)]
    return {(s, n): triangulations(enumerate_all(s, n)) for s, n in sizes}
