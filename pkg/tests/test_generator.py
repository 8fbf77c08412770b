import pytest

from surftri import catalog
from surftri.generator import (
    Unsupported,
    all_splits,
    enumerate_all,
    enumerate_irreducible,
    triangulations,
)
from surftri.isomorphism import canonical_code
from surftri.moves import is_irreducible
from surftri.triangulation import (
    KLEIN_BOTTLE,
    PROJECTIVE_PLANE,
    SPHERE,
    TORUS,
    double_pyramid,
    surface_of,
    tetrahedron,
)


def names(codes):
    by_code = {e.code: e.name for e in catalog.all_entries()}
    return {by_code.get(c) for c in codes}


# numbers of sphere triangulations with 4..9 vertices (the simplicial 3-polytopes)
SPHERE_COUNTS = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 9: 50}


@pytest.mark.parametrize("n, count", SPHERE_COUNTS.items())
def test_sphere_counts(n, count):
    assert len(enumerate_all(SPHERE, n)) == count


def test_sphere_n4_is_tetrahedron():
    assert enumerate_all(SPHERE, 4) == {canonical_code(tetrahedron())}
    assert enumerate_irreducible(SPHERE, 4) == {canonical_code(tetrahedron())}
    assert enumerate_irreducible(SPHERE, 5) == frozenset()


@pytest.mark.parametrize("n, count", [(6, 1), (7, 3), (8, 16)])
def test_projective_counts(n, count):
    assert len(enumerate_all(PROJECTIVE_PLANE, n)) == count


def test_projective_irreducibles():
    six = enumerate_irreducible(PROJECTIVE_PLANE, 6)
    seven = enumerate_irreducible(PROJECTIVE_PLANE, 7)
    assert names(six) == {"MP1"} and names(seven) == {"MP2"}
    assert enumerate_irreducible(PROJECTIVE_PLANE, 8) == frozenset()


def test_generated_members_are_valid(small_corpus):
    for (surface, n), ts in small_corpus.items():
        for t in ts:
            assert t.vertex_count == n and surface_of(t) == surface


def test_irreducible_is_a_filter(small_corpus):
    for (surface, n), ts in small_corpus.items():
        want = {canonical_code(t) for t in ts if is_irreducible(t)}
        assert enumerate_irreducible(surface, n) == want


def test_klein_8():
    codes = enumerate_irreducible(KLEIN_BOTTLE, 8)
    assert len(codes) == 6
    assert names(codes) == {f"Kh{i}" for i in range(1, 7)}


def test_klein_9():
    codes = enumerate_irreducible(KLEIN_BOTTLE, 9)
    assert len(codes) == 19
    assert names(codes) == {f"Kh{i}" for i in range(7, 25)} | {"Kc1"}


def test_klein_9_independent_of_jobs():
    assert enumerate_irreducible(KLEIN_BOTTLE, 9, jobs=3) == enumerate_irreducible(KLEIN_BOTTLE, 9)


def closure(surface, n):
    split = set()
    for t in triangulations(enumerate_all(surface, n)):
        split |= all_splits(t)
    return enumerate_all(surface, n + 1), split, enumerate_irreducible(surface, n + 1)


@pytest.mark.parametrize(
    "surface, n",
    [(SPHERE, n) for n in range(4, 9)] + [(PROJECTIVE_PLANE, 6), (PROJECTIVE_PLANE, 7), (KLEIN_BOTTLE, 8)],
)
def test_closure_identity(surface, n):
    big, split, irr = closure(surface, n)
    assert big == split | irr
    assert not split & irr


def test_all_splits_of_tetrahedron():
    assert all_splits(tetrahedron()) == {canonical_code(double_pyramid())}


def test_unsupported():
    with pytest.raises(Unsupported):
        enumerate_all(TORUS, 7)
    with pytest.raises(Unsupported):
        enumerate_irreducible(KLEIN_BOTTLE, 10)
    with pytest.raises(Unsupported):
        enumerate_all(SPHERE, 3)


def test_progress_callback():
    calls = []
    enumerate_irreducible(KLEIN_BOTTLE, 8, progress=lambda i, k: calls.append((i, k)))
    assert calls and calls[-1][0] == calls[-1][1]


@pytest.mark.full
def test_klein_10():
    codes = enumerate_irreducible(KLEIN_BOTTLE, 10, long_running=True, jobs=4)
    assert names(codes) == {"Kh25", "Kc2"} and len(codes) == 2


@pytest.mark.full
def test_klein_11():
    codes = enumerate_irreducible(KLEIN_BOTTLE, 11, long_running=True, jobs=4)
    assert names(codes) == {"Kc3", "Kc4"} and len(codes) == 2
