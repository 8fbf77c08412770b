"""The irreducible triangulations of the Klein bottle and their building blocks.

Entries Kh1-Kh25 (handle type) and Kc1-Kc4 (crosscap type) are read off the
published pictures by :mod:`surftri.drawing`; MP1 and MP2, the two irreducible
triangulations of the projective plane, come from exhaustive generation. All
of them are shipped as ``.tri`` files under ``data/``; ``TRI_DATA_DIR``
points the loader somewhere else.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from pathlib import Path
from typing import Iterator, Optional

from . import drawing
from .figures import FIGURES
from .generator import enumerate_irreducible, triangulations
from .isomorphism import CanonicalCode, canonical_code, degree_adjacency_fingerprint, graph_isomorphic
from .moves import is_irreducible
from .triangulation import (
    KLEIN_BOTTLE,
    PROJECTIVE_PLANE,
    Face,
    Triangulation,
    TriangulationError,
    degree_sequence,
    read_tri,
    surface_of,
    write_tri,
)

HANDLE_NAMES = tuple(f"Kh{i}" for i in range(1, 26))
CROSSCAP_NAMES = tuple(f"Kc{i}" for i in range(1, 5))
KLEIN_NAMES = HANDLE_NAMES + CROSSCAP_NAMES
PROJECTIVE_NAMES = ("MP1", "MP2")
ALL_NAMES = KLEIN_NAMES + PROJECTIVE_NAMES

# Klein bottle entries: the sequences printed under the pictures, as printed.
# MP1 is K6; MP2's sequence was frozen from the projective-plane enumeration.
EXPECTED_DEGREES = {name: FIGURES[name]["degrees"] for name in KLEIN_NAMES}
EXPECTED_DEGREES["MP1"] = (5, 5, 5, 5, 5, 5)
EXPECTED_DEGREES["MP2"] = (6, 6, 6, 6, 4, 4, 4)

DEFAULT_DATA_DIR = Path(__file__).parent / "data"


class NonSimpleResult(TriangulationError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # "handle", "crosscap" or "projective-plane"
    triangulation: Triangulation
    expected_degree_sequence: tuple[int, ...]

    @property
    def code(self) -> CanonicalCode:
        return canonical_code(self.triangulation)


def kind_of(name: str) -> str:
    if name.startswith("Kh"):
        return "handle"
    if name.startswith("Kc"):
        return "crosscap"
    if name in PROJECTIVE_NAMES:
        return "projective-plane"
    raise KeyError(name)


def data_dir() -> Path:
    return Path(os.environ.get("TRI_DATA_DIR", DEFAULT_DATA_DIR))


# --- building entries from their sources -----------------------------------


def figure_spec(name: str) -> drawing.GridSpec:
    fig = FIGURES[name]
    ident = drawing.crosscap_identify() if name.startswith("Kc") else drawing.handle_identify()
    return drawing.GridSpec(fig["points"], fig["segments"], ident)


def build_from_figure(name: str) -> Triangulation:
    return drawing.build_from_drawing(figure_spec(name))


@lru_cache(maxsize=None)
def projective_irreducibles() -> tuple[Triangulation, ...]:
    """The irreducible projective-plane triangulations with at most 7 vertices."""
    found = []
    for n in (6, 7):
        found += triangulations(enumerate_irreducible(PROJECTIVE_PLANE, n))
    return tuple(found)


def build(name: str) -> Triangulation:
    if name in PROJECTIVE_NAMES:
        mp = projective_irreducibles()
        if len(mp) != 2:
            raise RuntimeError(f"expected 2 irreducible projective planes, generation gave {len(mp)}")
        return mp[PROJECTIVE_NAMES.index(name)]
    return build_from_figure(name)


def write_catalog(directory: Optional[Path] = None) -> None:
    directory = Path(directory or data_dir())
    directory.mkdir(parents=True, exist_ok=True)
    for name in ALL_NAMES:
        src = "exhaustive generation" if name in PROJECTIVE_NAMES else "transcribed picture"
        write_tri(build(name), directory / f"{name}.tri", comment=f"{name} ({kind_of(name)}, {src})")


# --- access -------------------------------------------------------------------


def load(name: str, directory: Optional[Path] = None) -> Triangulation:
    if name not in ALL_NAMES:
        raise KeyError(f"unknown catalog entry {name!r}")
    return read_tri(Path(directory or data_dir()) / f"{name}.tri")


@lru_cache(maxsize=None)
def _cached(name: str, directory: str) -> CatalogEntry:
    return CatalogEntry(name, kind_of(name), load(name, Path(directory)), EXPECTED_DEGREES[name])


def get(name: str) -> CatalogEntry:
    return _cached(name, str(data_dir()))


def all_entries(names=ALL_NAMES) -> list[CatalogEntry]:
    return [get(name) for name in names]


def klein_entries() -> list[CatalogEntry]:
    return all_entries(KLEIN_NAMES)


def identify(t: Triangulation) -> Optional[str]:
    """Name of the catalog entry equivalent to ``t``, if any."""
    code = canonical_code(t)
    for entry in all_entries():
        if entry.code == code:
            return entry.name
    return None


# --- crosscap sums ------------------------------------------------------------

GLUINGS = tuple(permutations(range(3)))


def crosscap_sum(t1: Triangulation, f1: Face, t2: Triangulation, f2: Face, gluing: int) -> Triangulation:
    """Remove ``f1`` and ``f2`` and glue the two boundary triangles.

    ``gluing`` picks one of the six bijections between the sorted corners of
    ``f1`` and the corners of ``f2``. Vertices of ``t1`` keep their labels;
    the interior vertices of ``t2`` follow in increasing order.
    """
    f1, f2 = tuple(sorted(f1)), tuple(sorted(f2))
    if f1 not in t1.faces or f2 not in t2.faces:
        raise ValueError("the removed faces must be faces of the summands")
    perm = GLUINGS[gluing]
    relabel = {f2[perm[k]]: f1[k] for k in range(3)}
    nxt = t1.vertex_count
    for v in range(t2.vertex_count):
        if v not in relabel:
            relabel[v] = nxt
            nxt += 1
    faces = [f for f in t1.faces if f != f1]
    faces += [tuple(relabel[v] for v in f) for f in t2.faces if f != f2]
    try:
        return Triangulation.from_faces(nxt, faces)
    except TriangulationError as exc:
        raise NonSimpleResult(str(exc)) from exc


@dataclass(frozen=True)
class CrosscapWitness:
    left: str
    right: str
    face_left: Face
    face_right: Face
    gluing: int
    triangulation: Triangulation


def crosscap_sums(summands: Optional[dict] = None) -> Iterator[CrosscapWitness]:
    if summands is None:
        summands = {name: get(name).triangulation for name in PROJECTIVE_NAMES}
    for left, right in ((a, b) for a in summands for b in summands):
        t1, t2 = summands[left], summands[right]
        for f1 in t1.faces:
            for f2 in t2.faces:
                for g in range(len(GLUINGS)):
                    try:
                        t = crosscap_sum(t1, f1, t2, f2, g)
                    except NonSimpleResult:
                        continue
                    yield CrosscapWitness(left, right, f1, f2, g, t)


def enumerate_crosscap_irreducibles(summands: Optional[dict] = None) -> dict[CanonicalCode, CrosscapWitness]:
    """Irreducible crosscap sums by class, with the first gluing found for each."""
    found: dict[CanonicalCode, CrosscapWitness] = {}
    for w in crosscap_sums(summands):
        if not is_irreducible(w.triangulation):
            continue
        found.setdefault(canonical_code(w.triangulation), w)
    return found


# --- verification -------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"CHECK {self.name} {'PASS' if self.passed else 'FAIL'} {self.detail}".rstrip()


def _entry_checks(name: str) -> list[Check]:
    try:
        entry = get(name)
    except (OSError, TriangulationError) as exc:
        return [Check(f"catalog.{name}.valid", False, f"{type(exc).__name__}: {exc}")]
    t = entry.triangulation
    want = KLEIN_BOTTLE if entry.kind != "projective-plane" else PROJECTIVE_PLANE
    got = surface_of(t)
    degs = degree_sequence(t)
    return [
        Check(f"catalog.{name}.valid", True, f"n={t.vertex_count} faces={t.face_count}"),
        Check(f"catalog.{name}.surface", got == want, f"{got.name} chi={got.euler_characteristic}"),
        Check(f"catalog.{name}.irreducible", is_irreducible(t)),
        Check(
            f"catalog.{name}.degrees",
            degs == entry.expected_degree_sequence,
            f"got={','.join(map(str, degs))} expected={','.join(map(str, entry.expected_degree_sequence))}",
        ),
    ]


def verify_catalog() -> list[Check]:
    checks = []
    for name in ALL_NAMES:
        checks += _entry_checks(name)
    try:
        entries = {e.name: e for e in klein_entries()}
    except (OSError, TriangulationError) as exc:
        checks.append(Check("catalog.pairwise", False, f"cannot load entries: {exc}"))
        return checks
    handle = sum(1 for e in entries.values() if e.kind == "handle")
    checks.append(
        Check("catalog.count", len(entries) == 29 and handle == 25, f"klein={len(entries)} handle={handle}")
    )
    clashes = [(a, b) for a, b in combinations(KLEIN_NAMES, 2) if entries[a].code == entries[b].code]
    checks.append(
        Check(
            "catalog.pairwise",
            not clashes,
            f"pairs={len(KLEIN_NAMES) * (len(KLEIN_NAMES) - 1) // 2} equivalent={clashes or 0}",
        )
    )
    checks += distinguisher_checks(entries)
    return checks


def distinguisher_checks(entries: dict) -> list[Check]:
    t = {name: e.triangulation for name, e in entries.items()}
    seqs = [degree_sequence(e.triangulation) for e in entries.values()]
    out = []
    for name in ("Kh23", "Kh25"):
        k = seqs.count(degree_sequence(t[name]))
        out.append(Check(f"distinguish.{name}.unique_degrees", k == 1, f"occurrences={k}"))
    for a, b, deg in (("Kh10", "Kh22", 6), ("Kh15", "Kh24", 5)):
        fa = degree_adjacency_fingerprint(t[a], deg)
        fb = degree_adjacency_fingerprint(t[b], deg)
        same = degree_sequence(t[a]) == degree_sequence(t[b])
        ok = same and fa == (2, 1) and fb == (2, 0) and not graph_isomorphic(t[a], t[b])
        out.append(
            Check(
                f"distinguish.{a}_{b}",
                ok,
                f"degree-{deg} pair adjacent in {a}={fa[1] == 1} in {b}={fb[1] == 1}",
            )
        )
    return out
