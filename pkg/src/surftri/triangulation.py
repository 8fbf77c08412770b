"""Triangulations of closed surfaces stored as face lists.

A triangulation is kept as a sorted tuple of sorted vertex triples. Everything
else (edges, neighbourhoods, rotation order around a vertex) is derived on
demand and cached on the instance.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence, Union

Face = tuple[int, int, int]
Edge = tuple[int, int]


class TriangulationError(ValueError):
    """A face list that is not a triangulation of a closed surface."""


class InvalidLabel(TriangulationError):
    pass


class DuplicateFace(TriangulationError):
    pass


class SharedEdgePair(TriangulationError):
    """Two faces share two edges, i.e. they sit on the same vertex triple."""


class UnusedLabel(TriangulationError):
    pass


class NonManifoldEdge(TriangulationError):
    pass


class DisconnectedLink(TriangulationError):
    pass


class DisconnectedComplex(TriangulationError):
    pass


def edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class SurfaceId:
    orientable: bool
    euler_characteristic: int

    _NAMES = {
        (True, 2): "sphere",
        (False, 1): "projective plane",
        (True, 0): "torus",
        (False, 0): "Klein bottle",
    }

    @property
    def name(self) -> str:
        key = (self.orientable, self.euler_characteristic)
        if key in self._NAMES:
            return self._NAMES[key]
        if self.orientable:
            return f"orientable genus {(2 - self.euler_characteristic) // 2}"
        return f"non-orientable genus {2 - self.euler_characteristic}"

    def __str__(self) -> str:
        return self.name


SPHERE = SurfaceId(True, 2)
PROJECTIVE_PLANE = SurfaceId(False, 1)
TORUS = SurfaceId(True, 0)
KLEIN_BOTTLE = SurfaceId(False, 0)

SURFACES = {
    "sphere": SPHERE,
    "projective": PROJECTIVE_PLANE,
    "torus": TORUS,
    "klein": KLEIN_BOTTLE,
}


def _normalize(faces: Iterable[Sequence[int]]) -> tuple[Face, ...]:
    out = []
    for f in faces:
        if len(f) != 3:
            raise TriangulationError(f"face {tuple(f)} is not a triple")
        a, b, c = sorted(int(x) for x in f)
        if a == b or b == c:
            raise TriangulationError(f"face {tuple(f)} repeats a vertex")
        out.append((a, b, c))
    out.sort()
    return tuple(out)


@dataclass(frozen=True)
class Triangulation:
    """A simple triangulation of a connected closed surface.

    Construction validates every invariant; use :meth:`from_faces` to build
    one from an arbitrary (unsorted) face list.
    """

    vertex_count: int
    faces: tuple[Face, ...]
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        faces = _normalize(self.faces)
        object.__setattr__(self, "faces", faces)
        _validate(self.vertex_count, faces)

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Sequence[int]]) -> "Triangulation":
        return cls(int(n), tuple(faces))

    def __repr__(self) -> str:
        return f"Triangulation(n={self.vertex_count}, faces={len(self.faces)})"

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        es = set()
        for a, b, c in self.faces:
            es.update(((a, b), (a, c), (b, c)))
        return tuple(sorted(es))

    @cached_property
    def neighbors(self) -> tuple[frozenset, ...]:
        nb = [set() for _ in range(self.vertex_count)]
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def edge_faces(self) -> dict:
        """Map each edge to the two vertices opposite it."""
        opp = defaultdict(list)
        for a, b, c in self.faces:
            opp[(a, b)].append(c)
            opp[(a, c)].append(b)
            opp[(b, c)].append(a)
        return dict(opp)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, a: int, b: int) -> bool:
        return edge(a, b) in self.edge_faces

    def rotation(self, v: int) -> list[int]:
        """Neighbours of ``v`` in the order met walking across faces around it."""
        return _link_walk(self.faces, v)

    def relabel(self, perm: Sequence[int]) -> "Triangulation":
        """Return the triangulation with vertex ``i`` renamed to ``perm[i]``."""
        return Triangulation.from_faces(
            self.vertex_count, ((perm[a], perm[b], perm[c]) for a, b, c in self.faces)
        )


def _link_walk(faces: Sequence[Face], v: int) -> list[int]:
    link = defaultdict(list)
    for f in faces:
        if v in f:
            x, y = (u for u in f if u != v)
            link[x].append(y)
            link[y].append(x)
    start = min(link)
    cycle = [start]
    prev, cur = None, start
    while True:
        a, b = link[cur]
        nxt = b if a == prev else a
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
    return cycle


def _validate(n: int, faces: tuple[Face, ...]) -> None:
    if n < 4:
        raise TriangulationError(f"a closed surface needs at least 4 vertices, got n={n}")
    for f in faces:
        if f[0] < 0 or f[2] >= n:
            raise InvalidLabel(f"face {f} uses a label outside 0..{n - 1}")
    for f, g in zip(faces, faces[1:]):
        if f == g:
            raise DuplicateFace(f"face {f} occurs more than once")
    used = {v for f in faces for v in f}
    if len(used) != n:
        missing = sorted(set(range(n)) - used)
        raise UnusedLabel(f"labels {missing} occur in no face")

    opp = defaultdict(list)
    for a, b, c in faces:
        opp[(a, b)].append(c)
        opp[(a, c)].append(b)
        opp[(b, c)].append(a)
    for e, thirds in opp.items():
        if len(thirds) != 2:
            raise NonManifoldEdge(f"edge {e} lies in {len(thirds)} faces")

    # every neighbour has link-degree 2 now, so each link is a union of cycles
    link = defaultdict(lambda: defaultdict(list))
    for (a, b), (c, d) in opp.items():
        link[a][b] += [c, d]
        link[b][a] += [c, d]
    for v in range(n):
        lv = link[v]
        start = next(iter(lv))
        seen = {start}
        stack = [start]
        while stack:
            for w in lv[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(lv):
            raise DisconnectedLink(f"link of vertex {v} is not a single cycle")

    reached = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in link[u]:
            if w not in reached:
                reached.add(w)
                queue.append(w)
    if len(reached) != n:
        raise DisconnectedComplex("the complex has more than one component")


def surface_of(t: Triangulation) -> SurfaceId:
    """Classify the surface by Euler characteristic and orientability."""
    if "surface" in t._cache:
        return t._cache["surface"]
    # propagate a cyclic orientation from face to face; a clash means non-orientable
    oriented = {t.faces[0]: t.faces[0]}
    queue = deque([t.faces[0]])
    orientable = True
    opp = t.edge_faces
    while queue and orientable:
        f = queue.popleft()
        p, q, r = oriented[f]
        for a, b in ((p, q), (q, r), (r, p)):
            c = ({p, q, r} - {a, b}).pop()
            s = opp[edge(a, b)][0]
            if s == c:
                s = opp[edge(a, b)][1]
            g = tuple(sorted((a, b, s)))
            want = (b, a, s)
            if g not in oriented:
                oriented[g] = want
                queue.append(g)
            elif not _same_cycle(oriented[g], want):
                orientable = False
                break
    sid = SurfaceId(orientable, t.euler_characteristic)
    t._cache["surface"] = sid
    return sid


def _same_cycle(x: tuple, y: tuple) -> bool:
    return y in (x, x[1:] + x[:1], x[2:] + x[:2])


def degree_sequence(t: Triangulation) -> tuple[int, ...]:
    return tuple(sorted((len(s) for s in t.neighbors), reverse=True))


def link_cycle(t: Triangulation, v: int) -> tuple[int, ...]:
    """Rotation around ``v`` in normal form.

    The cycle is only defined up to rotation and reflection; the
    lexicographically least representative is returned.
    """
    if not 0 <= v < t.vertex_count:
        raise IndexError(f"vertex {v} out of range")
    cyc = t.rotation(v)
    k = len(cyc)
    reps = []
    for seq in (cyc, cyc[::-1]):
        for i in range(k):
            reps.append(tuple(seq[i:] + seq[:i]))
    return min(reps)


# --- .tri text format -------------------------------------------------------

PathLike = Union[str, Path]


def format_tri(t: Triangulation, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {line}" for line in comment.splitlines())
    lines.append(f"n {t.vertex_count}")
    lines.extend(f"f {a} {b} {c}" for a, b, c in t.faces)
    return "\n".join(lines) + "\n"


def parse_tri(text: str) -> Triangulation:
    n = None
    faces = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "n" and len(parts) == 2 and n is None:
                n = int(parts[1])
            elif parts[0] == "f" and len(parts) == 4 and n is not None:
                faces.append(tuple(int(x) for x in parts[1:]))
            else:
                raise ValueError
        except ValueError:
            raise TriangulationError(f"line {lineno}: cannot parse {raw!r}") from None
    if n is None:
        raise TriangulationError("missing 'n <int>' header line")
    return Triangulation.from_faces(n, faces)


def read_tri(path: PathLike) -> Triangulation:
    return parse_tri(Path(path).read_text(encoding="utf-8"))


def write_tri(t: Triangulation, path: PathLike, comment: str | None = None) -> None:
    Path(path).write_text(format_tri(t, comment), encoding="utf-8", newline="\n")


def tetrahedron() -> Triangulation:
    return Triangulation.from_faces(4, combinations(range(4), 3))


def octahedron() -> Triangulation:
    # poles 0 and 5, equator 1-2-3-4
    faces = []
    for i in range(4):
        a, b = 1 + i, 1 + (i + 1) % 4
        faces += [(0, a, b), (5, a, b)]
    return Triangulation.from_faces(6, faces)


def double_pyramid() -> Triangulation:
    # poles 0 and 4, equator 1-2-3
    faces = []
    for i in range(3):
        a, b = 1 + i, 1 + (i + 1) % 3
        faces += [(0, a, b), (4, a, b)]
    return Triangulation.from_faces(5, faces)
