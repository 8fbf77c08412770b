"""Read triangulations off planar straight-line drawings with glued sides.

Handle-type pictures are drawn in a 30 x 30 square (10 units per grid cell)
whose horizontal sides are glued in parallel and whose vertical sides are
glued in antiparallel: ``(x, 0) ~ (x, 30)`` and ``(0, y) ~ (30, 30 - y)``.
Crosscap-type pictures are two hexagons sharing a side; each hexagon has its
antipodal corners glued.

The drawing is a plane graph whose bounded faces should all be triangles;
after gluing the boundary points they become the faces of the triangulation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .triangulation import Triangulation, TriangulationError

Point = tuple[float, float]
Segment = tuple[float, float, float, float]

EPS = 0.02


class DrawingError(TriangulationError):
    """The drawing is not a plane triangulated polygon."""


def _key(p: Point) -> Point:
    return (round(p[0], 2), round(p[1], 2))


def handle_identify(size: float = 30) -> Callable[[Point], Point]:
    def ident(p: Point) -> Point:
        x, y = p
        if abs(x - size) < EPS:
            x, y = 0.0, size - y
        if abs(y - size) < EPS:
            y = 0.0
        return _key((x, y))

    return ident


def crosscap_identify() -> Callable[[Point], Point]:
    glue = {
        (-20, 5): (0, -5),
        (20, 5): (0, -5),
        (-20, -5): (0, 5),
        (20, -5): (0, 5),
        (-10, 10): (-10, -10),
        (10, 10): (10, -10),
    }
    glue = {_key(k): _key(v) for k, v in glue.items()}

    def ident(p: Point) -> Point:
        p = _key(p)
        return glue.get(p, p)

    return ident


@dataclass(frozen=True)
class GridSpec:
    """Vertices and drawn segments of one picture, in figure units.

    ``segments`` may pass through vertices; they are cut there. ``identify``
    sends every point to the representative of its glued class.
    """

    points: tuple[Point, ...]
    segments: tuple[Segment, ...]
    identify: Callable[[Point], Point] = field(default_factory=handle_identify, compare=False)


def _on_segment(p: Point, a: Point, b: Point) -> float | None:
    """Parameter of ``p`` along ``ab`` if it lies on the closed segment."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    length2 = dx * dx + dy * dy
    t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / length2
    if t < -1e-9 or t > 1 + 1e-9:
        return None
    cx, cy = a[0] + t * dx, a[1] + t * dy
    if math.hypot(p[0] - cx, p[1] - cy) > EPS:
        return None
    return t


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def plane_edges(points: Sequence[Point], segments: Sequence[Segment]) -> set[tuple[int, int]]:
    pts = [_key(p) for p in points]
    index = {p: i for i, p in enumerate(pts)}
    if len(index) != len(pts):
        raise DrawingError("duplicate vertex positions")
    edges = set()
    for x0, y0, x1, y1 in segments:
        a, b = _key((x0, y0)), _key((x1, y1))
        hits = []
        for i, p in enumerate(pts):
            t = _on_segment(p, a, b)
            if t is not None:
                hits.append((t, i))
        hits.sort()
        if not hits or hits[0][0] > 1e-6 or hits[-1][0] < 1 - 1e-6:
            raise DrawingError(f"segment {(x0, y0, x1, y1)} does not end at vertices")
        for (_, i), (_, j) in zip(hits, hits[1:]):
            edges.add((min(i, j), max(i, j)))
    # a proper crossing means the picture was mis-read
    el = sorted(edges)
    for k, (i, j) in enumerate(el):
        for u, v in el[k + 1 :]:
            if len({i, j, u, v}) < 4:
                continue
            p, q, r, s = pts[i], pts[j], pts[u], pts[v]
            if (_cross(p, q, r) * _cross(p, q, s) < -1e-9) and (_cross(r, s, p) * _cross(r, s, q) < -1e-9):
                raise DrawingError(f"edges {pts[i]}-{pts[j]} and {pts[u]}-{pts[v]} cross")
    return edges


def bounded_faces(points: Sequence[Point], edges: set[tuple[int, int]]) -> list[tuple[int, ...]]:
    pts = [_key(p) for p in points]
    around: dict[int, list[int]] = {i: [] for i in range(len(pts))}
    for i, j in edges:
        around[i].append(j)
        around[j].append(i)
    for i, nbrs in around.items():
        nbrs.sort(key=lambda j: math.atan2(pts[j][1] - pts[i][1], pts[j][0] - pts[i][0]))
    visited = set()
    faces = []
    for i, j in edges:
        for start in ((i, j), (j, i)):
            if start in visited:
                continue
            cycle = []
            u, v = start
            while (u, v) not in visited:
                visited.add((u, v))
                cycle.append(u)
                ring = around[v]
                # turn to the neighbour just clockwise of u: traces faces counterclockwise
                w = ring[(ring.index(u) - 1) % len(ring)]
                u, v = v, w
            area = sum(
                pts[a][0] * pts[b][1] - pts[b][0] * pts[a][1] for a, b in zip(cycle, cycle[1:] + cycle[:1])
            )
            if area > 0:
                faces.append(tuple(cycle))
    return faces


def build_from_drawing(spec: GridSpec) -> Triangulation:
    """Triangulation realized by the picture after gluing its sides."""
    edges = plane_edges(spec.points, spec.segments)
    faces = bounded_faces(spec.points, edges)
    pts = [_key(p) for p in spec.points]
    reps = sorted({spec.identify(p) for p in pts}, key=lambda p: (-p[1], p[0]))
    label = {r: k for k, r in enumerate(reps)}
    # regions that are not triangles are left out; their sides then border a
    # single face and validation reports them as non-manifold edges
    tri = [tuple(label[spec.identify(pts[i])] for i in f) for f in faces if len(f) == 3]
    return Triangulation.from_faces(len(reps), tri)


build_from_grid = build_from_drawing
