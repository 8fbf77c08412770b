"""Edge contraction, vertex splitting and irreducibility."""

from __future__ import annotations

from .triangulation import (
    Edge,
    Triangulation,
    TriangulationError,
    edge,
    surface_of,
)


class NotAnEdge(ValueError):
    pass


class NotContractible(ValueError):
    pass


class InvalidSplit(ValueError):
    pass


def _check_edge(t: Triangulation, e: Edge) -> Edge:
    a, c = e
    if a == c or not t.has_edge(a, c):
        raise NotAnEdge(f"{tuple(e)} is not an edge")
    return edge(a, c)


def count_triangles_through_edge(t: Triangulation, e: Edge) -> int:
    """Number of 3-cycles of the graph through ``e`` (common neighbours)."""
    a, c = _check_edge(t, e)
    return len(t.neighbors[a] & t.neighbors[c])


def _is_k4_sphere(t: Triangulation) -> bool:
    return t.vertex_count == 4


def is_contractible(t: Triangulation, e: Edge) -> bool:
    # an edge in a third 3-cycle would become a double edge; K4 is the lone exception
    if count_triangles_through_edge(t, e) != 2:
        return False
    return not _is_k4_sphere(t)


def contractible_edges(t: Triangulation) -> list[Edge]:
    if _is_k4_sphere(t):
        return []
    nb = t.neighbors
    return [(a, c) for a, c in t.edges if len(nb[a] & nb[c]) == 2]


def is_irreducible(t: Triangulation) -> bool:
    return not contractible_edges(t)


def contract_unchecked(t: Triangulation, e: Edge) -> Triangulation:
    """Perform the contraction and let validation decide if the result is legal.

    Raises :class:`TriangulationError` when the identified complex is not a
    triangulation. This is the slow reference path for :func:`is_contractible`.
    """
    a, c = _check_edge(t, e)
    keep, drop = a, c  # a < c

    def lab(x):
        if x == drop:
            x = keep
        return x - 1 if x > drop else x

    faces = [(lab(x), lab(y), lab(z)) for x, y, z in t.faces if not (a in (x, y, z) and c in (x, y, z))]
    return Triangulation.from_faces(t.vertex_count - 1, faces)


def contract(t: Triangulation, e: Edge) -> Triangulation:
    """Contract edge ``e``; the smaller endpoint label survives."""
    if not is_contractible(t, e):
        raise NotContractible(f"edge {tuple(e)} is not contractible")
    return contract_unchecked(t, e)


def contractible_by_reference(t: Triangulation, e: Edge) -> bool:
    try:
        s = contract_unchecked(t, e)
    except TriangulationError:
        return False
    return surface_of(s) == surface_of(t)


def split(t: Triangulation, v: int, b: int, d: int) -> Triangulation:
    """Split ``v`` into two adjacent vertices along the link positions ``b`` and ``d``.

    The half keeping label ``v`` takes the arc of the rotation running from
    ``b`` to ``d`` in the stored rotation order; the new vertex ``n`` takes
    the other arc. Both halves are adjacent to ``b`` and ``d``. When ``b`` and
    ``d`` are consecutive in the link, one arc is empty and the result is the
    face ``v b d`` subdivided by a degree-3 vertex.
    """
    n = t.vertex_count
    if not 0 <= v < n:
        raise InvalidSplit(f"vertex {v} out of range")
    rot = t.rotation(v)
    if b == d or b not in rot or d not in rot:
        raise InvalidSplit(f"{b} and {d} must be distinct neighbours of {v}")
    i = rot.index(b)
    rot = rot[i:] + rot[:i]
    j = rot.index(d)
    first = rot[: j + 1]  # b ... d
    second = rot[j:] + rot[:1]  # d ... b
    w = n
    faces = [f for f in t.faces if v not in f]
    faces += [(v, x, y) for x, y in zip(first, first[1:])]
    faces += [(w, x, y) for x, y in zip(second, second[1:])]
    faces += [(v, w, b), (v, w, d)]
    try:
        return Triangulation.from_faces(n + 1, faces)
    except TriangulationError as exc:
        raise InvalidSplit(str(exc)) from exc


def splits(t: Triangulation):
    """Yield ``((v, b, d), result)`` for every distinct split of ``t``."""
    for v in range(t.vertex_count):
        rot = t.rotation(v)
        k = len(rot)
        for i in range(k):
            for j in range(i + 1, k):
                # (b, d) and (d, b) give mirror images with the halves swapped
                yield (v, rot[i], rot[j]), split(t, v, rot[i], rot[j])
