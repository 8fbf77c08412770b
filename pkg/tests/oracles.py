"""Slow but obviously-correct reference implementations used only by tests."""

from __future__ import annotations

import random

import networkx as nx

from surftri.moves import split
from surftri.triangulation import Triangulation


def face_bijection_exists(t1: Triangulation, t2: Triangulation) -> bool:
    """Search vertex bijections that carry the face set of t1 onto t2's.

    Plain backtracking over vertices in label order; the only pruning is that
    degrees must agree and every face whose vertices are all mapped must land
    on a face.
    """
    if t1.vertex_count != t2.vertex_count or t1.face_count != t2.face_count:
        return False
    n = t1.vertex_count
    faces2 = {frozenset(f) for f in t2.faces}
    by_vertex = {v: [f for f in t1.faces if max(f) == v] for v in range(n)}
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or t1.degree(v) != t2.degree(w):
                continue
            image[v] = w
            if all(frozenset(image[x] for x in f) in faces2 for f in by_vertex[v]):
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
        image[v] = -1
        return False

    return extend(0)


def to_networkx(t: Triangulation) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(t.vertex_count))
    g.add_edges_from(t.edges)
    return g


def random_relabel(t: Triangulation, rng: random.Random) -> Triangulation:
    perm = list(range(t.vertex_count))
    rng.shuffle(perm)
    return t.relabel(perm)


def random_split(t: Triangulation, rng: random.Random) -> tuple[Triangulation, tuple[int, int, int]]:
    v = rng.randrange(t.vertex_count)
    b, d = rng.sample(t.rotation(v), 2)
    return split(t, v, b, d), (v, b, d)
