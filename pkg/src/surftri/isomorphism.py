"""Canonical codes for triangulations and graph isomorphism of their 1-skeleta.

The canonical code is the lexicographic minimum, over every oriented starting
face, of a breadth-first relabelling that walks from face to face across
edges. Each oriented face ``(p, q, r)`` reports, for its three edges in
order, the label of the vertex on the far side. Because the walk transports
the local orientation, both rotation senses are covered by starting from both
orientations of every face, so reflections are included.

Starting faces are restricted to those whose vertex degrees are
lexicographically least; the degree triple is part of the code, so this does
not change what the minimum distinguishes.
"""

from __future__ import annotations

from collections import Counter

from .triangulation import Triangulation

CanonicalCode = tuple[int, ...]


def _walk(opp: dict, start: tuple[int, int, int], best: list | None) -> list | None:
    """Code of the walk from ``start``; None as soon as it exceeds ``best``."""
    p0, q0, r0 = start
    label = {p0: 0, q0: 1, r0: 2}
    nxt = 3
    seen = {frozenset(start)}
    queue = [start]
    code = []
    pos = 0
    qi = 0
    tight = best is not None
    while qi < len(queue):
        p, q, r = queue[qi]
        qi += 1
        for a, b, c in ((p, q, r), (q, r, p), (r, p, q)):
            s1, s2 = opp[(a, b) if a < b else (b, a)]
            s = s2 if s1 == c else s1
            ls = label.get(s)
            if ls is None:
                ls = label[s] = nxt
                nxt += 1
            if tight:
                bv = best[pos]
                if ls > bv:
                    return None
                if ls < bv:
                    tight = False
            code.append(ls)
            pos += 1
            key = frozenset((a, b, s))
            if key not in seen:
                seen.add(key)
                queue.append((b, a, s))
    return code


def canonical_code(t: Triangulation) -> CanonicalCode:
    cache = t._cache
    if "code" in cache:
        return cache["code"]
    opp = t.edge_faces
    deg = [len(s) for s in t.neighbors]
    starts = []
    for a, b, c in t.faces:
        for p, q, r in ((a, b, c), (b, c, a), (c, a, b), (a, c, b), (c, b, a), (b, a, c)):
            starts.append(((deg[p], deg[q], deg[r]), (p, q, r)))
    low = min(s[0] for s in starts)
    best = None
    for key, st in starts:
        if key != low:
            continue
        code = _walk(opp, st, best)
        if code is not None and (best is None or code < best):
            best = code
    result = (t.vertex_count, *low, *best)
    cache["code"] = result
    return result


def equivalent(t1: Triangulation, t2: Triangulation) -> bool:
    """True if some vertex bijection carries the faces of ``t1`` onto those of ``t2``."""
    if t1.vertex_count != t2.vertex_count or len(t1.faces) != len(t2.faces):
        return False
    return canonical_code(t1) == canonical_code(t2)


def decode(code: CanonicalCode) -> Triangulation:
    """Rebuild a triangulation (in canonical labelling) from its code."""
    n = code[0]
    body = code[4:]
    faces = {(0, 1, 2)}
    queue = [(0, 1, 2)]
    pos = 0
    qi = 0
    while qi < len(queue):
        p, q, r = queue[qi]
        qi += 1
        for a, b, _ in ((p, q, r), (q, r, p), (r, p, q)):
            s = body[pos]
            pos += 1
            key = tuple(sorted((a, b, s)))
            if key not in faces:
                faces.add(key)
                queue.append((b, a, s))
    return Triangulation.from_faces(n, faces)


# --- graph level -----------------------------------------------------------


def degree_adjacency_fingerprint(t: Triangulation, degree: int) -> tuple[int, int]:
    """Count of vertices of the given degree and of edges joining two of them."""
    nb = t.neighbors
    vs = [v for v in range(t.vertex_count) if len(nb[v]) == degree]
    joined = sum(1 for i, u in enumerate(vs) for w in vs[i + 1 :] if w in nb[u])
    return len(vs), joined


def graph_isomorphic(t1: Triangulation, t2: Triangulation) -> bool:
    """Isomorphism of the underlying simple graphs, ignoring the embedding."""
    n = t1.vertex_count
    if n != t2.vertex_count or t1.edge_count != t2.edge_count:
        return False
    nb1, nb2 = t1.neighbors, t2.neighbors
    d1 = [len(s) for s in nb1]
    d2 = [len(s) for s in nb2]
    if sorted(d1) != sorted(d2):
        return False

    # refine both degree partitions together so colour ids are comparable
    c1, c2 = d1[:], d2[:]
    for _ in range(n):
        s1 = [(c1[v], tuple(sorted(c1[w] for w in nb1[v]))) for v in range(n)]
        s2 = [(c2[v], tuple(sorted(c2[w] for w in nb2[v]))) for v in range(n)]
        if Counter(s1) != Counter(s2):
            return False
        ids = {s: i for i, s in enumerate(sorted(set(s1)))}
        new1 = [ids[s] for s in s1]
        new2 = [ids[s] for s in s2]
        stable = len(set(new1)) == len(set(c1))
        c1, c2 = new1, new2
        if stable:
            break
    size = Counter(c1)

    # visit t1's vertices so each one after the first touches an earlier one
    order = []
    placed = set()
    for root in sorted(range(n), key=lambda v: (size[c1[v]], v)):
        if root in placed:
            continue
        stack = [root]
        while stack:
            v = stack.pop()
            if v in placed:
                continue
            placed.add(v)
            order.append(v)
            stack.extend(w for w in sorted(nb1[v], key=lambda w: size[c1[w]], reverse=True) if w not in placed)
    candidates = {v: [w for w in range(n) if c2[w] == c1[v]] for v in range(n)}
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in candidates[v]:
            if w in used:
                continue
            ok = True
            for u, x in mapping.items():
                if (u in nb1[v]) != (x in nb2[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return extend(0)
