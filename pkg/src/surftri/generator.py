"""Exhaustive generation of surface triangulations up to equivalence.

Search outline: vertex 0 is taken to be a vertex of maximum degree ``d`` and
its link is fixed to the cycle ``1, 2, ..., d``. After that the lowest vertex
whose link is still open is always completed first: one end ``u`` of an open
path in its link is picked and the face on the far side of edge ``v u`` is
chosen among the existing vertices or a brand-new one. New vertices receive
the next free label, so apart from the choice of vertex 0 and the
orientation of its link every labelling is produced once. Leaves are
deduplicated by canonical code.

Pruning:
  * no vertex may exceed degree ``d``;
  * at most ``2 (n - chi)`` faces and ``3 (n - chi)`` edges;
  * a vertex link may only close into a single cycle;
  * face orientations are propagated as faces are glued, so orientable
    targets are cut at the first twist;
  * when only irreducible results are wanted, closed links of length 3 are
    rejected, and so is any edge between two closed vertices that lies in
    only two 3-cycles.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional

from .isomorphism import CanonicalCode, canonical_code, decode
from .moves import is_irreducible, splits
from .triangulation import (
    KLEIN_BOTTLE,
    PROJECTIVE_PLANE,
    SPHERE,
    SurfaceId,
    Triangulation,
)

log = logging.getLogger(__name__)


class Unsupported(ValueError):
    pass


# largest n for the default and the long-running configuration
LIMITS = {SPHERE: 10, PROJECTIVE_PLANE: 8, KLEIN_BOTTLE: 9}
LONG_LIMITS = {SPHERE: 11, PROJECTIVE_PLANE: 9, KLEIN_BOTTLE: 11}


class _Search:
    """Mutable search state for one target (surface, n, maximum degree)."""

    def __init__(self, n: int, surface: SurfaceId, maxdeg: int, irreducible_only: bool):
        self.n = n
        self.orientable = surface.orientable
        self.max_faces = 2 * (n - surface.euler_characteristic)
        self.max_edges = 3 * (n - surface.euler_characteristic)
        self.maxdeg = maxdeg
        self.irr = irreducible_only and n > 4  # K4 is irreducible despite its 2-cycle edges
        self.irr_filter = irreducible_only
        self.mindeg = 4 if irreducible_only and n > 4 else 3
        self.count = [[0] * n for _ in range(n)]
        self.dir = [[0] * n for _ in range(n)]
        self.link: list[dict[int, list[int]]] = [dict() for _ in range(n)]
        self.closed = [False] * n
        self.faces: list[tuple[int, int, int]] = []
        self.edges = 0
        self.twists = 0
        self.nv = 0
        self.found: set[CanonicalCode] = set()
        self.leaves = 0

    # -- primitive edits -------------------------------------------------

    def _other_end(self, x: int, s: int) -> tuple[int, int]:
        """Walk the open path of link(x) from its end ``s``; return (far end, nodes)."""
        lk = self.link[x]
        prev, cur, k = s, lk[s][0], 2
        while len(lk[cur]) == 2:
            a, b = lk[cur]
            prev, cur = cur, (b if a == prev else a)
            k += 1
        return cur, k

    def push(self, a: int, b: int, c: int) -> list[int]:
        """Add oriented face (a, b, c); return the vertices whose link closed."""
        count, link, d = self.count, self.link, self.dir
        for x, y in ((a, b), (b, c), (c, a)):
            if count[x][y] == 0:
                self.edges += 1
            count[x][y] += 1
            count[y][x] += 1
            if d[x][y]:
                self.twists += 1
            d[x][y] += 1
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            lx = link[x]
            if y in lx:
                lx[y].append(z)
            else:
                lx[y] = [z]
            if z in lx:
                lx[z].append(y)
            else:
                lx[z] = [y]
        self.faces.append((a, b, c))
        newly = []
        for x in (a, b, c):
            if not self.closed[x] and all(len(t) == 2 for t in link[x].values()):
                self.closed[x] = True
                newly.append(x)
        return newly

    def pop(self, newly: list[int]) -> None:
        a, b, c = self.faces.pop()
        for x in newly:
            self.closed[x] = False
        count, link, d = self.count, self.link, self.dir
        for x, y in ((a, b), (b, c), (c, a)):
            d[x][y] -= 1
            if d[x][y]:
                self.twists -= 1
            count[x][y] -= 1
            count[y][x] -= 1
            if count[x][y] == 0:
                self.edges -= 1
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            lx = link[x]
            ly = lx[y]
            ly.pop()
            if not ly:
                del lx[y]
            lz = lx[z]
            lz.pop()
            if not lz:
                del lx[z]

    # -- search ----------------------------------------------------------

    def start(self, d: int) -> None:
        for i in range(1, d + 1):
            self.push(0, i, i % d + 1)
        self.nv = d + 1

    def _closes_badly(self, x: int, y: int, z: int) -> Optional[bool]:
        """Check adding link-edge y-z at x. None: illegal; True: closes; False: stays open."""
        cx = self.count[x]
        if cx[y] == 1 and cx[z] == 1:
            end, k = self._other_end(x, y)
            if end == z:
                if k != len(self.link[x]) or k < self.mindeg:
                    return None
                return True
        return False

    def candidates(self):
        """Lowest open vertex, the chosen path end, and the legal third vertices."""
        closed = self.closed
        v = next(i for i in range(self.nv) if not closed[i])
        lv = self.link[v]
        u = min(x for x, t in lv.items() if len(t) == 1)
        x0 = lv[u][0]
        # orient the new face against the existing face on edge vu
        if self.dir[v][u]:
            p, q = u, v
        else:
            p, q = v, u
        out = []
        count, link, maxdeg = self.count, self.link, self.maxdeg
        options = list(range(self.nv))
        if self.nv < self.n:
            options.append(self.nv)
        for w in options:
            if w == v or w == u or w == x0:
                continue
            if w < self.nv:
                if closed[w] or count[v][w] == 2 or count[u][w] == 2:
                    continue
                if count[v][w] == 0 and (len(link[v]) >= maxdeg or len(link[w]) >= maxdeg):
                    continue
                if count[u][w] == 0 and (len(link[u]) >= maxdeg or len(link[w]) >= maxdeg):
                    continue
                if count[v][w] == 0 and count[u][w] == 0 and len(link[w]) + 1 >= maxdeg:
                    continue
                if self._closes_badly(w, v, u) is None:
                    continue
            else:
                if len(link[v]) >= maxdeg or len(link[u]) >= maxdeg:
                    continue
            if self._closes_badly(v, u, w) is None or self._closes_badly(u, v, w) is None:
                continue
            if self.orientable:
                # the new face carries directed edges q->w and w->p
                if self.dir[q][w] or self.dir[w][p]:
                    continue
            out.append((p, q, w))
        return out

    def _edge_ok(self, x: int) -> bool:
        lx = self.link[x]
        if len(lx) < self.mindeg:
            return False
        if not self.irr:
            return True
        nx = lx.keys()
        for y in nx:
            if self.closed[y] and len(nx & self.link[y].keys()) < 3:
                return False
        return True

    def run(self, prefix: Iterable[tuple[int, int, int]] = ()) -> None:
        for face in prefix:
            self._apply(face)
        self._dfs()

    def _apply(self, face):
        newly = self.push(*face)
        if face[2] == self.nv:
            self.nv += 1
        return newly

    def _dfs(self) -> None:
        if len(self.faces) > self.max_faces or self.edges > self.max_edges:
            return
        if all(self.closed[: self.nv]):
            if self.nv == self.n and len(self.faces) == self.max_faces:
                self._leaf()
            return
        for face in self.candidates():
            new_vertex = face[2] == self.nv
            newly = self.push(*face)
            if new_vertex:
                self.nv += 1
            if all(self._edge_ok(x) for x in newly):
                self._dfs()
            if new_vertex:
                self.nv -= 1
            self.pop(newly)

    def _leaf(self) -> None:
        if self.orientable != (self.twists == 0):
            return
        self.leaves += 1
        t = Triangulation.from_faces(self.n, self.faces)
        if self.irr_filter and not is_irreducible(t):
            return
        self.found.add(canonical_code(t))

    def branches(self, depth: int):
        """Face prefixes of the search tree at the given depth below the start."""
        if depth == 0 or all(self.closed[: self.nv]):
            yield []
            return
        for face in self.candidates():
            new_vertex = face[2] == self.nv
            newly = self.push(*face)
            if new_vertex:
                self.nv += 1
            if all(self._edge_ok(x) for x in newly):
                for rest in self.branches(depth - 1):
                    yield [face] + rest
            if new_vertex:
                self.nv -= 1
            self.pop(newly)


def _degree_range(surface: SurfaceId, n: int) -> range:
    edges = 3 * (n - surface.euler_characteristic)
    return range(max(3, math.ceil(2 * edges / n)), n)


def _run_task(task) -> set[CanonicalCode]:
    n, surface, d, irr, prefix = task
    s = _Search(n, surface, d, irr)
    s.start(d)
    s.run(prefix)
    return s.found


def _check(surface: SurfaceId, n: int, long_running: bool) -> None:
    limits = LONG_LIMITS if long_running else LIMITS
    if surface not in limits:
        raise Unsupported(f"enumeration of the {surface.name} is not supported")
    if n < 4:
        raise Unsupported("n must be at least 4")
    if n > limits[surface]:
        hint = "" if long_running else " without the long-running flag"
        raise Unsupported(f"{surface.name} with n={n} exceeds the configured limit{hint}")


def _enumerate(
    surface: SurfaceId,
    n: int,
    irreducible_only: bool,
    jobs: int,
    long_running: bool,
    progress: Optional[Callable[[int, int], None]],
) -> frozenset[CanonicalCode]:
    _check(surface, n, long_running)
    tasks = []
    for d in _degree_range(surface, n):
        s = _Search(n, surface, d, irreducible_only)
        s.start(d)
        for prefix in s.branches(2):
            tasks.append((n, surface, d, irreducible_only, prefix))
    found: set[CanonicalCode] = set()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for i, part in enumerate(pool.map(_run_task, tasks, chunksize=1), 1):
                found |= part
                if progress:
                    progress(i, len(tasks))
    else:
        for i, task in enumerate(tasks, 1):
            found |= _run_task(task)
            if progress:
                progress(i, len(tasks))
    log.debug("%s n=%d: %d classes from %d tasks", surface, n, len(found), len(tasks))
    return frozenset(found)


def enumerate_all(
    surface: SurfaceId,
    n: int,
    *,
    jobs: int = 1,
    long_running: bool = False,
    progress: Optional[Callable[[int, int], None]] = None,
) -> frozenset[CanonicalCode]:
    """Canonical codes of every n-vertex triangulation of ``surface``."""
    return _enumerate(surface, n, False, jobs, long_running, progress)


def enumerate_irreducible(
    surface: SurfaceId,
    n: int,
    *,
    jobs: int = 1,
    long_running: bool = False,
    progress: Optional[Callable[[int, int], None]] = None,
) -> frozenset[CanonicalCode]:
    """Canonical codes of the irreducible n-vertex triangulations of ``surface``."""
    return _enumerate(surface, n, True, jobs, long_running, progress)


def all_splits(t: Triangulation) -> frozenset[CanonicalCode]:
    return frozenset(canonical_code(s) for _, s in splits(t))


def triangulations(codes: Iterable[CanonicalCode]) -> list[Triangulation]:
    """Decode a set of codes into triangulations, in sorted code order."""
    return [decode(c) for c in sorted(codes)]
