"""Completions of the partial structure PS1 on the 9-vertex grid.

The grid is the 4 x 4 lattice ``(col, row)``, ``0 <= col, row <= 3``, glued as
the handle-type pictures: ``(col, 0) ~ (col, 3)`` and ``(0, row) ~ (3, 3 - row)``.
That leaves nine vertices, named after the labels used for PS1.1::

    row 3:  a   x1  x2  a
    row 2:  b   y1  y2  c
    row 1:  c   z1  z2  b
    row 0:  a   x1  x2  a

and nine unit squares ("quads") addressed by their lower-left corner. Each
quad takes one of two diagonals: ``"/"`` joins its lower-left and upper-right
corners, ``"\\"`` the other two. The middle row holds the fixed diagonals;
the outer quads are named A, B, C (top row, left to right) and D, E, F
(bottom row).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Optional

from . import catalog
from .isomorphism import canonical_code
from .moves import contractible_edges
from .triangulation import Triangulation

RISING, FALLING = "/", "\\"
FLIP = {RISING: FALLING, FALLING: RISING}

_NAMES = {3: ("a", "x1", "x2", "a"), 2: ("b", "y1", "y2", "c"), 1: ("c", "z1", "z2", "b"), 0: ("a", "x1", "x2", "a")}
VERTEX_NAMES = ("a", "b", "c", "x1", "x2", "y1", "y2", "z1", "z2")
LABEL = {name: i for i, name in enumerate(VERTEX_NAMES)}

QUADS = {"A": (0, 2), "B": (1, 2), "C": (2, 2), "D": (0, 0), "E": (1, 0), "F": (2, 0)}
LETTERS = "ABCDEF"


def vertex(col: int, row: int) -> str:
    return _NAMES[row][col]


def diagonal_ends(col: int, row: int, diag: str) -> tuple[tuple[int, int], tuple[int, int]]:
    if diag == RISING:
        return (col, row), (col + 1, row + 1)
    return (col, row + 1), (col + 1, row)


def diagonal_edge(col: int, row: int, diag: str) -> frozenset:
    p, q = diagonal_ends(col, row, diag)
    return frozenset((vertex(*p), vertex(*q)))


@dataclass(frozen=True)
class PartialStructure:
    """Diagonals of the nine quads, ``None`` where still undecided.

    ``diagonals[row][col]``; row 1 is the middle row R12.
    """

    diagonals: tuple[tuple[Optional[str], ...], ...]

    @classmethod
    def from_middle(cls, middle: str) -> "PartialStructure":
        return cls(((None,) * 3, tuple(middle), (None,) * 3))

    @property
    def middle(self) -> str:
        return "".join(self.diagonals[1])

    def at(self, col: int, row: int) -> Optional[str]:
        return self.diagonals[row][col]

    def with_quads(self, choices: dict) -> "PartialStructure":
        rows = [list(r) for r in self.diagonals]
        for (col, row), diag in choices.items():
            rows[row][col] = diag
        return PartialStructure(tuple(tuple(r) for r in rows))

    def is_complete(self) -> bool:
        return all(d is not None for r in self.diagonals for d in r)

    def triangulate(self) -> Triangulation:
        if not self.is_complete():
            raise ValueError("every quad needs a diagonal")
        faces = []
        for row in range(3):
            for col in range(3):
                bl, br = vertex(col, row), vertex(col + 1, row)
                tl, tr = vertex(col, row + 1), vertex(col + 1, row + 1)
                if self.at(col, row) == RISING:
                    faces += [(bl, br, tr), (bl, tr, tl)]
                else:
                    faces += [(bl, br, tl), (br, tr, tl)]
        return Triangulation.from_faces(9, [tuple(LABEL[x] for x in f) for f in faces])


PS1_1 = PartialStructure.from_middle(RISING * 3)
PS1_2 = PartialStructure.from_middle(FALLING + RISING + FALLING)


def r12_shift(ps: PartialStructure) -> PartialStructure:
    """Move the left column to the right edge, turned upside down.

    Through the antiparallel gluing this is a self-map of the surface, so the
    result is the same structure seen from a shifted viewpoint.
    """
    rows = []
    for row in range(3):
        old = ps.diagonals
        left = old[2 - row][0]
        rows.append((old[row][1], old[row][2], None if left is None else FLIP[left]))
    return PartialStructure(tuple(rows))


def r12_shift_vertex_map() -> dict[str, str]:
    """Where :func:`r12_shift` sends each grid vertex."""
    out = {}
    for col in range(4):
        for row in range(4):
            new = (col - 1, row) if col >= 1 else (2, 3 - row)
            out[vertex(col, row)] = vertex(*new)
    return out


def middle_assignments() -> list[str]:
    return ["".join(p) for p in product(RISING + FALLING, repeat=3)]


def shift_classes() -> list[list[str]]:
    """Orbits of the eight middle-row assignments under repeated shifts."""
    seen = set()
    classes = []
    for m in middle_assignments():
        if m in seen:
            continue
        orbit = []
        ps = PartialStructure.from_middle(m)
        while ps.middle not in orbit:
            orbit.append(ps.middle)
            ps = r12_shift(ps)
        seen.update(orbit)
        classes.append(orbit)
    return classes


# --- PS1.1 -------------------------------------------------------------------

PS11_FORCED_EDGES = (("b", "y1"), ("y1", "x2"), ("x2", "b"), ("z2", "b"), ("b", "x1"), ("x1", "z2"))
# y2a is a diagonal of C exactly when az1 is a diagonal of D
PS11_COUPLED = (("C", frozenset(("y2", "a"))), ("D", frozenset(("a", "z1"))))


def _forced_ps11() -> PartialStructure:
    forced = {frozenset(e) for e in PS11_FORCED_EDGES}
    choices = {}
    for letter, (col, row) in QUADS.items():
        for diag in (RISING, FALLING):
            if diagonal_edge(col, row, diag) in forced:
                choices[(col, row)] = diag
    return PS1_1.with_quads(choices)


def ps11_choices() -> list[tuple[dict, bool, PartialStructure]]:
    """All four diagonal choices for C and D after the forced edges.

    Returns ``(choice, coupled, structure)`` where ``coupled`` says whether the
    choice respects the y2a / az1 coupling.
    """
    base = _forced_ps11()
    out = []
    for dc, dd in product(RISING + FALLING, repeat=2):
        choice = {"C": dc, "D": dd}
        has = [diagonal_edge(*QUADS[q], choice[q]) == e for q, e in PS11_COUPLED]
        ps = base.with_quads({QUADS["C"]: dc, QUADS["D"]: dd})
        out.append((choice, has[0] == has[1], ps))
    return out


def complete_ps11() -> dict:
    """Classes of the coupled completions of PS1.1, keyed by canonical code."""
    found = {}
    for _, coupled, ps in ps11_choices():
        if coupled:
            t = ps.triangulate()
            found.setdefault(canonical_code(t), t)
    return found


# --- PS1.2 colourings ----------------------------------------------------------

# Colour 1: the quad's diagonal shares a vertex with the fixed middle diagonal
# beside it; 0: the two are parallel. Read off the PS1.2 picture.
COLOR_TO_DIAGONAL = {
    "A": {1: RISING, 0: FALLING},
    "B": {1: FALLING, 0: RISING},
    "C": {1: RISING, 0: FALLING},
    "D": {1: RISING, 0: FALLING},
    "E": {1: FALLING, 0: RISING},
    "F": {1: RISING, 0: FALLING},
}


def _check_coloring(c: str) -> str:
    if len(c) != 6 or set(c) - {"0", "1"}:
        raise ValueError(f"a coloring is six 0/1 characters in the order ABCDEF, got {c!r}")
    return c


def coloring_structure(c: str) -> PartialStructure:
    _check_coloring(c)
    choices = {QUADS[x]: COLOR_TO_DIAGONAL[x][int(bit)] for x, bit in zip(LETTERS, c)}
    return PS1_2.with_quads(choices)


def coloring_to_triangulation(c: str) -> Triangulation:
    return coloring_structure(c).triangulate()


def all_colorings() -> list[str]:
    return ["".join(p) for p in product("01", repeat=6)]


GROUP_CYCLES = ("()", "(ACE)(BDF)", "(AEC)(BFD)", "(AF)(BE)(CD)", "(AB)(CF)(DE)", "(AD)(BC)(EF)")


def parse_cycles(text: str) -> dict[str, str]:
    perm = {x: x for x in LETTERS}
    for cyc in re.findall(r"\(([A-F]*)\)", text):
        for i, x in enumerate(cyc):
            perm[x] = cyc[(i + 1) % len(cyc)]
    return perm


def group() -> list[dict[str, str]]:
    return [parse_cycles(g) for g in GROUP_CYCLES]


def act(g: dict[str, str], c: str) -> str:
    """Move the colour of every quad X to quad g(X)."""
    out = dict.fromkeys(LETTERS)
    for x, bit in zip(LETTERS, c):
        out[g[x]] = bit
    return "".join(out[x] for x in LETTERS)


def orbits() -> list[list[str]]:
    """Orbits of all 64 colourings, each sorted, listed by their least member."""
    g = group()
    seen = set()
    out = []
    for c in all_colorings():
        if c in seen:
            continue
        orbit = sorted({act(h, c) for h in g})
        seen.update(orbit)
        out.append(orbit)
    return out


def representatives() -> list[str]:
    return [o[0] for o in orbits()]


def burnside_count() -> float:
    g = group()
    fixed = 0
    for h in g:
        cycles = 0
        todo = set(LETTERS)
        while todo:
            x = todo.pop()
            cycles += 1
            y = h[x]
            while y != x:
                todo.discard(y)
                y = h[y]
        fixed += 2**cycles
    return fixed / len(g)


@dataclass(frozen=True)
class ClassOutcome:
    equivalent_to: Optional[str] = None
    contractible_edges: int = 0

    @property
    def irreducible(self) -> bool:
        return self.contractible_edges == 0

    def __str__(self) -> str:
        if self.irreducible:
            return self.equivalent_to or "irreducible, not in catalog"
        k = self.contractible_edges
        return "has a contractible edge" if k == 1 else f"has {k} contractible edges"


def classify(t: Triangulation) -> ClassOutcome:
    k = len(contractible_edges(t))
    if k:
        return ClassOutcome(None, k)
    return ClassOutcome(catalog.identify(t), 0)


# Colourings in the order of the published table
TABLE1_ROWS = (
    "000000", "000001", "000011", "000101", "000110", "001001", "111000", "001101",
    "101010", "100101", "101101", "111001", "111010", "110011", "110111", "111111",
)


def table1() -> dict[str, ClassOutcome]:
    return {c: classify(coloring_to_triangulation(c)) for c in TABLE1_ROWS}


def classify_all() -> dict[str, ClassOutcome]:
    return {c: classify(coloring_to_triangulation(c)) for c in all_colorings()}
