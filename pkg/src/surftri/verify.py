"""End-to-end reproduction of the Klein bottle classification.

:func:`verify_paper` yields one :class:`~surftri.catalog.Check` per claim, in a
fixed order. A failing or crashing check never stops the ones after it.
"""

from __future__ import annotations

import logging
from typing import Callable, Iterator, Optional

from . import catalog, ps_enum
from .catalog import Check
from .generator import all_splits, enumerate_all, enumerate_irreducible, triangulations
from .isomorphism import canonical_code
from .triangulation import KLEIN_BOTTLE

log = logging.getLogger(__name__)

# Outcomes of the sixteen listed colourings: a catalog name, or the number of
# contractible edges of a reducible completion.
TABLE1_EXPECTED = {
    "000000": "Kh14",
    "000001": 1,
    "000011": "Kh15",
    "000101": 1,
    "000110": "Kh24",
    "001001": 2,
    "111000": "Kh19",
    "001101": 1,
    "101010": "Kh23",
    "100101": "Kh22",
    "101101": "Kh24",
    "111001": "Kh20",
    "111010": "Kh21",
    "110011": "Kh17",
    "110111": "Kh18",
    "111111": "Kh16",
}

IRREDUCIBLE_BY_SIZE = {
    8: {f"Kh{i}" for i in range(1, 7)},
    9: {f"Kh{i}" for i in range(7, 25)} | {"Kc1"},
    10: {"Kh25", "Kc2"},
    11: {"Kc3", "Kc4"},
}


def _names(codes) -> dict:
    by_code = {e.code: e.name for e in catalog.all_entries(catalog.KLEIN_NAMES)}
    return {c: by_code.get(c) for c in codes}


def _fmt(names) -> str:
    return ",".join(sorted(names, key=lambda s: (s[:2], int(s[2:])))) or "-"


def table1_checks() -> list[Check]:
    got = ps_enum.table1()
    out = []
    for c, want in TABLE1_EXPECTED.items():
        o = got[c]
        ok = o.equivalent_to == want if isinstance(want, str) else o.contractible_edges == want
        out.append(Check(f"ps1.table1.{c}", ok, f"outcome={str(o).replace(' ', '_')}"))
    orbits = ps_enum.orbits()
    burnside = ps_enum.burnside_count()
    out.append(Check("ps1.orbits", len(orbits) == 16 and burnside == 16, f"orbits={len(orbits)} burnside={burnside:g}"))
    covered = {o[0] for o in orbits for c in TABLE1_EXPECTED if c in o}
    out.append(Check("ps1.table1.distinct_orbits", len(covered) == 16, f"orbits_hit={len(covered)}"))
    return out


def ps11_checks() -> list[Check]:
    names = {catalog.identify(t) for t in ps_enum.complete_ps11().values()}
    return [Check("ps1.1.completion", names == {"Kh14", "Kh15"}, f"classes={len(names)} names={_fmt(n for n in names if n)}")]


def crosscap_checks() -> list[Check]:
    mp = catalog.projective_irreducibles()
    stored = {catalog.get(n).code for n in catalog.PROJECTIVE_NAMES}
    out = [
        Check(
            "crosscap.projective_irreducibles",
            len(mp) == 2 and {canonical_code(t) for t in mp} == stored,
            f"classes={len(mp)} n<=7",
        )
    ]
    found = catalog.enumerate_crosscap_irreducibles()
    names = set(_names(found).values())
    ok = len(found) == 4 and names == {"Kc1", "Kc2", "Kc3", "Kc4"}
    out.append(Check("crosscap.rederive", ok, f"classes={len(found)} names={_fmt(n for n in names if n)}"))
    return out


def irreducible_check(n: int, jobs: int, long_running: bool, progress=None) -> Check:
    codes = enumerate_irreducible(KLEIN_BOTTLE, n, jobs=jobs, long_running=long_running, progress=progress)
    names = {x for x in _names(codes).values() if x}
    want = IRREDUCIBLE_BY_SIZE[n]
    ok = len(codes) == len(want) and names == want
    return Check(f"generator.irreducible.n={n}", ok, f"irreducible n={n} count={len(codes)} names={_fmt(names)}")


def closure_check(n: int, jobs: int, long_running: bool = False) -> Check:
    """Triangulations on n+1 vertices are exactly splits of n plus irreducibles."""
    small = enumerate_all(KLEIN_BOTTLE, n, jobs=jobs, long_running=long_running)
    big = enumerate_all(KLEIN_BOTTLE, n + 1, jobs=jobs, long_running=long_running)
    irr = enumerate_irreducible(KLEIN_BOTTLE, n + 1, jobs=jobs, long_running=long_running)
    split = set()
    for t in triangulations(small):
        split |= all_splits(t)
    ok = big == split | irr
    return Check(
        f"generator.closure.{n}->{n + 1}",
        ok,
        f"all_{n}={len(small)} all_{n + 1}={len(big)} splits={len(split)} irreducible={len(irr)}",
    )


def _guard(name: str, fn: Callable[[], list[Check]]) -> list[Check]:
    try:
        return fn()
    except Exception as exc:  # a crash is a failed check, not an aborted run
        detail = f"{type(exc).__name__}: {exc}".replace("\n", " ")
        log.exception("check %s crashed", name)
        return [Check(name, False, detail)]


def verify_paper(
    level: str = "fast",
    jobs: int = 1,
    progress: Optional[Callable[[str, int, int], None]] = None,
) -> Iterator[Check]:
    if level not in ("fast", "full"):
        raise ValueError(f"level must be 'fast' or 'full', not {level!r}")
    full = level == "full"

    def prog(label):
        return None if progress is None else (lambda i, k: progress(label, i, k))

    steps = [
        ("catalog", catalog.verify_catalog),
        ("ps1.table1", table1_checks),
        ("ps1.1", ps11_checks),
        ("crosscap", crosscap_checks),
        ("generator.irreducible.n=8", lambda: [irreducible_check(8, jobs, False, prog("n=8"))]),
        ("generator.irreducible.n=9", lambda: [irreducible_check(9, jobs, False, prog("n=9"))]),
        ("generator.closure.8->9", lambda: [closure_check(8, jobs)]),
    ]
    if full:
        steps += [
            ("generator.irreducible.n=10", lambda: [irreducible_check(10, jobs, True, prog("n=10"))]),
            ("generator.irreducible.n=11", lambda: [irreducible_check(11, jobs, True, prog("n=11"))]),
        ]
    for name, fn in steps:
        yield from _guard(name, fn)

