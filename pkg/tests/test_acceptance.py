"""Acceptance criteria for the Klein bottle classification.

Each test prints one line ``ACCEPTANCE <k> PASS|FAIL <detail>`` and then asserts
the same condition, so a red criterion is visible both in the report and in
the pytest summary. Time limits are the ones the criteria state.
"""

import random
import time
from itertools import combinations

import pytest

from oracles import random_relabel, random_split
from surftri import catalog, ps_enum
from surftri.generator import all_splits, enumerate_all, enumerate_irreducible, triangulations
from surftri.isomorphism import canonical_code, degree_adjacency_fingerprint, equivalent, graph_isomorphic
from surftri.moves import contract, contractible_by_reference, is_contractible, is_irreducible
from surftri.triangulation import (
    KLEIN_BOTTLE,
    PROJECTIVE_PLANE,
    SPHERE,
    degree_sequence,
    octahedron,
    surface_of,
    tetrahedron,
)
from surftri.verify import TABLE1_EXPECTED

LIMIT_CATALOG = 5.0
LIMIT_PAIRWISE = 10.0
LIMIT_TABLE1 = 10.0
LIMIT_PS11 = 1.0
LIMIT_CROSSCAP = 120.0
LIMIT_FAST_COUNTS = 30 * 60.0

# Criterion 3 as stated asks for four single-contractible-edge rows; the
# sixteen listed rows contain three (12 named + 3 + 1 = 16).
EXPECTED_SINGLE_CONTRACTIBLE = 4


@pytest.fixture
def report(capsys):
    def emit(k, ok, detail, elapsed=None, limit=None):
        timing = "" if elapsed is None else f" time={elapsed:.2f}s" + ("" if limit is None else f" limit={limit:g}s")
        with capsys.disabled():
            status = "SKIP" if ok is None else ("PASS" if ok else "FAIL")
            print(f"\nACCEPTANCE {k} {status} {detail}{timing}", flush=True)
        return ok

    return emit


def names_of(codes):
    by_code = {e.code: e.name for e in catalog.all_entries()}
    return {by_code.get(c) for c in codes}


def test_criterion_1_catalog_integrity(report):
    catalog._cached.cache_clear()
    start = time.perf_counter()
    problems = []
    for name in catalog.KLEIN_NAMES:
        e = catalog.get(name)
        t = e.triangulation
        s = surface_of(t)
        if s != KLEIN_BOTTLE or t.euler_characteristic != 0 or s.orientable:
            problems.append(f"{name}:surface")
        if not is_irreducible(t):
            problems.append(f"{name}:reducible")
        if degree_sequence(t) != e.expected_degree_sequence:
            problems.append(f"{name}:degrees")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < LIMIT_CATALOG
    report(1, ok, f"entries=29 problems={','.join(problems) or 'none'}", elapsed, LIMIT_CATALOG)
    assert ok, problems


def test_criterion_2_pairwise(report):
    start = time.perf_counter()
    entries = {e.name: e.triangulation for e in catalog.klein_entries()}
    codes = {n: canonical_code(t) for n, t in entries.items()}
    pairs = list(combinations(entries, 2))
    clashes = [p for p in pairs if codes[p[0]] == codes[p[1]]]
    dist = (
        degree_adjacency_fingerprint(entries["Kh10"], 6) == (2, 1)
        and degree_adjacency_fingerprint(entries["Kh22"], 6) == (2, 0)
        and degree_adjacency_fingerprint(entries["Kh15"], 5) == (2, 1)
        and degree_adjacency_fingerprint(entries["Kh24"], 5) == (2, 0)
        and not graph_isomorphic(entries["Kh10"], entries["Kh22"])
        and not graph_isomorphic(entries["Kh15"], entries["Kh24"])
    )
    elapsed = time.perf_counter() - start
    ok = len(pairs) == 406 and not clashes and dist and elapsed < LIMIT_PAIRWISE
    report(2, ok, f"pairs={len(pairs)} equivalent_pairs={len(clashes)} distinguishers={dist}", elapsed, LIMIT_PAIRWISE)
    assert ok


def test_criterion_3_table1(report):
    start = time.perf_counter()
    got = ps_enum.table1()
    wrong = []
    for c, want in TABLE1_EXPECTED.items():
        o = got[c]
        if isinstance(want, str) and o.equivalent_to != want:
            wrong.append(c)
        if isinstance(want, int) and o.contractible_edges != want:
            wrong.append(c)
    named = {o.equivalent_to for o in got.values() if o.irreducible}
    single = sum(1 for o in got.values() if o.contractible_edges == 1)
    orbits = len(ps_enum.orbits())
    burnside = ps_enum.burnside_count()
    elapsed = time.perf_counter() - start
    ok = (
        not wrong
        and named == {f"Kh{i}" for i in range(14, 25)}
        and single == EXPECTED_SINGLE_CONTRACTIBLE
        and got["001001"].contractible_edges == 2
        and got["000110"].equivalent_to == got["101101"].equivalent_to == "Kh24"
        and orbits == 16
        and burnside == 96 / 6
        and elapsed < LIMIT_TABLE1
    )
    report(
        3,
        ok,
        f"rows=16 mismatches={len(wrong)} named={len(named)} single_contractible={single} expected_single={EXPECTED_SINGLE_CONTRACTIBLE} orbits={orbits} burnside={burnside:g}",
        elapsed,
        LIMIT_TABLE1,
    )
    assert ok, wrong


def test_criterion_4_ps11(report):
    start = time.perf_counter()
    found = ps_enum.complete_ps11()
    names = {catalog.identify(t) for t in found.values()}
    elapsed = time.perf_counter() - start
    ok = len(found) == 2 and names == {"Kh14", "Kh15"} and elapsed < LIMIT_PS11
    report(4, ok, f"classes={len(found)} names={','.join(sorted(n or '?' for n in names))}", elapsed, LIMIT_PS11)
    assert ok


def test_criterion_5_crosscap(report):
    start = time.perf_counter()
    mp = set(enumerate_irreducible(PROJECTIVE_PLANE, 6)) | set(enumerate_irreducible(PROJECTIVE_PLANE, 7))
    summands = dict(zip(catalog.PROJECTIVE_NAMES, triangulations(mp)))
    mp_ok = len(mp) == 2 and names_of(mp) == {"MP1", "MP2"}
    found = catalog.enumerate_crosscap_irreducibles(summands)
    names = names_of(found)
    elapsed = time.perf_counter() - start
    ok = mp_ok and len(found) == 4 and names == {"Kc1", "Kc2", "Kc3", "Kc4"} and elapsed < LIMIT_CROSSCAP
    report(
        5,
        ok,
        f"projective_irreducibles={len(mp)} crosscap_classes={len(found)} names={','.join(sorted(n or '?' for n in names))}",
        elapsed,
        LIMIT_CROSSCAP,
    )
    assert ok


def test_criterion_6_fast_counts(report):
    start = time.perf_counter()
    irr8 = enumerate_irreducible(KLEIN_BOTTLE, 8)
    irr9 = enumerate_irreducible(KLEIN_BOTTLE, 9)
    irr9_jobs = enumerate_irreducible(KLEIN_BOTTLE, 9, jobs=2)
    all8 = enumerate_all(KLEIN_BOTTLE, 8)
    all9 = enumerate_all(KLEIN_BOTTLE, 9)
    split = set()
    for t in triangulations(all8):
        split |= all_splits(t)
    closure = all9 == split | irr9
    elapsed = time.perf_counter() - start
    ok = (
        names_of(irr8) == {f"Kh{i}" for i in range(1, 7)}
        and len(irr8) == 6
        and names_of(irr9) == {f"Kh{i}" for i in range(7, 25)} | {"Kc1"}
        and len(irr9) == 19
        and irr9_jobs == irr9
        and closure
        and elapsed < LIMIT_FAST_COUNTS
    )
    report(
        6,
        ok,
        f"irreducible_8={len(irr8)} irreducible_9={len(irr9)} all_9={len(all9)} splits={len(split)} closure={closure} jobs_independent={irr9_jobs == irr9}",
        elapsed,
        LIMIT_FAST_COUNTS,
    )
    assert ok


def test_criterion_7_full_counts(report, request):
    if not request.config.getoption("--full"):
        report(7, None, "long-running tier; rerun with --full")
        pytest.skip("long-running tier; pass --full")
    start = time.perf_counter()

    def progress(label):
        def cb(i, k):
            if i % 50 == 0 or i == k:
                print(f"progress {label} {i}/{k}", flush=True)

        return cb

    irr10 = enumerate_irreducible(KLEIN_BOTTLE, 10, long_running=True, jobs=4, progress=progress("n=10"))
    irr11 = enumerate_irreducible(KLEIN_BOTTLE, 11, long_running=True, jobs=4, progress=progress("n=11"))
    elapsed = time.perf_counter() - start
    n10, n11 = names_of(irr10), names_of(irr11)
    ok = len(irr10) == 2 and n10 == {"Kh25", "Kc2"} and len(irr11) == 2 and n11 == {"Kc3", "Kc4"}
    report(7, ok, f"irreducible n=10 count={len(irr10)} irreducible n=11 count={len(irr11)} total=29", elapsed)
    assert ok


def test_criterion_8_properties(report):
    start = time.perf_counter()
    # contractibility fast path against contract-and-validate
    sizes = [(SPHERE, n) for n in range(4, 9)] + [(PROJECTIVE_PLANE, n) for n in (6, 7, 8)] + [(KLEIN_BOTTLE, 8)]
    edges = mismatches = 0
    for s, n in sizes:
        for t in triangulations(enumerate_all(s, n)):
            for e in t.edges:
                edges += 1
                mismatches += is_contractible(t, e) != contractible_by_reference(t, e)
    # canonical code under 100 random relabelings per entry
    rng = random.Random(8)
    relabel_bad = 0
    for e in catalog.all_entries():
        code = e.code
        relabel_bad += sum(canonical_code(random_relabel(e.triangulation, rng)) != code for _ in range(100))
    # split then contract, 1000 instances
    pool = [e.triangulation for e in catalog.all_entries()] + [octahedron(), tetrahedron()]
    round_trip_bad = 0
    for _ in range(1000):
        t = rng.choice(pool)
        s, (v, _, _) = random_split(t, rng)
        round_trip_bad += not equivalent(contract(s, (v, s.vertex_count - 1)), t)
    k4 = is_irreducible(tetrahedron())
    elapsed = time.perf_counter() - start
    ok = edges == 915 and not mismatches and not relabel_bad and not round_trip_bad and k4
    report(
        8,
        ok,
        f"edges_checked={edges} oracle_mismatches={mismatches} relabel_failures={relabel_bad} round_trip_failures={round_trip_bad} tetrahedron_irreducible={k4}",
        elapsed,
    )
    assert ok
