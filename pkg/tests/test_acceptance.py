"""Acceptance criteria, one test per criterion.

Each test records a single PASS/FAIL line (printed in the terminal summary)
before asserting, so a failure still leaves its line in the report.
"""
import random
import time
from itertools import combinations

import pytest

from posetsat.chains import disjoint_chains, lower_lantern, upper_lantern
from posetsat.construction import build_saturated_family, coefficient
from posetsat.errors import CertificateInvalid, DefectError
from posetsat.kst import find_induced_kst
from posetsat.oracle import enumerate_saturated, exact_sat_star
from posetsat.poset import antichain, complete_bipartite, find_induced_copy
from posetsat.sets import Family, from_elements, interval, to_elements
from posetsat.verify import check_layer_bounds, check_saturated, legs_certificate, witness_for_missing

GRID = [(s, t, n) for s, t in [(2, 2), (3, 2)] for n in range(2 * s + t - 1, 12)]


def test_criterion_1_saturated_on_grid(record):
    worst, bad = 0.0, []
    for s, t, n in GRID:
        t0 = time.perf_counter()
        con = build_saturated_family(n, s, t)
        ok = check_saturated(con.family, s, t).saturated
        dt = time.perf_counter() - t0
        worst = max(worst, dt)
        if not ok or dt >= 60:
            bad.append((s, t, n, ok, round(dt, 2)))
    record(1, not bad, f"{len(GRID)} instances saturated, slowest {worst:.2f}s (< 60s)" if not bad else f"bad {bad}")
    assert not bad


def test_criterion_2_size_bound(record):
    bad = []
    f5 = {}
    for s, t, n in GRID:
        con = build_saturated_family(n, s, t)
        f5.setdefault((s, t), set()).add(con.f5_size)
        bound = coefficient(s, t) * n + con.f5_size
        if con.coefficient != coefficient(s, t) or len(con.family) > bound:
            bad.append((s, t, n, len(con.family), bound))
    constant = all(len(v) == 1 for v in f5.values())
    ok = not bad and constant
    sizes = {k: sorted(v) for k, v in f5.items()}
    record(2, ok, f"|F| <= coefficient*n + |F5| on grid; |F5| per (s,t) = {sizes}")
    assert ok, (bad, sizes)


def test_criterion_3_layer_bounds(record):
    worst, bad = 0.0, []
    for s, t, n in GRID:
        t0 = time.perf_counter()
        con = build_saturated_family(n, s, t)
        lb = check_layer_bounds(con.parts, s, t)
        fprime = Family.of(n, (a for p in con.parts[:4] for a in p))
        free = find_induced_kst(fprime, s, t) is None
        dt = time.perf_counter() - t0
        worst = max(worst, dt)
        if not (lb.ok and free) or dt >= 30:
            bad.append((s, t, n, lb.ok, free, round(dt, 2)))
    record(3, not bad, f"layer bounds hold and F' is free on grid, slowest {worst:.2f}s (< 30s)")
    assert not bad, bad


def test_criterion_4_witness_consistency(record):
    checked, defects, bad = 0, 0, []
    for n, s, t in [(7, 2, 2), (8, 3, 2)]:
        con = build_saturated_family(n, s, t)
        p = complete_bipartite(s, t)
        for a in con.family.missing():
            checked += 1
            try:
                w = witness_for_missing(a, con)
            except DefectError:
                defects += 1
                continue
            sub = Family.of(n, w.sets)
            generic = find_induced_copy(sub, p)
            if not (w.is_valid(s, t) and a in w.sets and len(sub) == s + t and generic is not None
                    and set(w.sets) - {a} <= set(con.family.members)):
                bad.append((n, s, t, a))
    ok = defects == 0 and not bad
    record(4, ok, f"{checked} missing sets, {defects} defect errors, {len(bad)} mismatches")
    assert ok


def test_criterion_5_certificates_and_exact_values(record):
    t0 = time.perf_counter()
    posets = {"antichain-2": antichain(2), "K21": complete_bipartite(2, 1), "K22": complete_bipartite(2, 2)}
    problems, certified = [], 0
    for name, p in posets.items():
        for n in range(1, 5):
            for fam in enumerate_saturated(n, p, 2**n):
                try:
                    cert = legs_certificate(fam, p)
                except CertificateInvalid as e:
                    problems.append((name, n, str(fam), str(e)))
                    continue
                certified += 1
                if not cert.valid or len(fam) < n + 1:
                    problems.append((name, n, str(fam)))
            v = exact_sat_star(n, p)
            if not v.exact or v.value < n + 1:
                problems.append((name, n, "exact", v.value))
            if name != "K22" and v.value != n + 1:
                problems.append((name, n, "value", v.value))
    for n in range(1, 5):
        if exact_sat_star(n, complete_bipartite(1, 1)).value != 1:
            problems.append(("K11", n))
    dt = time.perf_counter() - t0
    ok = not problems and dt < 300
    record(5, ok, f"{certified} certificates valid; antichain-2, K21 = n+1; K11 = 1; {dt:.1f}s (< 300s)")
    assert ok, problems


def test_criterion_6_chain_properties(record):
    t0 = time.perf_counter()
    rng = random.Random(20261016)
    bad = 0
    for _ in range(100):
        n = rng.randint(1, 16)
        B = rng.getrandbits(n)
        A = B & rng.getrandbits(n)
        order = to_elements(B & ~A)
        rng.shuffle(order)
        chains = disjoint_chains(A, B, order)
        if len(chains) != max(len(order), 1):
            bad += 1
        if not all(c.is_complete() for c in chains):
            bad += 1
        if any(set(x.internal) & set(y.internal) for x, y in combinations(chains, 2)):
            bad += 1
    lanterns = 0
    for s, t, n in GRID:
        m = s + t - 1
        for bits in combinations(range(1, m + 1), t):
            lan = upper_lantern(from_elements(bits), s, t, n)
            lanterns += 1
            bad += lan.last_increment != interval(s + t + 1, 2 * s + t - 1)
        for bits in combinations(range(1, m + 1), t - 1):
            lan = lower_lantern(from_elements(bits) | 1 << (s + t - 1), s, t, n)
            lanterns += 1
            bad += lan.first_increment != interval(s + t + 1, s + 2 * t - 1)
    dt = time.perf_counter() - t0
    ok = bad == 0 and dt < 5
    record(6, ok, f"100 chain bundles and {lanterns} lanterns checked in {dt:.2f}s (< 5s)")
    assert ok


def test_criterion_7_duality(record):
    rng = random.Random(7)
    disagree = 0
    for _ in range(200):
        n = rng.randint(2, 10)
        s, t = rng.randint(1, 3), rng.randint(1, 3)
        k = rng.randint(0, min(24, 1 << n))
        fam = Family.of(n, rng.sample(range(1 << n), k))
        here = find_induced_kst(fam, s, t) is not None
        there = find_induced_kst(fam.complemented(), t, s) is not None
        disagree += here != there
    record(7, disagree == 0, f"200 random families, {disagree} disagreements")
    assert disagree == 0


@pytest.mark.slow
def test_criterion_8_detector_equivalence(record):
    t0 = time.perf_counter()
    checked, disagree = 0, 0
    pairs = [(1, 1), (2, 1), (2, 2)]
    posets = {st: complete_bipartite(*st) for st in pairs}
    for n in range(1, 5):
        universe = range(1 << n)
        for k in range(0, min(8, 1 << n) + 1):
            for sets in combinations(universe, k):
                fam = Family.of(n, sets)
                for (s, t), p in posets.items():
                    checked += 1
                    a = find_induced_kst(fam, s, t) is not None
                    b = find_induced_copy(fam, p) is not None
                    disagree += a != b
    dt = time.perf_counter() - t0
    ok = disagree == 0 and dt < 600
    record(8, ok, f"{checked} (family, poset) pairs, {disagree} disagreements, {dt:.1f}s (< 600s)")
    assert ok
