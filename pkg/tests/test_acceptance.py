"""Acceptance criteria, one test each.

Every test records a one-line verdict that is printed at the end of the
session.  Criteria 4 and 7 fail on real counterexamples; they run at full
strength and are marked as strict expected failures so the suite stays
green while the failure stays visible.
"""

import os
import random
import resource
import time
from pathlib import Path

import pytest

from chordality.generators import gen_2k2_subclass, gen_sck
from chordality.graph import is_acyclic
from chordality.oracle import oracle_solve
from chordality.problems import ProblemKind, is_feasible
from chordality.sck_solvers import (
    solve_connected_dominating_set,
    solve_dominating_set,
    solve_ect,
    solve_fvs,
    solve_mis,
    solve_oct,
    solve_sck,
    solve_vertex_cover,
)
from chordality.separators import SubclassTag, classify_subclass, find_minimal_separator, verify_structure_theorem
from chordality.twok2 import connected_ds_2k2, solve_2k2
from chordality.vco import Rejection, compute_vco, validate_vco

from conftest import ACCEPTANCE, cycle_graph

P = ProblemKind
T = SubclassTag
SUBCLASSES = [T.C3C4_FREE, T.C3C5_FREE, T.C4C5_FREE, T.C3_FREE, T.C4_FREE]
MIN_N = {T.C3C4_FREE: 1, T.C3C5_FREE: 4, T.C4C5_FREE: 3, T.C3_FREE: 6, T.C4_FREE: 6, T.GENERAL_2K2_FREE: 7}
DUMP_DIR = Path(os.environ.get("CHORDALITY_DUMP_DIR", Path(__file__).resolve().parent.parent / "acceptance_dumps"))
KNOWN_FALSE = pytest.mark.xfail(strict=True, reason="claim refuted by concrete counterexamples")


def report(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})"
    ACCEPTANCE[n] = line
    print(line)
    return ok


def dump(name, g, note):
    DUMP_DIR.mkdir(parents=True, exist_ok=True)
    path = DUMP_DIR / f"{name}.graph"
    path.write_text(g.to_text(comment=note))
    return path


def sck_instances(k, count, max_n, seed0):
    for s in range(seed0, seed0 + count):
        rng = random.Random(s)
        yield s, gen_sck(k, rng.randint(1, 10), s, max_n=max_n).graph


def random_terminals(rng, n):
    return rng.sample(range(n), min(n, rng.randint(2, 5)))


def test_1_sck_oracle_agreement():
    t0 = time.time()
    bad, runs = [], 0
    for k in (5, 6, 7, 8):
        for s, g in sck_instances(k, 200, 18, 1000 * k):
            for p in (P.MIS, P.VERTEX_COVER, P.DOMINATING_SET, P.OCT, P.ECT, P.FVS):
                sol = solve_sck(p, g, k)
                runs += 1
                if not is_feasible(p, g, sol.vertices) or sol.value != oracle_solve(p, g).value:
                    bad.append((k, s, p.value))
    ok = report(1, not bad and time.time() - t0 < 300, f"{runs} solves, {len(bad)} mismatches, {time.time() - t0:.1f}s")
    assert ok, bad[:5]


def test_2_sck_steiner():
    t0 = time.time()
    bad, runs = [], 0
    for k in (5, 6, 7, 8):
        for s, g in sck_instances(k, 30, 14, 50000 + 1000 * k):
            ts = random_terminals(random.Random(s), g.n)
            sol = solve_sck(P.STEINER_TREE, g, k, terminals=ts)
            runs += 1
            if not is_feasible(P.STEINER_TREE, g, sol.vertices, ts) or sol.value != oracle_solve(
                P.STEINER_TREE, g, terminals=ts
            ).value:
                bad.append((k, s, ts))
    ok = report(2, not bad and time.time() - t0 < 120, f"{runs} instances, {len(bad)} mismatches")
    assert ok, bad[:5]


def test_3_closed_forms():
    bad = []
    for k in range(5, 13):
        g = cycle_graph(k)
        vco = compute_vco(g, k)
        if solve_mis(g, vco).value != k // 2:
            bad.append(("MIS", k))
        if solve_dominating_set(g, vco).value != -(-k // 3):
            bad.append(("DS", k))
    checked = 0
    for k in (5, 6, 7, 8):
        for s, g in sck_instances(k, 50, 40, 70000 + 1000 * k):
            vco = compute_vco(g, k)
            zero = solve_oct(g, vco) if k % 2 == 0 else solve_ect(g, vco)
            if zero.value != 0:
                bad.append(("transversal", k, s))
            if solve_vertex_cover(g, vco).value + solve_mis(g, vco).value != g.n:
                bad.append(("VC+MIS", k, s))
            checked += 1
    ok = report(3, not bad, f"cycles 5..12 and {checked} instances, {len(bad)} failures")
    assert ok, bad[:5]


@KNOWN_FALSE
def test_4_structure_fuzz():
    rng = random.Random(4)
    general_bad, general = {}, 0
    tags = SUBCLASSES + [T.GENERAL_2K2_FREE]
    for i in range(600):
        tag = tags[i % len(tags)]
        g = gen_2k2_subclass(tag, rng.randint(max(MIN_N[tag], 2), 16), 40000 + i)
        d = find_minimal_separator(g, rng=rng)
        if d is None:
            continue
        general += 1
        for v in verify_structure_theorem(g, d, T.GENERAL_2K2_FREE):
            if v.clause not in general_bad:
                general_bad[v.clause] = dump(f"structure-general-{v.clause}-{i}", g, f"S {d.describe()['S']}")
    sub_bad, per = {}, {}
    for tag in tags:
        per[tag] = 0
        for i in range(220):
            g = gen_2k2_subclass(tag, rng.randint(MIN_N[tag], 16), 41000 + i)
            d = find_minimal_separator(g, rng=rng)
            if d is None:
                continue
            per[tag] += 1
            for clause in {v.clause for v in verify_structure_theorem(g, d, tag)}:
                key = (tag.value, clause)
                sub_bad[key] = sub_bad.get(key, 0) + 1
    enough = general >= 500 and all(c >= 200 for c in per.values())
    per_class = ", ".join(f"{t}/{c}: {n} graphs" for (t, c), n in sorted(sub_bad.items())) or "none"
    detail = f"{general} general decompositions, violated {sorted(general_bad) or 'none'}; per class {per_class}"
    ok = report(4, enough and not general_bad and not sub_bad, detail)
    assert ok


def test_5_c3c4_free_is_tree_or_c5():
    rng = random.Random(5)
    bad = []
    for i in range(1000):
        g = gen_2k2_subclass(T.C3C4_FREE, rng.randint(1, 16), 50000 + i)
        if classify_subclass(g) is not T.C3C4_FREE or not (is_acyclic(g) or (g.n == 5 and g.m == 5)):
            bad.append(i)
    ok = report(5, not bad, f"1000 instances, {len(bad)} failures")
    assert ok


TWOK2_CASES = [
    ("fvs_c3c5", P.FVS, T.C3C5_FREE),
    ("ds_c3c5", P.DOMINATING_SET, T.C3C5_FREE),
    ("steiner_c3c5", P.STEINER_TREE, T.C3C5_FREE),
    ("fvs_split", P.FVS, T.C4C5_FREE),
    ("fvs_c3", P.FVS, T.C3_FREE),
    ("ds_c3", P.DOMINATING_SET, T.C3_FREE),
    ("steiner_c3", P.STEINER_TREE, T.C3_FREE),
    ("fvs_c4", P.FVS, T.C4_FREE),
]


def test_6_twok2_oracle_agreement():
    t0 = time.time()
    bad = []
    for j, (name, p, tag) in enumerate(TWOK2_CASES):
        rng = random.Random(600 + j)
        for i in range(100):
            g = gen_2k2_subclass(tag, rng.randint(MIN_N[tag], 14), 60000 + 1000 * j + i)
            ts = random_terminals(rng, g.n) if p is P.STEINER_TREE else None
            sol = solve_2k2(p, g, tag, terminals=ts)
            if not is_feasible(p, g, sol.vertices, ts or ()) or sol.value != oracle_solve(p, g, terminals=ts).value:
                bad.append((name, i))
    ok = report(6, not bad and time.time() - t0 < 300, f"8 solvers x 100 instances, {len(bad)} mismatches")
    assert ok, bad[:5]


@KNOWN_FALSE
def test_7_connected_dominating_set_composition():
    counts = {}
    for k in (5, 6, 7, 8):
        for s, g in sck_instances(k, 15, 14, 70000 + 100 * k):
            sol = solve_connected_dominating_set(g, compute_vco(g, k))
            want = oracle_solve(P.CONNECTED_DOMINATING_SET, g).value
            row = counts.setdefault("SC_k", [0, 0])
            row[0] += 1
            if sol.value != want:
                row[1] += 1
                dump(f"cds-sck{k}-{s}", g, f"composition {sol.value} oracle {want}")
    for tag in (T.C3C5_FREE, T.C3_FREE):
        rng = random.Random(7)
        for i in range(60):
            g = gen_2k2_subclass(tag, rng.randint(MIN_N[tag], 14), 71000 + i)
            sol = connected_ds_2k2(g, tag)
            want = oracle_solve(P.CONNECTED_DOMINATING_SET, g).value
            row = counts.setdefault(tag.value, [0, 0])
            row[0] += 1
            if sol.value != want or not is_feasible(P.CONNECTED_DOMINATING_SET, g, sol.vertices):
                row[1] += 1
                dump(f"cds-{tag.value}-{i}", g, f"composition {sol.value} oracle {want}")
    failures = sum(r[1] for r in counts.values())
    detail = ", ".join(f"{c}: {r[1]}/{r[0]} exceed oracle" for c, r in counts.items())
    ok = report(7, failures == 0 and all(r[0] >= 50 for r in counts.values()), detail)
    assert ok


def test_8_performance():
    g = gen_sck(6, 20000, seed=8, max_n=50000).graph
    assert g.n == 50000
    t0 = time.time()
    vco = compute_vco(g, 6)
    for f in (solve_mis, solve_vertex_cover, solve_dominating_set, solve_oct, solve_ect, solve_fvs):
        f(g, vco)
    wall = time.time() - t0
    peak_mb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024
    ok = report(8, wall < 5 and peak_mb < 1024, f"n=50000 in {wall:.2f}s, peak RSS {peak_mb:.0f} MB")
    assert ok


def test_9_recognition_soundness():
    bad, count = [], 0
    for k in (5, 6, 7, 8, 9):
        for s in range(k * 1000, k * 1000 + 100):
            inst = gen_sck(k, random.Random(s).randint(1, 10), s, max_n=40)
            g = inst.graph
            vco = compute_vco(g, k)
            if isinstance(vco, Rejection) or not validate_vco(g, vco):
                bad.append(("accept", k, s))
            for other in range(5, 10):
                if other == k:
                    continue
                rej = compute_vco(g, other)
                cyc = getattr(rej, "cycle", None)
                if not isinstance(rej, Rejection) or cyc is None or len(cyc) == other or not _chordless(g, cyc):
                    bad.append(("reject", k, other, s))
            count += 1
    ok = report(9, not bad, f"{count} instances, each rejected under 4 other lengths, {len(bad)} failures")
    assert ok, bad[:5]


def _chordless(g, cyc):
    k = len(cyc)
    inside = set(cyc)
    if len(inside) != k or k < 3:
        return False
    ring = {frozenset((cyc[i], cyc[(i + 1) % k])) for i in range(k)}
    return all(frozenset((u, v)) in ring for u in inside for v in g.adj[u] & inside) and all(
        g.has_edge(*tuple(e)) for e in ring
    )
