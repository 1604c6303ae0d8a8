"""Acceptance checks; each prints one PASS/FAIL line (run with ``pytest -s`` or see the -v log)."""

import subprocess
import sys
import time

import numpy as np
import pytest

from orthopart.cuttree import build_cut_tree
from orthopart.engine import find_good_cut, partition
from orthopart.geometry import CutKind
from orthopart.guards import coverage_check, patrols_for, patrols_noncrossing
from orthopart.io import polygon_text
from orthopart.oracle import (
    _f,
    admissible_cut_set,
    enumerate_admissible_cuts,
    straight_cut_with_small_parts,
    verify_lemma6_table,
    verify_partition,
)
from orthopart.polygen import fourteen_gon, gallery_52, generate

TIME_TARGET = 10.0


@pytest.fixture
def report(capsys):
    def emit(name, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        assert ok, f"{name}: {detail}"

    return emit


def test_c1_suite_partitions(default_suite, suite_results, report):
    assert len(default_suite) >= 1000
    assert {P.n for P in default_suite} <= set(range(10, 61))
    t0 = time.perf_counter()
    results = [partition(P) for P in default_suite]
    reports = [verify_partition(P, r.pieces) for P, r in zip(default_suite, results)]
    elapsed = time.perf_counter() - t0
    suite_results.fill(results)
    bad = [i for i, rep in enumerate(reports) if not rep.ok]
    ok = not bad and elapsed < TIME_TARGET
    report("criterion 1 (suite tiling, piece size, count bound)", ok,
           f"{len(default_suite)} polygons, {len(bad)} failures, {elapsed:.2f}s (target {TIME_TARGET:.0f}s)")


def test_c2_fourteen_gon(report):
    P = fourteen_gon()
    straight = straight_cut_with_small_parts(P)
    r = partition(P)
    kinds = [ac.cut.cut.kind for ac in r.cuts_applied]
    ok = (P.n == 14 and straight is None and kinds == [CutKind.L]
          and sorted(Q.n for Q in r.pieces) == [8, 8])
    report("criterion 2 (14-gon needs one L-cut)", ok,
           f"straight cut with parts <= 8: {straight}, cuts: {[k.value for k in kinds]}, "
           f"pieces: {sorted(Q.n for Q in r.pieces)}")


def test_c3_gallery_52(report):
    P = gallery_52()
    r = partition(P)
    ok = P.n == 52 and r.count <= 10 and verify_partition(P, r.pieces).ok
    report("criterion 3 (52-gon)", ok, f"{r.count} pieces (bound 10)")


def test_c4_residue_table(report):
    rep = verify_lemma6_table()
    report("criterion 4 (residue certificate table)", rep.ok,
           f"{rep.checked} entries, {len(rep.unsound)} unsound")


def test_c5_claim11(default_suite, report):
    bad = [(i, o) for i, P in enumerate(default_suite) for o in ("horizontal", "vertical")
           if build_cut_tree(P, o).claim11_sum() != P.n]
    report("criterion 5 (node sizes plus t-values sum to n, both orientations)", not bad,
           f"{2 * len(default_suite)} trees, {len(bad)} mismatches")


def test_c6_cut_in_oracle_enumeration(default_suite, report):
    bad = []
    for i, P in enumerate(default_suite):
        if P.n <= 8:
            continue
        lc, _ = find_good_cut(P)
        if lc.cut not in admissible_cut_set(P):
            bad.append((i, "not enumerated"))
            continue
        (ec,) = [c for c in enumerate_admissible_cuts(P) if c.cut == lc.cut]
        if not verify_partition(P, [ec.part1, ec.part2]).tiles_exactly:
            bad.append((i, "parts do not tile"))
        elif _f(len(ec.part1.vertices)) + _f(len(ec.part2.vertices)) > _f(P.n):
            bad.append((i, "inequality"))
    report("criterion 6 (engine cut enumerated by oracle, inequality holds)", not bad,
           f"{len(default_suite)} top-level cuts, {len(bad)} failures {bad[:3]}")


def test_c7_patrols(suite_results, report):
    results = suite_results.results()
    uncovered = crossing = pieces = 0
    for r in results:
        ps = patrols_for(r.pieces)
        pieces += len(ps)
        uncovered += sum(not coverage_check(Q, p) for Q, p in zip(r.pieces, ps))
        crossing += not patrols_noncrossing(ps)
    report("criterion 7 (patrols cover every piece and do not cross)", uncovered == 0 and crossing == 0,
           f"{pieces} pieces, {uncovered} uncovered, {crossing} polygons with crossings")


def test_c8_json_deterministic(tmp_path, report):
    polys = [fourteen_gon(), gallery_52()] + [generate(n, 11) for n in (18, 36, 60)]
    same = True
    for k, P in enumerate(polys):
        src = tmp_path / f"p{k}.txt"
        src.write_text(polygon_text(P))
        outs = []
        for run in range(2):
            out = tmp_path / f"p{k}-{run}.json"
            subprocess.run([sys.executable, "-m", "orthopart.cli", "guards", str(src), "--json", str(out)],
                           check=True, capture_output=True)
            outs.append(out.read_bytes())
        same &= outs[0] == outs[1]
    report("criterion 8 (JSON byte-identical across runs)", same, f"{len(polys)} polygons, two processes each")


def test_soft_scaling(report):
    ns = [20, 40, 60, 120]
    per = []
    for n in ns:
        Ps = [generate(n, s) for s in range(20)]
        t0 = time.perf_counter()
        for P in Ps:
            partition(P)
        per.append((time.perf_counter() - t0) / len(Ps))
    slope = float(np.polyfit(np.log(ns), np.log(per), 1)[0])
    report("soft check (no worse than quadratic)", slope <= 2.0,
           "log-log slope %.2f, ms per polygon %s" % (slope, [round(1000 * t, 1) for t in per]))
