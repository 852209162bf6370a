"""Acceptance criteria, one test each, at full size.

Each test prints one line: ``[PASS|FAIL] <criterion> (<details>, <seconds>)``.
Suite reports go to $NESTLAB_REPORT_DIR (default: reports/ in the repo).
"""
import json
import os
import time
from pathlib import Path

import pytest

from nestlab import suites
from nestlab.space import FiniteSpace, enumerate_families

REPORTS = Path(os.environ.get("NESTLAB_REPORT_DIR", Path(__file__).resolve().parents[1] / "reports"))


@pytest.fixture
def line(capsys):
    def emit(name, ok, detail, seconds, limit):
        fast = seconds < limit
        status = "PASS" if ok and fast else "FAIL"
        with capsys.disabled():
            print(f"\n[{status}] {name} ({detail}; {seconds:.1f}s, limit {limit}s)")
        return ok and fast
    return emit


def timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t0


def summary(*results):
    return ", ".join(f"{r.name}: {r.checked} checked, {r.failure_count} failed, "
                     f"{r.archived_count} archived" for r in results)


def test_1_nest_order_theorem(line):
    assert sum(1 for _ in enumerate_families(FiniteSpace(3))) == 128
    res, s = timed(suites.nest_order_suite)
    res.write(REPORTS)
    assert line("1 nest/order theorem", res.passed, summary(res), s, 30), res.failures[:3]


def test_2_reverse_nest_theorem(line):
    res, s = timed(suites.reverse_nest_suite)
    res.write(REPORTS)
    assert line("2 reverse-nest theorem", res.passed, summary(res), s, 10), res.failures[:3]


def test_3_interlocking_theorem(line):
    res, s = timed(suites.interlocking_suite)
    path = res.write(REPORTS)
    archived = json.loads(path.read_text())["archived_count"]
    ok = res.passed and archived == res.archived_count > 0
    assert line("3 interlocking equivalence", ok, summary(res) + f"; report {path.name}", s, 60), \
        res.failures[:3]


def test_4_vdw(line):
    res, s = timed(suites.vdw_suite)
    res.write(REPORTS)
    assert line("4 vDW constructive direction", res.passed, summary(res), s, 60), res.failures[:3]


def test_5_well_order_and_ordinal_profile(line):
    (wo, s1) = timed(suites.well_order_suite)
    (op, s2) = timed(suites.ordinal_profile_suite)
    wo.write(REPORTS)
    op.write(REPORTS)
    ok = wo.passed and op.passed and op.counts["topologies_n4"] == 355
    assert line("5 well-order theorem + ordinal profile", ok, summary(wo, op), s1 + s2, 300), \
        (wo.failures[:3], op.failures[:3])


def test_6_product_transfer(line):
    res, s = timed(suites.transfer_suite)
    res.write(REPORTS)
    necessity = res.counts.get("projection loses interlocking without projection condition", 0)
    ok = res.passed and necessity > 0
    assert line("6 product transfer", ok, summary(res) + f"; necessity archive {necessity}", s, 120), \
        res.failures[:3]


def test_7_function_space(line):
    res, s = timed(suites.function_space_suite)
    res.write(REPORTS)
    assert line("7 function-space nests", res.passed, summary(res), s, 30), res.failures[:3]


def test_8_fermat_reals(line):
    res, s = timed(suites.fermat_suite)
    res.write(REPORTS)
    assert line("8 Fermat reals", res.passed, summary(res), s, 60), res.failures[:3]


def test_9_connectedness_and_density(line):
    (conn, s1) = timed(suites.connectedness_suite)
    (dens, s2) = timed(suites.density_suite)
    (dens0, _) = timed(suites.density_suite, t0_only=True)
    for r in (conn, dens, dens0):
        r.write(REPORTS)
    line("9a connectedness contrapositive", conn.passed, summary(conn), s1, 10)
    line("9b density lemma, T0 nests only (informational)", dens0.passed, summary(dens0), 0.0, 10)
    ok = conn.passed and dens.passed
    assert line("9 connectedness + density lemma (all nests)", ok, summary(conn, dens), s1 + s2, 10), \
        dens.failures[:4]


def test_10_determinism(line):
    t0 = time.perf_counter()
    a = json.dumps(suites.run_all(), sort_keys=True, indent=2)
    b = json.dumps(suites.run_all(), sort_keys=True, indent=2)
    s = time.perf_counter() - t0
    REPORTS.mkdir(parents=True, exist_ok=True)
    (REPORTS / "run_all.json").write_text(a + "\n")
    assert line("10 determinism", a == b, f"{len(a)} bytes per report", s, 600)
