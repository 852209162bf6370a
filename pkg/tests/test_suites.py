import json

from nestlab import suites
from nestlab.nests import dense_nest_criterion, induced_order, is_dense_order
from nestlab.space import FiniteSpace, SubsetFamily


def test_suite_result_caps_stored_failures():
    res = suites.SuiteResult("x")
    for i in range(40):
        res.fail("c", i=i)
    res.archive("kind", i=0)
    d = res.to_dict()
    assert d["failure_count"] == 40 and len(d["failures"]) == suites.MAX_STORED
    assert not res.passed and d["counts"] == {"kind": 1}


def test_small_suites_pass():
    for res in (suites.nest_order_suite(sizes=(2,), random_count=200),
                suites.reverse_nest_suite(max_n=2),
                suites.interlocking_suite(max_n=3),
                suites.vdw_suite(linear_max_n=3, pair_max_n=2),
                suites.well_order_suite(max_n=3),
                suites.ordinal_profile_suite(max_n=3),
                suites.transfer_suite(random_count=30, interlocking_base_max=2),
                suites.function_space_suite(max_domain=2, max_codomain=2),
                suites.fermat_suite(pairs=200, triples=200, ring_triples=50, bridge_max=3),
                suites.connectedness_suite(max_n=3, pair_max_n=3),
                suites.density_suite(max_n=3, t0_only=True)):
        assert res.passed, (res.name, res.failures[:3])
        assert res.checked > 0


def test_density_failures_re_verify():
    res = suites.density_suite(max_n=3)
    assert res.failure_count == 4
    for f in res.failures:
        fam = SubsetFamily.of(FiniteSpace(f["family"]["n"]), f["family"]["sets"])
        assert is_dense_order(induced_order(fam)) == f["dense"]
        assert dense_nest_criterion(fam) != f["dense"]
        assert induced_order(fam).pairs() == []


def test_archives_record_hypothesis_necessity():
    res = suites.transfer_suite(random_count=0, interlocking_base_max=1)
    assert res.counts.get("remark fails without projection condition", 0) > 0
    assert res.counts.get("projection loses interlocking without projection condition", 0) > 0
    wo = suites.well_order_suite(max_n=2)
    assert {"n": 2, "sets": [[0]]} in [a["family"] for a in wo.archived]


def test_oracle_threshold():
    from nestlab.fermat import parse
    assert suites.oracle_threshold(parse("t"), parse("t^(1/2)"), -1) is not None
    assert suites.oracle_threshold(parse("t"), parse("t^(1/2)"), 1) is None


def test_reports_serialise_deterministically(tmp_path):
    a = suites.fermat_suite(pairs=50, triples=50, ring_triples=10, bridge_max=2, seed=9)
    b = suites.fermat_suite(pairs=50, triples=50, ring_triples=10, bridge_max=2, seed=9)
    assert json.dumps(a.to_dict(), sort_keys=True) == json.dumps(b.to_dict(), sort_keys=True)
    path = a.write(tmp_path)
    assert json.loads(path.read_text())["name"] == "fermat_reals"
