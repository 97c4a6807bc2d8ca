from __future__ import annotations

import json
from dataclasses import replace

import pytest

from wodkit import harness
from wodkit import reductions as red
from wodkit.graph import complete_graph, parse_graph


def test_empty_instance_list():
    report = harness.verify_reduction("wod-to-nonwod", [])
    assert (report.total, report.agreed, report.counterexamples) == (0, 0, [])
    assert report.ok


def test_unknown_reduction():
    with pytest.raises(KeyError):
        harness.verify_reduction("nope", [])


def test_all_graphs_counts():
    assert [sum(1 for _ in harness.all_graphs(n)) for n in range(1, 5)] == [1, 2, 8, 64]


def test_default_suite_respects_k_min():
    suite = harness.default_suite("nonwod-to-bipartite", max_n=2, random_count=3)
    assert {k for _, k in suite} == {1, 2}
    assert len(suite) == (1 + 2) * 2 + 3 * 2


def test_default_suite_is_seeded():
    a = harness.default_suite("wod-to-nonwod", max_n=2, random_count=5, seed=4)
    b = harness.default_suite("wod-to-nonwod", max_n=2, random_count=5, seed=4)
    assert a == b


@pytest.mark.parametrize("name", ["wod-to-nonwod", "nonwod-to-kq"])
def test_small_exhaustive_agreement(name):
    suite = harness.default_suite(name, max_n=3, random_count=10)
    report = harness.verify_reduction(name, suite)
    assert report.ok and report.agreed == report.total
    verdicts = {v["source"] for v in report.verdicts}
    assert verdicts == {True, False}


def test_budget_skips_are_recorded():
    suite = [(complete_graph(3), 1), (complete_graph(4), 2)]
    report = harness.verify_reduction("nonwod-to-bipartite", suite, budget=1)
    assert len(report.skipped) + report.agreed == report.total
    assert all("reason" in s for s in report.skipped)
    assert report.skipped


def test_disagreement_is_minimized(monkeypatch):
    literal = ((1, 4), (1, 5), (3, 4), (3, 5))
    spec = harness.REDUCTIONS["kq-to-oddset"]

    def broken_target(inst, budget):
        return red.solve_oddset(red.reduce_kq_to_oddset(*inst, fixer_pairs=literal)) is not None

    monkeypatch.setitem(harness.REDUCTIONS, "kq-to-oddset", replace(spec, target=broken_target))
    suite = [(complete_graph(4), 1)]
    report = harness.verify_reduction("kq-to-oddset", suite)
    assert not report.ok
    (cx,) = report.counterexamples
    small = parse_graph(cx["graph"])
    assert small.order <= 4 and cx["source_verdict"] != cx["target_verdict"]
    again = harness.minimize_counterexample("kq-to-oddset", (small, cx["k"]))
    assert again[0] == small
    json.dumps(report.to_json())


def test_parallel_matches_serial():
    suite = harness.default_suite("oddset-to-wod", max_n=2, random_count=4)
    serial = harness.verify_reduction("oddset-to-wod", suite)
    parallel = harness.verify_reduction("oddset-to-wod", suite, workers=2)
    assert serial.to_json() == parallel.to_json()
