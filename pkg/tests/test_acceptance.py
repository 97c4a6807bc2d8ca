"""Acceptance gate A1-A8.  Each test records one PASS/FAIL line and then asserts."""

from __future__ import annotations

import random
import time
from itertools import combinations

import pytest

import oracles
from acceptance_log import record
from wodkit import bounds, kernel, miner
from wodkit.graph import (
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    isolated_vertices,
    max_degree,
    path_graph,
    star_graph,
    universal_vertices,
)
from wodkit.harness import REDUCTIONS, all_graphs, default_suite, random_graph_gnp, verify_reduction

pytestmark = pytest.mark.slow


def _a2_graphs() -> list[Graph]:
    rng = random.Random(2002)
    gs = [g for n in range(1, 6) for g in all_graphs(n)]
    gs += [random_graph_gnp(rng.randint(6, 12), rng, p=rng.choice([0.2, 0.5, 0.8])) for _ in range(100)]
    return gs


A2_GRAPHS = _a2_graphs()


def test_a1_wod_oracle_equivalence():
    start = time.perf_counter()
    checked = mismatches = 0
    for g in all_graphs(5):
        for b in range(1 << 5):
            checked += 1
            mismatches += kernel.is_wod(g, b)[0] != kernel.is_wod_bruteforce(g, b)
    rng = random.Random(1001)
    for _ in range(200):
        g = random_graph_gnp(rng.randint(6, 10), rng, p=rng.choice([0.2, 0.5, 0.8]))
        for _ in range(50):
            b = rng.getrandbits(g.order)
            checked += 1
            ok, witness = kernel.is_wod(g, b)
            mismatches += ok != kernel.is_wod_bruteforce(g, b)
            if ok:
                c = sum(1 << v for v in witness)
                mismatches += c & b != 0 or kernel.odd_mask(g, c) & b != b
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 300
    record("A1", ok, f"{checked} (G, B) pairs, {mismatches} mismatches, {elapsed:.1f}s")
    assert ok


def test_a2_solvers_match_definitions():
    start = time.perf_counter()
    bad = 0
    for g in A2_GRAPHS:
        adj = oracles.adjacency(g)
        kv, kw = oracles.kappa(adj)
        pv, pw = oracles.kappa_prime(adj)
        cert = kernel.kappa(g)
        ncert = kernel.kappa_prime(g)
        q, qcert = kernel.kappa_q(g)
        bad += (cert.value, tuple(sorted(cert.witness))) != (kv, kw)
        bad += (ncert.value, tuple(sorted(ncert.witness))) != (pv, pw)
        bad += q != max(kv, g.order - pv) or not kernel.verify_certificate(g, qcert)
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 600
    record("A2", ok, f"{len(A2_GRAPHS)} graphs (all n<=5, 100 random n<=12), {bad} mismatches, {elapsed:.1f}s")
    assert ok


def _isolated_free(rng: random.Random, n: int) -> Graph:
    p = rng.choice([0.02, 0.05, 0.1, 0.3, 0.5, 0.9])
    edges = {(u, v) for u, v in combinations(range(n), 2) if rng.random() < p}
    g = from_edge_list(n, edges)
    for v in sorted(isolated_vertices(g)):
        u = rng.choice([x for x in range(n) if x != v])
        edges.add((min(u, v), max(u, v)))
    return from_edge_list(n, edges)


def test_a3_greedy_bound():
    start = time.perf_counter()
    rng = random.Random(3003)
    bad = 0
    for _ in range(1000):
        g = _isolated_free(rng, rng.randint(2, 64))
        n = g.order
        value = bounds.greedy_wod(g).value
        sizes = (0,) + bounds.greedy_trace(g).odd_sizes
        bad += 4 * value * value < n
        bad += 2 * (1 + max_degree(g)) * value < n
        bad += any(a >= b for a, b in zip(sizes, sizes[1:]))
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 120
    record("A3", ok, f"1000 isolated-free graphs 2<=n<=64, {bad} violations, {elapsed:.1f}s")
    assert ok


def _with_apex(g: Graph) -> Graph:
    n = g.order
    return from_edge_list(n + 1, list(g.edges()) + [(v, n) for v in range(n)])


def test_a4_complement_identities():
    bad_ineq = sum(
        kernel.kappa_prime(g).value + kernel.kappa(complement(g)).value < g.order for g in A2_GRAPHS
    )
    rng = random.Random(4004)
    bad_eq = 0
    for _ in range(300):
        g = _with_apex(random_graph_gnp(rng.randint(1, 11), rng, p=rng.choice([0.2, 0.5, 0.8])))
        assert universal_vertices(g)
        bad_eq += kernel.kappa_prime(g).value + kernel.kappa(complement(g)).value != g.order
    ok = bad_ineq == 0 and bad_eq == 0
    record("A4", ok, f"inequality on {len(A2_GRAPHS)} graphs ({bad_ineq} bad), equality on 300 apex graphs ({bad_eq} bad)")
    assert ok


A5_XFAIL = (
    "kappa_Q(C5) = max(2, 5 - 3) = 2 < ceil(5/2) and kappa_Q(K1) = 0; "
    "only the floor form kappa_Q >= floor(n/2) holds"
)


def _a5_graphs() -> list[Graph]:
    return A2_GRAPHS + [cycle_graph(n) for n in range(3, 14)]


@pytest.mark.xfail(strict=True, reason=A5_XFAIL)
def test_a5_kappa_q_lower_bound():
    graphs = _a5_graphs()
    violators = [g for g in graphs if 2 * kernel.kappa_q(g)[0] < g.order]
    sizes = sorted({g.order for g in violators})
    five_cycles = sum(g.order == 5 and g.num_edges == 5 and max_degree(g) == 2 for g in violators)
    ok = not violators
    record(
        "A5",
        ok,
        f"kappa_Q >= ceil(n/2) on {len(graphs)} graphs: {len(violators)} violations at orders {sizes} "
        f"({five_cycles} labeled 5-cycles, plus K1); known unattainable, see A5 floor form",
    )
    assert ok


def test_a5_floor_form():
    graphs = _a5_graphs()
    bad = sum(2 * kernel.kappa_q(g)[0] < g.order - 1 for g in graphs)
    ok = bad == 0
    record("A5-floor", ok, f"kappa_Q >= floor(n/2) on {len(graphs)} graphs, {bad} violations")
    assert ok


def test_a5b_two_forms_of_kappa_q():
    findings = []
    total = 0
    for n in range(1, 6):
        for g in all_graphs(n):
            total += 1
            left = max(kernel.kappa(g).value, n - kernel.kappa_prime(g).value)
            right = max(kernel.kappa(g).value, kernel.kappa(complement(g)).value)
            if left != right:
                findings.append((sorted(g.edges()), n, left, right))
    for edges, n, left, right in findings[:20]:
        print(f"  finding: n={n} edges={edges} max(k, n-k')={left} max(k, k(co-G))={right}")
    record("A5b", True, f"{len(findings)} disagreements between the two kappa_Q forms over {total} graphs n<=5 (report only)")


def _a6_graphs() -> list[Graph]:
    gs = [g for n in range(1, 7) for g in all_graphs(n)]
    rng = random.Random(6006)
    for n in range(7, 11):
        for _ in range(250):
            gs.append(random_graph_gnp(n, rng, p=rng.choice([0.1, 0.3, 0.5, 0.7, 0.9])))
        for base in (complete_graph(n), empty_graph(n), path_graph(n), cycle_graph(n), star_graph(n - 1)):
            gs.append(base)
            gs.append(complement(base))
        gs.append(_with_apex(random_graph_gnp(n - 1, rng)))
        gs.append(disjoint_union(random_graph_gnp(n - 2, rng), empty_graph(2)))
    return gs


def test_a6_fpt_deciders():
    start = time.perf_counter()
    graphs = _a6_graphs()
    bad = bound_trues = queries = 0
    for g in graphs:
        n = g.order
        kv = kernel.kappa(g).value
        pv = kernel.kappa_prime(g).value
        qv = kernel.kappa_q(g)[0]
        iso_free = not isolated_vertices(g)
        uni_free = not universal_vertices(g)
        for k in range(n + 1):
            queries += 1
            ok1, c1 = bounds.decide_kappa_at_least(g, k)
            ok2, c2 = bounds.decide_kappa_prime_at_most(g, k)
            ok3 = bounds.decide_kappa_q_at_least(g, k)
            bad += ok1 != (kv >= k) or ok2 != (pv <= n - k) or ok3 != (qv >= k)
            if ok1:
                bad += not kernel.verify_certificate(g, c1) or c1.value < k
            if ok2:
                bad += not kernel.verify_certificate(g, c2) or c2.value > n - k
            if iso_free and k > 0 and 4 * k * k <= n:
                bound_trues += 1
                bad += not (ok1 and kv >= k)
            if uni_free and k > 0 and 16 * k * k <= n:
                bound_trues += 1
                bad += not (ok2 and pv <= n - k)
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 600
    record(
        "A6",
        ok,
        f"{len(graphs)} graphs (all n<=6, 250 random + families per n in 7..10), {queries} (G, k) queries x3 deciders, "
        f"{bound_trues} bound-branch answers re-checked, {bad} mismatches, {elapsed:.1f}s",
    )
    assert ok


def test_a7_reduction_equivalence():
    start = time.perf_counter()
    parts = []
    ok = True
    for name in REDUCTIONS:
        report = verify_reduction(name, default_suite(name))
        positives = sum(v["source"] for v in report.verdicts)
        parts.append(f"{name} {report.agreed}/{report.total} (+{positives})")
        ok &= report.ok and report.agreed == report.total and not report.skipped
    elapsed = time.perf_counter() - start
    ok &= elapsed < 1800
    record("A7", ok, f"{'; '.join(parts)}; {elapsed:.1f}s")
    assert ok


def test_a8_miner(tmp_path):
    start = time.perf_counter()
    first = miner.mine(20, trials=2000, seed=0)
    elapsed = time.perf_counter() - start
    second = miner.mine(20, trials=2000, seed=0)
    deterministic = first.histogram == second.histogram and list(first.lines()) == list(second.lines())
    path = tmp_path / "records.jsonl"
    first.write(str(path))
    _, records, summary = miner.read_records(str(path))
    best = miner.MiningRecord.from_json(summary["best"])
    reverified = all(miner.verify_record(r) for r in records) and miner.verify_record(best)
    at16 = sum(v for q, v in first.histogram.items() if q <= 16)
    ok = elapsed < 900 and deterministic and best.kappa_q <= 18 and reverified and len(records) == len(first.hits)
    hist = " ".join(f"{q}:{c}" for q, c in sorted(first.histogram.items()))
    record(
        "A8",
        ok,
        f"n=20 2000 trials in {elapsed:.1f}s, histogram {hist}, best kappa_Q {best.kappa_q}, "
        f"{len(records)} stored records re-verified, deterministic={deterministic}; "
        f"fraction with kappa_Q<=16: {at16 / first.trials:.4f} (informational)",
    )
    assert ok
