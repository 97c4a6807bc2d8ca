"""Cross-validation of reductions: decide both sides independently and compare."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Union

from .errors import BudgetExceeded, ParameterOutOfRange, TooLarge
from .graph import Graph, format_graph, from_edge_list, induced_subgraph
from .kernel import kappa, kappa_at_least, kappa_prime, kappa_prime_at_most, kappa_q
from .reductions import (
    OddsetInstance,
    reduce_kq_to_oddset,
    reduce_nonwod_to_bipartite,
    reduce_nonwod_to_kq,
    reduce_oddset_to_wod,
    reduce_wod_to_nonwod,
    solve_oddset,
)

GraphInstance = tuple[Graph, int]
Instance = Union[GraphInstance, OddsetInstance]


# -- per-reduction deciders ------------------------------------------------------

def _src_wod(inst: GraphInstance) -> bool:
    g, k = inst
    return kappa(g).value >= g.order - k


def _src_nonwod(inst: GraphInstance) -> bool:
    g, k = inst
    return kappa_prime(g).value <= k


def _src_kq(inst: GraphInstance) -> bool:
    g, k = inst
    return kappa_q(g)[0] >= g.order - k


def _src_oddset(inst: OddsetInstance) -> bool:
    return solve_oddset(inst) is not None


def _tgt_kappa_at_least(g: Graph, t: int, max_nodes: int | None) -> bool:
    return kappa_at_least(g, t, method="bounded", max_nodes=max_nodes) is not None


def _tgt_kappa_prime_at_most(g: Graph, t: int, max_nodes: int | None) -> bool:
    if t < 1:
        return False
    return kappa_prime_at_most(g, t, method="bounded", max_nodes=max_nodes) is not None


def _tgt_oddset_to_wod(inst: OddsetInstance, max_nodes):
    out = reduce_oddset_to_wod(inst)
    return _tgt_kappa_at_least(out.graph, out.threshold, max_nodes)


def _tgt_wod_to_nonwod(inst: GraphInstance, max_nodes):
    out = reduce_wod_to_nonwod(*inst)
    return _tgt_kappa_prime_at_most(out.graph, out.threshold, max_nodes)


def _tgt_nonwod_to_bipartite(inst: GraphInstance, max_nodes):
    out = reduce_nonwod_to_bipartite(*inst)
    return _tgt_kappa_prime_at_most(out.graph, out.threshold, max_nodes)


def _tgt_nonwod_to_kq(inst: GraphInstance, max_nodes):
    out = reduce_nonwod_to_kq(*inst)
    g1, t = out.graph, out.threshold
    # kappa_Q >= t  iff  kappa >= t  or  kappa' <= n' - t
    if _tgt_kappa_at_least(g1, t, max_nodes):
        return True
    return _tgt_kappa_prime_at_most(g1, g1.order - t, max_nodes)


def _tgt_kq_to_oddset(inst: GraphInstance, max_nodes):
    return solve_oddset(reduce_kq_to_oddset(*inst)) is not None


@dataclass(frozen=True)
class ReductionSpec:
    name: str
    source: Callable
    target: Callable
    oddset_source: bool = False
    k_min: int = 0


REDUCTIONS: dict[str, ReductionSpec] = {
    s.name: s
    for s in (
        ReductionSpec("oddset-to-wod", _src_oddset, _tgt_oddset_to_wod, oddset_source=True),
        ReductionSpec("wod-to-nonwod", _src_wod, _tgt_wod_to_nonwod),
        ReductionSpec("nonwod-to-bipartite", _src_nonwod, _tgt_nonwod_to_bipartite, k_min=1),
        ReductionSpec("nonwod-to-kq", _src_nonwod, _tgt_nonwod_to_kq),
        ReductionSpec("kq-to-oddset", _src_kq, _tgt_kq_to_oddset),
    )
}


# -- suites ------------------------------------------------------------------------

def all_graphs(n: int):
    """Every labeled simple graph on ``n`` vertices, in edge-subset order."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield from_edge_list(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


def random_graph_gnp(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    return from_edge_list(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def _oddset(r: int, b: int, edges, k: int) -> OddsetInstance:
    g = from_edge_list(r + b, edges)
    return OddsetInstance(g, frozenset(range(r)), frozenset(range(r, r + b)), k)


def default_suite(
    name: str,
    max_n: int = 4,
    max_k: int = 2,
    random_count: int = 200,
    seed: int = 0,
    random_n: tuple[int, int] = (5, 6),
) -> list[Instance]:
    """Exhaustive small instances plus seeded random ones, k clamped to the reduction's range."""
    spec = REDUCTIONS[name]
    ks = [k for k in range(max_k + 1) if k >= spec.k_min]
    rng = random.Random(seed)
    suite: list[Instance] = []
    if spec.oddset_source:
        for total in range(1, max_n + 1):
            for r in range(total + 1):
                b = total - r
                cross = [(u, r + v) for u in range(r) for v in range(b)]
                for bits in range(1 << len(cross)):
                    edges = [e for i, e in enumerate(cross) if bits >> i & 1]
                    suite.extend(_oddset(r, b, edges, k) for k in ks)
        for _ in range(random_count):
            total = rng.randint(*random_n)
            r = rng.randint(1, total - 1)
            cross = [(u, r + v) for u in range(r) for v in range(total - r)]
            edges = [e for e in cross if rng.random() < 0.5]
            suite.extend(_oddset(r, total - r, edges, k) for k in ks)
        return suite
    for n in range(1, max_n + 1):
        for g in all_graphs(n):
            suite.extend((g, k) for k in ks)
    for _ in range(random_count):
        g = random_graph_gnp(rng.randint(*random_n), rng)
        suite.extend((g, k) for k in ks)
    return suite


# -- report --------------------------------------------------------------------------

def instance_text(inst: Instance) -> tuple[str, int]:
    if isinstance(inst, OddsetInstance):
        return inst.to_text(), inst.k
    g, k = inst
    return format_graph(g), k


@dataclass
class EquivalenceReport:
    reduction: str
    total: int = 0
    agreed: int = 0
    skipped: list[dict] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)
    verdicts: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples and self.agreed == self.total - len(self.skipped)

    def to_json(self) -> dict:
        return {
            "reduction": self.reduction,
            "total": self.total,
            "agreed": self.agreed,
            "skipped": self.skipped,
            "counterexamples": self.counterexamples,
            "verdicts": self.verdicts,
        }


def _verdicts(name: str, inst: Instance, budget: int | None) -> tuple[bool, bool]:
    spec = REDUCTIONS[name]
    return spec.source(inst), spec.target(inst, budget)


def _disagrees(name: str, inst: Instance, budget: int | None) -> bool:
    try:
        src, tgt = _verdicts(name, inst, budget)
    except (BudgetExceeded, TooLarge, ParameterOutOfRange):
        return False
    return src != tgt


def _shrink_candidates(inst: Instance):
    if isinstance(inst, OddsetInstance):
        g = inst.graph
        for v in range(g.order):
            if g.order == 1:
                break
            keep = [u for u in range(g.order) if u != v]
            sub, index = induced_subgraph(g, keep)
            yield "vertex", OddsetInstance(
                sub,
                frozenset(index[u] for u in inst.side_r if u != v),
                frozenset(index[u] for u in inst.side_b if u != v),
                inst.k,
            )
        for u, v in list(g.edges()):
            edges = [e for e in g.edges() if e != (u, v)]
            yield "edge", OddsetInstance(from_edge_list(g.order, edges), inst.side_r, inst.side_b, inst.k)
        return
    g, k = inst
    if g.order > 1:
        for v in range(g.order):
            sub, _ = induced_subgraph(g, [u for u in range(g.order) if u != v])
            yield "vertex", (sub, k)
    for e in list(g.edges()):
        yield "edge", (from_edge_list(g.order, [x for x in g.edges() if x != e]), k)


def minimize_counterexample(name: str, inst: Instance, budget: int | None = None) -> Instance:
    """Greedy deletion: vertex passes first, then edge passes, until nothing shrinks."""
    current = inst
    while True:
        changed = False
        for phase in ("vertex", "edge"):
            progress = True
            while progress:
                progress = False
                for kind, cand in _shrink_candidates(current):
                    if kind == phase and _disagrees(name, cand, budget):
                        current, progress, changed = cand, True, True
                        break
        if not changed:
            return current


def _check_one(args) -> dict:
    name, idx, inst, budget = args
    try:
        src, tgt = _verdicts(name, inst, budget)
    except (BudgetExceeded, TooLarge) as exc:
        return {"index": idx, "skipped": str(exc)}
    return {"index": idx, "source": src, "target": tgt}


def verify_reduction(
    name: str,
    instances: list[Instance],
    budget: int | None = None,
    workers: int = 1,
) -> EquivalenceReport:
    """Decide source and target positivity for every instance and compare.

    ``budget`` caps the node count of each size-bounded target search; an
    instance that exceeds it is recorded under ``skipped``.  Disagreements are
    minimized and stored as counterexamples.
    """
    if name not in REDUCTIONS:
        raise KeyError(f"unknown reduction {name!r}; choose from {sorted(REDUCTIONS)}")
    report = EquivalenceReport(name, total=len(instances))
    jobs = [(name, i, inst, budget) for i, inst in enumerate(instances)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_one, jobs, chunksize=16))
    else:
        results = [_check_one(job) for job in jobs]
    for res in results:
        idx = res["index"]
        if "skipped" in res:
            report.skipped.append({"index": idx, "reason": res["skipped"]})
            continue
        agree = res["source"] == res["target"]
        report.verdicts.append({"index": idx, "source": res["source"], "target": res["target"], "agree": agree})
        if agree:
            report.agreed += 1
            continue
        small = minimize_counterexample(name, instances[idx], budget)
        text, k = instance_text(small)
        src, tgt = _verdicts(name, small, budget)
        report.counterexamples.append(
            {"index": idx, "graph": text, "k": k, "source_verdict": src, "target_verdict": tgt}
        )
    return report


__all__ = [
    "REDUCTIONS",
    "EquivalenceReport",
    "all_graphs",
    "default_suite",
    "minimize_counterexample",
    "verify_reduction",
]
