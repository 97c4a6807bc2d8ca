"""Seeded random search for graphs with a small quantum threshold kappa_Q.

Graphs are drawn from G(n, p).  Randomness comes from Python's
``random.Random`` (MT19937), seeded per trial with the first 8 bytes of
``sha256(f"{seed}:{trial}")`` read big-endian; each unordered pair ``u < v``
in lexicographic order consumes one ``getrandbits(53)`` draw ``x`` and is an
edge iff ``x / 2**53 < p``, compared exactly with ``p`` as a fraction.  Both
primitives are stable across platforms and Python versions, and trial ``i``
does not depend on any other trial, so parallel and serial runs agree.
"""

from __future__ import annotations

import hashlib
import json
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Iterator

from .errors import ZeroOrder
from .graph import Graph, format_graph, from_edge_list, parse_graph
from .kernel import (
    Certificate,
    check_guard,
    certificate_from_json,
    kappa_q,
    verify_certificate,
)

DEFAULT_RATIO = Fraction(811, 1000)
GENERATOR = "mt19937-getrandbits53/sha256-subseed"


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(value).limit_denominator(10**6)
    return Fraction(value)


def trial_seed(seed: int, trial: int) -> int:
    digest = hashlib.sha256(f"{seed}:{trial}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def random_graph(n: int, edge_prob=Fraction(1, 2), seed: int = 0) -> Graph:
    if n < 1:
        raise ZeroOrder("a graph needs at least one vertex")
    p = as_fraction(edge_prob)
    if not 0 <= p <= 1:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    scale = 1 << 53
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.getrandbits(53) * p.denominator < p.numerator * scale:
                edges.append((u, v))
    return from_edge_list(n, edges)


@dataclass(frozen=True)
class MiningRecord:
    graph: Graph
    kappa_q: int
    evidence: Certificate
    seed: int
    trial: int

    @property
    def n(self) -> int:
        return self.graph.order

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.kappa_q, self.n)

    def to_json(self) -> dict:
        return {
            "type": "record",
            "seed": self.seed,
            "trial": self.trial,
            "n": self.n,
            "kappa_q": self.kappa_q,
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
            "graph": format_graph(self.graph),
            "evidence": self.evidence.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "MiningRecord":
        return cls(
            parse_graph(data["graph"]),
            int(data["kappa_q"]),
            certificate_from_json(data["evidence"]),
            int(data["seed"]),
            int(data["trial"]),
        )


def verify_record(rec: MiningRecord) -> bool:
    """Recompute kappa_Q and check the stored certificate realizes it."""
    value, _ = kappa_q(rec.graph, force=True)
    if value != rec.kappa_q or not verify_certificate(rec.graph, rec.evidence):
        return False
    realized = rec.evidence.value if rec.evidence.kind == "wod" else rec.n - rec.evidence.value
    return realized == rec.kappa_q and 2 * rec.kappa_q >= rec.n


@dataclass
class MiningResult:
    n: int
    ratio: Fraction
    trials: int
    seed: int
    edge_prob: Fraction
    best: MiningRecord
    hits: list[MiningRecord] = field(default_factory=list)
    histogram: dict[int, int] = field(default_factory=dict)

    @property
    def threshold(self) -> int:
        return floor(self.ratio * self.n)

    def header(self) -> dict:
        return {
            "type": "header",
            "n": self.n,
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
            "threshold": self.threshold,
            "trials": self.trials,
            "seed": self.seed,
            "edge_prob": f"{self.edge_prob.numerator}/{self.edge_prob.denominator}",
            "generator": GENERATOR,
        }

    def summary(self) -> dict:
        return {
            "type": "summary",
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "hits": len(self.hits),
            "best": self.best.to_json(),
        }

    def lines(self) -> Iterator[str]:
        yield json.dumps(self.header(), sort_keys=True)
        for rec in self.hits:
            yield json.dumps(rec.to_json(), sort_keys=True)
        yield json.dumps(self.summary(), sort_keys=True)

    def write(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for line in self.lines():
                fh.write(line + "\n")


def _run_trial(args) -> tuple[int, int, Certificate, Graph]:
    n, p, seed, trial, force = args
    g = random_graph(n, p, trial_seed(seed, trial))
    value, cert = kappa_q(g, force=force)
    return trial, value, cert, g


def mine(
    n: int,
    ratio=DEFAULT_RATIO,
    trials: int = 100,
    seed: int = 0,
    edge_prob=Fraction(1, 2),
    force: bool = False,
    workers: int = 1,
) -> MiningResult:
    """Evaluate kappa_Q on ``trials`` random graphs; keep those with kappa_Q <= floor(ratio*n)."""
    if trials < 1:
        raise ValueError("need at least one trial")
    probe = from_edge_list(n, [])
    check_guard(probe, force)
    ratio, p = as_fraction(ratio), as_fraction(edge_prob)
    limit = floor(ratio * n)
    jobs = [(n, p, seed, i, force) for i in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_trial, jobs, chunksize=32))
    else:
        outcomes = [_run_trial(job) for job in jobs]

    histogram: Counter[int] = Counter()
    hits: list[MiningRecord] = []
    best: MiningRecord | None = None
    for trial, value, cert, g in outcomes:
        histogram[value] += 1
        rec = None
        if value <= limit:
            rec = MiningRecord(g, value, cert, seed, trial)
            hits.append(rec)
        if best is None or value < best.kappa_q:
            best = rec or MiningRecord(g, value, cert, seed, trial)
    return MiningResult(n, ratio, trials, seed, p, best, hits, dict(histogram))


def read_records(path: str) -> tuple[dict, list[MiningRecord], dict]:
    """Parse a miner output file into (header, hit records, summary)."""
    header: dict = {}
    summary: dict = {}
    records = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            data = json.loads(line)
            kind = data.get("type")
            if kind == "header":
                header = data
            elif kind == "record":
                records.append(MiningRecord.from_json(data))
            elif kind == "summary":
                summary = data
    return header, records, summary
