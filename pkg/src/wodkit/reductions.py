"""Gadget builders for the five parameterized reductions, plus an Oddset solver.

Reduction chain (source question => target question):

* ``oddset-to-wod``        Oddset(k)            => kappa(G') >= n' - (k+1)
* ``wod-to-nonwod``        kappa(G) >= n - k    => kappa'(G') <= k + 2
* ``nonwod-to-bipartite``  kappa'(G) <= k       => kappa'(G') <= 2k, G' bipartite
* ``nonwod-to-kq``         kappa'(G) <= k       => kappa_Q(G^(k+1)) >= (k+1)n - k
* ``kq-to-oddset``         kappa_Q(G) >= n - k  => Oddset(2k + 1)

Corrected readings of the printed constructions:

* oddset-to-wod: the third vertex class is the padding set ``F``.
* nonwod-to-bipartite: every ``i in {i,2}`` is ``i in {1,2}``.
* kq-to-oddset: ``S_{i,4}``/``S_{i,5}`` are ``A_{i,4}``/``A_{i,5}``; ``d_i`` is
  adjacent to every vertex of ``A_{i,4} | A_{i,5}``; complement edges range
  over pairs ``u != v``; and the fixer matchings pair ``A_{i,1}`` with
  ``A_{i,4}`` and ``A_{i,3}`` with ``A_{i,5}``.  Joining both fixer layers to
  both target layers makes ``a_{i,1,u}`` and ``a_{i,3,u}`` twins, which forces
  the ``A_{i,2}`` selection to be empty and breaks the equivalence (already on
  ``K4`` with ``k = 1``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import EdgeWithinSide, NotBipartite, ParameterOutOfRange, ParseError, TooLarge
from .gf2 import Gf2System
from .graph import (
    Graph,
    bipartition,
    disjoint_copies,
    format_graph,
    from_edge_list,
    is_valid_bipartition,
    mask_of,
    members,
    parse_graph_with_meta,
)

ODDSET_GUARD = 10**8
KQ_FIXER_PAIRS = ((1, 4), (3, 5))


@dataclass(frozen=True)
class OddsetInstance:
    graph: Graph
    side_r: frozenset[int]
    side_b: frozenset[int]
    k: int
    labels: dict[str, int] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        g = self.graph
        r = mask_of(self.side_r, g.order)
        b = mask_of(self.side_b, g.order)
        if r & b or r | b != g.full_mask:
            raise NotBipartite("R and B must partition the vertex set")
        for v in members(r):
            if g.rows[v] & r:
                raise EdgeWithinSide(f"edge inside R at vertex {v}")
        for v in members(b):
            if g.rows[v] & b:
                raise EdgeWithinSide(f"edge inside B at vertex {v}")
        if self.k < 0:
            raise ParameterOutOfRange("k must be >= 0")

    def to_text(self) -> str:
        r = " ".join(str(v) for v in sorted(self.side_r))
        return format_graph(self.graph, [f"R: {r}", f"k: {self.k}"])


def parse_oddset(text: str, k: int | None = None) -> OddsetInstance:
    """Read a graph file whose ``# R:`` comment lists the R side."""
    g, meta = parse_graph_with_meta(text)
    if "R" not in meta:
        raise ParseError("Oddset file needs a '# R: ...' line")
    try:
        r = frozenset(int(tok) for tok in meta["R"].split())
        if k is None:
            k = int(meta["k"]) if "k" in meta else None
    except ValueError:
        raise ParseError("malformed R or k line") from None
    if k is None:
        raise ParseError("no k given and no '# k:' line in the file")
    b = frozenset(range(g.order)) - r
    return OddsetInstance(g, r, b, k)


@dataclass(frozen=True)
class ReductionOutput:
    graph: Graph
    parameter: int
    threshold: int
    question: str  # "kappa>=", "kappa'<=" or "kappa_q>="
    labels: dict[str, int]
    bipartition: tuple[frozenset[int], frozenset[int]] | None = None

    def comments(self, name: str) -> list[str]:
        lines = [
            f"reduction: {name}",
            f"question: {self.question} {self.threshold}",
            f"parameter: {self.parameter}",
            f"threshold: {self.threshold}",
        ]
        lines.extend(f"label {label} {v}" for label, v in sorted(self.labels.items(), key=lambda kv: kv[1]))
        return lines


class _Builder:
    def __init__(self) -> None:
        self.labels: dict[str, int] = {}
        self.edges: list[tuple[int, int]] = []

    def add(self, name: str) -> int:
        idx = len(self.labels)
        self.labels[name] = idx
        return idx

    def edge(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def graph(self) -> Graph:
        return from_edge_list(len(self.labels), self.edges)


def _checked_bipartition(g: Graph, left: list[int], right: list[int]):
    assert is_valid_bipartition(g, left, right), "gadget is not bipartite"
    return frozenset(left), frozenset(right)


def reduce_oddset_to_wod(inst: OddsetInstance) -> ReductionOutput:
    g, k = inst.graph, inst.k
    if bipartition(g) is None:
        raise NotBipartite("Oddset graph must be bipartite")
    rs, bs = sorted(inst.side_r), sorted(inst.side_b)
    pad = k + 2
    bld = _Builder()
    a = {u: bld.add(f"a_{u}") for u in rs}
    d = {(v, i): bld.add(f"d_{v}_{i}") for v in bs for i in range(1, pad + 1)}
    f = [bld.add(f"f_{i}") for i in range(1, pad + 1)]
    c = bld.add("c")
    for fi in f:
        bld.edge(c, fi)
    for u in rs:
        bld.edge(c, a[u])
        for v in members(g.rows[u]):
            for i in range(1, pad + 1):
                bld.edge(a[u], d[(v, i)])
    out = bld.graph()
    sides = _checked_bipartition(out, [c, *d.values()], [*a.values(), *f])
    n1 = out.order
    return ReductionOutput(out, k + 1, n1 - (k + 1), "kappa>=", bld.labels, sides)


def reduce_wod_to_nonwod(g: Graph, k: int) -> ReductionOutput:
    if k < 0:
        raise ParameterOutOfRange("k must be >= 0")
    bld = _Builder()
    vs = [bld.add(f"v_{u}") for u in range(g.order)]
    apex = [bld.add(f"a_{i}") for i in range(1, k + 4)]
    c = bld.add("c")
    for u, v in g.edges():
        bld.edge(vs[u], vs[v])
    for a in apex:
        bld.edge(a, c)
        for v in vs:
            bld.edge(a, v)
    return ReductionOutput(bld.graph(), k + 2, k + 2, "kappa'<=", bld.labels)


def reduce_nonwod_to_bipartite(g: Graph, k: int) -> ReductionOutput:
    if k < 1:
        raise ParameterOutOfRange("k must be >= 1")
    n, m = g.order, 2 * k + 1
    span = range(1, m + 1)
    bld = _Builder()
    a = [bld.add(f"a_{u}") for u in range(n)]
    b = {(i, u): bld.add(f"b{i}_{u}") for i in (1, 2) for u in range(n)}
    d = {(i, u, j): bld.add(f"d_{i}_{u}_{j}") for i in (1, 2) for u in range(n) for j in span}
    f = {
        (i, u, j, l): bld.add(f"f_{i}_{u}_{j}_{l}")
        for i in (1, 2) for u in range(n) for j in span for l in span
    }
    h = [bld.add(f"h_{p}") for p in span]
    for u in range(n):
        for v in members(g.rows[u]):
            for i in (1, 2):
                bld.edge(a[u], b[(i, v)])
        bld.edge(a[u], b[(2, u)])
    for (i, u, j), dv in d.items():
        bld.edge(b[(i, u)], dv)
    for (i, u, j, l), fv in f.items():
        bld.edge(d[(i, u, j)], fv)
        for hv in h:
            bld.edge(fv, hv)
    out = bld.graph()
    sides = _checked_bipartition(out, [*a, *d.values(), *h], [*b.values(), *f.values()])
    return ReductionOutput(out, 2 * k, 2 * k, "kappa'<=", bld.labels, sides)


def reduce_nonwod_to_kq(g: Graph, k: int) -> ReductionOutput:
    if k < 0:
        raise ParameterOutOfRange("k must be >= 0")
    n = g.order
    out = disjoint_copies(g, k + 1)
    labels = {f"v_{i}_{u}": i * n + u for i in range(k + 1) for u in range(n)}
    return ReductionOutput(out, k, (k + 1) * n - k, "kappa_q>=", labels)


def reduce_kq_to_oddset(
    g: Graph, k: int, fixer_pairs: tuple[tuple[int, int], ...] = KQ_FIXER_PAIRS
) -> OddsetInstance:
    """Oddset instance, positive iff kappa_Q(G) >= n - k.

    Layer ``i = 1`` encodes ``G`` and ``i = 2`` its complement; ``d_i`` selects
    the layer and ``c`` forces exactly one ``d_i``.  ``fixer_pairs`` lists the
    (fixer layer, target layer) matchings.
    """
    if k < 0:
        raise ParameterOutOfRange("k must be >= 0")
    n = g.order
    bld = _Builder()
    a = {(i, j, u): bld.add(f"a_{i}_{j}_{u}") for i in (1, 2) for j in range(1, 6) for u in range(n)}
    d = {i: bld.add(f"d_{i}") for i in (1, 2)}
    c = bld.add("c")
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            if g.has_edge(u, v):
                for j in (4, 5):
                    bld.edge(a[(1, 2, u)], a[(1, j, v)])
            else:
                for j in (4, 5):
                    bld.edge(a[(2, 2, u)], a[(2, j, v)])
    for i in (1, 2):
        for u in range(n):
            for j, l in fixer_pairs:
                bld.edge(a[(i, j, u)], a[(i, l, u)])
            for j in (4, 5):
                bld.edge(d[i], a[(i, j, u)])
            bld.edge(a[(i, 2, u)], a[(i, 5, u)])
        bld.edge(d[i], c)
    out = bld.graph()
    side_b = frozenset(v for (i, j, u), v in a.items() if j in (4, 5)) | {c}
    side_r = frozenset(range(out.order)) - side_b
    assert is_valid_bipartition(out, side_r, side_b), "gadget is not bipartite"
    return OddsetInstance(out, side_r, side_b, 2 * k + 1, bld.labels)


# -- Oddset solver -------------------------------------------------------------

def _r_twin_reps(g: Graph, rs: list[int]) -> list[int]:
    seen: dict[int, int] = {}
    for u in rs:
        seen.setdefault(g.rows[u], u)
    return sorted(seen.values())


def solve_oddset(inst: OddsetInstance) -> frozenset[int] | None:
    """Smallest, then lexicographically first, ``R' <= R`` with ``|R'| <= k`` dominating B oddly.

    The constraints are linear over GF(2), so the solutions form a coset
    ``x0 + span(kernel)``.  Whichever is cheaper is enumerated: the coset, or
    subsets of R of size at most k (one vertex per class of R-vertices with
    identical neighbourhoods, since a pair of such twins cancels out).
    """
    g, k = inst.graph, inst.k
    r_mask = mask_of(inst.side_r, g.order)
    system = Gf2System(variables=r_mask)
    for v in sorted(inst.side_b):
        system.add(g.rows[v], 1)
    x0 = system.solve()
    if x0 is None:
        return None
    basis = system.kernel_basis()
    reps = _r_twin_reps(g, sorted(inst.side_r))
    subset_cost = sum(comb(len(reps), s) for s in range(min(k, len(reps)) + 1))
    coset_cost = 1 << len(basis)
    if min(subset_cost, coset_cost) > ODDSET_GUARD:
        raise TooLarge(f"Oddset search needs {min(subset_cost, coset_cost)} candidates")

    if coset_cost <= subset_cost:
        best: tuple[int, tuple[int, ...]] | None = None
        x = x0
        for step in range(coset_cost):
            if step:
                x ^= basis[((step & -step).bit_length() - 1)]
            w = x.bit_count()
            if w > k or (best is not None and w > best[0]):
                continue
            key = tuple(sorted(members(x)))
            if best is None or (w, key) < best:
                best = (w, key)
        return None if best is None else frozenset(best[1])

    b_rows = [g.rows[v] for v in sorted(inst.side_b)]
    for size in range(min(k, len(reps)) + 1):
        for combo in combinations(reps, size):
            sel = 0
            for u in combo:
                sel |= 1 << u
            if all((row & sel).bit_count() & 1 for row in b_rows):
                return frozenset(combo)
    return None


def oddset_dominates(inst: OddsetInstance, chosen) -> bool:
    sel = mask_of(chosen, inst.graph.order)
    if sel & ~mask_of(inst.side_r, inst.graph.order):
        return False
    return all((inst.graph.rows[v] & sel).bit_count() & 1 for v in inst.side_b)
