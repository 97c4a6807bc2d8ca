"""Immutable simple graphs backed by integer bitset rows.

Vertices are dense indices ``0..n-1``.  Row ``v`` is an ``int`` whose bit
``u`` is set iff ``uv`` is an edge, so the parity of ``|N(v) & C|`` for a
vertex set ``C`` held as a mask is ``(rows[v] & C).bit_count() & 1``.

Public functions accept vertex sets as any iterable of indices and return
``frozenset``; the ``*_mask`` helpers expose the raw bitsets for hot loops.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    AllIsolated,
    EndpointOutOfRange,
    GraphError,
    MemberOutOfRange,
    ParseError,
    SelfLoop,
    ZeroCopies,
    ZeroOrder,
)

VertexSet = frozenset


def mask_of(vertices: Iterable[int] | int, order: int) -> int:
    """Convert an iterable of vertex indices (or a mask) into a bitmask."""
    if isinstance(vertices, int):
        if vertices < 0 or vertices >> order:
            raise MemberOutOfRange(f"mask {vertices:#x} exceeds order {order}")
        return vertices
    mask = 0
    for v in vertices:
        if not 0 <= v < order:
            raise MemberOutOfRange(f"vertex {v} not in 0..{order - 1}")
        mask |= 1 << v
    return mask


def members(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def sorted_members(mask: int) -> tuple[int, ...]:
    return tuple(sorted(members(mask)))


@dataclass(frozen=True)
class Graph:
    order: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ZeroOrder("a graph needs at least one vertex")
        if len(self.rows) != self.order:
            raise GraphError("row count does not match order")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise EndpointOutOfRange(f"row {v} references a vertex >= {self.order}")
            if row >> v & 1:
                raise SelfLoop(f"self-loop at {v}")
            rest = row
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency {v}->{u}")
                rest ^= low

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return members(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.rows):
            higher = row >> (u + 1)
            v = u + 1
            while higher:
                if higher & 1:
                    yield (u, v)
                higher >>= 1
                v += 1

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={list(self.edges())})"


def from_edge_list(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if order < 1:
        raise ZeroOrder("a graph needs at least one vertex")
    rows = [0] * order
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise EndpointOutOfRange(f"edge ({u}, {v}) outside 0..{order - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, tuple(rows))


def empty_graph(order: int) -> Graph:
    return from_edge_list(order, [])


def complete_graph(order: int) -> Graph:
    full = (1 << order) - 1
    if order < 1:
        raise ZeroOrder("a graph needs at least one vertex")
    return Graph(order, tuple(full ^ (1 << v) for v in range(order)))


def path_graph(order: int) -> Graph:
    return from_edge_list(order, [(i, i + 1) for i in range(order - 1)])


def cycle_graph(order: int) -> Graph:
    if order < 3:
        raise GraphError("a simple cycle needs at least 3 vertices")
    return from_edge_list(order, [(i, (i + 1) % order) for i in range(order)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the center at index 0."""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.order, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.rows)))


def disjoint_copies(g: Graph, p: int) -> Graph:
    if p < 1:
        raise ZeroCopies("need at least one copy")
    n = g.order
    rows = [row << (i * n) for i in range(p) for row in g.rows]
    return Graph(n * p, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.order
    return Graph(g.order + h.order, g.rows + tuple(r << shift for r in h.rows))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``keep`` plus the old->new index map."""
    kept = sorted(set(keep))
    index = {old: new for new, old in enumerate(kept)}
    rows = []
    for old in kept:
        row = 0
        for u in members(g.rows[old]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    return Graph(len(kept), tuple(rows)), index


def max_degree(g: Graph) -> int:
    return max(row.bit_count() for row in g.rows)


def isolated_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v, row in enumerate(g.rows) if row == 0)


def universal_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v, row in enumerate(g.rows) if row.bit_count() == g.order - 1)


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """BFS 2-coloring; each component's lowest index goes to the first side."""
    color = [-1] * g.order
    for root in range(g.order):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in sorted(members(g.rows[v])):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return (
        frozenset(v for v in range(g.order) if color[v] == 0),
        frozenset(v for v in range(g.order) if color[v] == 1),
    )


def is_valid_bipartition(g: Graph, left: Iterable[int], right: Iterable[int]) -> bool:
    lm, rm = mask_of(left, g.order), mask_of(right, g.order)
    if lm & rm or lm | rm != g.full_mask:
        return False
    return all(not (g.rows[v] & (lm if lm >> v & 1 else rm)) for v in range(g.order))


def strip_isolated(g: Graph) -> tuple[Graph, dict[int, int]]:
    keep = [v for v, row in enumerate(g.rows) if row]
    if not keep:
        raise AllIsolated("every vertex is isolated")
    return induced_subgraph(g, keep)


def twin_classes(g: Graph) -> list[list[int]]:
    """Partition vertices into twin classes, each sorted ascending.

    Two vertices are twins when they share their open neighbourhood (false
    twins) or their closed neighbourhood (true twins).  A vertex cannot have
    both kinds of twin, so the two groupings never overlap.
    """
    by_open: dict[int, list[int]] = {}
    for v, row in enumerate(g.rows):
        by_open.setdefault(row, []).append(v)
    classes = [c for c in by_open.values() if len(c) > 1]
    singles = [c[0] for c in by_open.values() if len(c) == 1]
    by_closed: dict[int, list[int]] = {}
    for v in singles:
        by_closed.setdefault(g.rows[v] | 1 << v, []).append(v)
    classes.extend(by_closed.values())
    classes.sort(key=lambda c: c[0])
    return classes


# -- text format -----------------------------------------------------------

def format_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    """Serialize as ``n m`` followed by one ``u v`` line per edge (u < v)."""
    lines = [f"# {c}" for c in comments]
    edges = list(g.edges())
    lines.append(f"{g.order} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_graph_with_meta(text: str) -> tuple[Graph, dict[str, str]]:
    """Parse the text format; ``# key: value`` comment lines become metadata."""
    meta: dict[str, str] = {}
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            key, sep, value = body.partition(":")
            if sep and key.strip() and " " not in key.strip():
                meta[key.strip()] = value.strip()
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer token in {raw!r}") from None
        if header is None:
            if a < 1:
                raise ZeroOrder(f"line {lineno}: order must be >= 1")
            if b < 0:
                raise ParseError(f"line {lineno}: negative edge count")
            header = (a, b)
        else:
            edges.append((a, b))
    if header is None:
        raise ParseError("missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header promises {m} edges, found {len(edges)}")
    return from_edge_list(n, edges), meta


def parse_graph(text: str) -> Graph:
    return parse_graph_with_meta(text)[0]


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path: str, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g, comments))
