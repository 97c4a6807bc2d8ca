from __future__ import annotations

import pytest
from hypothesis import given

from strategies import graphs
from wodkit import kernel
from wodkit.errors import (
    AllIsolated,
    EndpointOutOfRange,
    MemberOutOfRange,
    ParseError,
    SelfLoop,
    ZeroCopies,
    ZeroOrder,
)
from wodkit.graph import (
    Graph,
    bipartition,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_copies,
    disjoint_union,
    empty_graph,
    format_graph,
    from_edge_list,
    isolated_vertices,
    mask_of,
    max_degree,
    parse_graph,
    parse_graph_with_meta,
    path_graph,
    star_graph,
    strip_isolated,
    twin_classes,
    universal_vertices,
)
from wodkit.harness import all_graphs


def test_construction_examples():
    p3 = from_edge_list(3, [(0, 1), (1, 2)])
    assert p3.neighbors(1) == {0, 2}
    assert all(r == 0 for r in from_edge_list(4, []).rows)
    k2 = from_edge_list(2, [(0, 1), (1, 0)])
    assert k2.num_edges == 1 and list(k2.edges()) == [(0, 1)]


@pytest.mark.parametrize(
    "order, edges, err",
    [
        (0, [], ZeroOrder),
        (3, [(0, 3)], EndpointOutOfRange),
        (3, [(-1, 0)], EndpointOutOfRange),
        (3, [(1, 1)], SelfLoop),
    ],
)
def test_construction_errors(order, edges, err):
    with pytest.raises(err):
        from_edge_list(order, edges)


def test_asymmetric_rows_rejected():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))


def test_complement_examples():
    assert list(complement(path_graph(3)).edges()) == [(0, 2)]
    assert complement(complete_graph(3)) == empty_graph(3)
    assert complement(empty_graph(4)) == complete_graph(4)


def test_disjoint_copies_examples():
    g = disjoint_copies(complete_graph(2), 2)
    assert g.order == 4 and list(g.edges()) == [(0, 1), (2, 3)]
    p3 = path_graph(3)
    assert disjoint_copies(p3, 1) == p3
    g = disjoint_copies(p3, 3)
    assert (g.order, g.num_edges) == (9, 6)
    with pytest.raises(ZeroCopies):
        disjoint_copies(p3, 0)


def test_degree_queries():
    s = star_graph(3)
    assert (max_degree(s), isolated_vertices(s), universal_vertices(s)) == (3, frozenset(), {0})
    e = empty_graph(4)
    assert (max_degree(e), isolated_vertices(e), universal_vertices(e)) == (0, {0, 1, 2, 3}, frozenset())
    k4 = complete_graph(4)
    assert max_degree(k4) == 3 and universal_vertices(k4) == {0, 1, 2, 3}


def test_bipartition_examples():
    assert bipartition(path_graph(3)) == ({0, 2}, {1})
    assert bipartition(complete_graph(3)) is None
    assert bipartition(cycle_graph(4)) == ({0, 2}, {1, 3})


def test_strip_isolated_examples():
    g = from_edge_list(4, [(0, 1), (1, 2)])
    h, index = strip_isolated(g)
    assert h == path_graph(3) and index == {0: 0, 1: 1, 2: 2}
    k4 = complete_graph(4)
    assert strip_isolated(k4) == (k4, {v: v for v in range(4)})
    with pytest.raises(AllIsolated):
        strip_isolated(empty_graph(3))


def test_mask_of_rejects_out_of_range():
    assert mask_of({0, 2}, 3) == 0b101
    with pytest.raises(MemberOutOfRange):
        mask_of({3}, 3)


def _symmetric(g: Graph) -> bool:
    return all(
        (g.rows[u] >> v & 1) == (g.rows[v] >> u & 1) and not g.rows[u] >> u & 1
        for u in range(g.order)
        for v in range(g.order)
    )


@given(graphs(max_n=9))
def test_constructors_keep_rows_simple(g):
    for h in (g, complement(g), disjoint_copies(g, 2)):
        assert _symmetric(h)


@given(graphs(max_n=9))
def test_complement_is_involution(g):
    assert complement(complement(g)) == g


@given(graphs(min_n=1, max_n=6))
def test_disjoint_copies_edge_count(g):
    assert disjoint_copies(g, 3).num_edges == 3 * g.num_edges


def _components(g: Graph) -> int:
    seen, count = set(), 0
    for s in range(g.order):
        if s in seen:
            continue
        count += 1
        stack = [s]
        while stack:
            v = stack.pop()
            if v not in seen:
                seen.add(v)
                stack.extend(g.neighbors(v) - seen)
    return count


@given(graphs(max_n=6))
def test_disjoint_copies_components_of_connected(g):
    if _components(g) == 1:
        assert _components(disjoint_copies(g, 3)) == 3


def test_strip_isolated_preserves_kappa():
    # Graphs without isolated vertices are left unchanged.  Every 7-vertex graph
    # with an isolated vertex relabels to a 6-vertex graph plus one isolated
    # vertex, which is covered here in both the first and last position.
    cases = [g for n in range(1, 7) for g in all_graphs(n) if 0 in map(len, (g.neighbors(v) for v in range(n)))]
    for h in all_graphs(6):
        cases.append(disjoint_union(h, empty_graph(1)))
        cases.append(disjoint_union(empty_graph(1), h))
    for g in cases:
        if not any(g.rows):
            continue
        stripped, _ = strip_isolated(g)
        assert kernel.kappa(g).value == kernel.kappa(stripped).value


@given(graphs(max_n=9))
def test_format_parse_round_trip(g):
    text = format_graph(g, ["hello"])
    assert parse_graph(text) == g
    body = [line for line in text.splitlines() if not line.startswith("#")]
    pairs = [tuple(map(int, line.split())) for line in body[1:]]
    assert pairs == sorted(pairs) and all(u < v for u, v in pairs)


def test_parse_metadata_and_errors():
    g, meta = parse_graph_with_meta("# R: 0 1\n# just a note\n3 1\n0 2\n")
    assert g.num_edges == 1 and meta == {"R": "0 1"}
    with pytest.raises(ZeroOrder):
        parse_graph("0 0\n")
    with pytest.raises(ParseError):
        parse_graph("3 2\n0 1\n")
    with pytest.raises(ParseError):
        parse_graph("3 1\n0 x\n")
    with pytest.raises(ParseError):
        parse_graph("# only a comment\n")
    with pytest.raises(SelfLoop):
        parse_graph("2 1\n1 1\n")


@given(graphs(max_n=8))
def test_twin_classes_partition_and_share_neighbourhoods(g):
    classes = twin_classes(g)
    assert sorted(v for c in classes for v in c) == list(range(g.order))
    for c in classes:
        if len(c) > 1:
            opened = {g.rows[v] for v in c}
            closed = {g.rows[v] | 1 << v for v in c}
            assert len(opened) == 1 or len(closed) == 1
