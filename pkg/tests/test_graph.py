import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tricert import (
    ContractError,
    GraphUsageError,
    MultiGraph,
    ParseError,
    connected_components,
    contract_edge,
    parse_graph,
    serialize_graph,
    simplify,
    smooth,
)

from helpers import k4, cycle


def test_parse_triangle():
    g = parse_graph("1 2\n2 3\n3 1")
    assert g.n_live_nodes == 3
    assert g.n_live_edges == 3


def test_parse_dimacs_k4():
    text = "c complete graph\np edge 4 6\n" + "".join(
        f"e {u} {v}\n" for u, v in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    )
    g = parse_graph(text, "dimacs")
    assert g.n_live_nodes == 4
    assert g.n_live_edges == 6
    assert all(g.degree(v) == 3 for v in g.live_nodes())


def test_parse_keeps_duplicates():
    g = parse_graph("1 2\n1 2")
    assert g.n_live_nodes == 2
    assert g.n_live_edges == 2


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 2"):
        parse_graph("1 2\n1 two\n")
    with pytest.raises(ParseError):
        parse_graph("p edge 2 1\ne 1 5\n", "dimacs")


def test_parse_comments_and_blanks():
    g = parse_graph("# header\n\n1 2  # trailing\n2 3\n")
    assert g.n_live_edges == 2


def test_serialize_sorted_with_labels():
    g = parse_graph("7 3\n3 5\n5 7\n")
    assert serialize_graph(g) == "3 5\n3 7\n5 7\n"


def test_simplify_k4_noop():
    g2, report = simplify(k4())
    assert g2.n_live_edges == 6
    assert report.removed_self_loops == 0
    assert report.merged_parallel_classes == ()


def test_simplify_merges_parallel():
    g = parse_graph("1 2\n2 3\n3 1\n1 2")
    g2, report = simplify(g)
    assert g2.n_live_edges == 3
    assert len(report.merged_parallel_classes) == 1
    kept, dups = report.merged_parallel_classes[0]
    assert kept == 0 and dups == (3,)


def test_simplify_drops_self_loop():
    g = MultiGraph.from_edges(1, [(0, 0)])
    g2, report = simplify(g)
    assert g2.n_live_edges == 0
    assert g2.n_live_nodes == 1
    assert report.removed_self_loops == 1


def test_smooth_path():
    g = MultiGraph.from_edges(3, [(0, 1), (1, 2)])
    g2 = smooth(g, 1)
    assert g2.n_live_nodes == 2
    assert g2.edge_between(0, 2) is not None
    # The original is untouched.
    assert g.n_live_nodes == 3


def test_smooth_refuses_degree3():
    g = k4()
    assert smooth(g, 0) is g


def test_smooth_refuses_parallel_pair():
    g = MultiGraph.from_edges(2, [(0, 1), (0, 1)])
    assert smooth(g, 0) is g


def test_smooth_dead_node_raises():
    g = MultiGraph.from_edges(3, [(0, 1), (1, 2)])
    g2 = smooth(g, 1)
    with pytest.raises(GraphUsageError):
        smooth(g2, 1)


def test_contract_k4_gives_triangle():
    g2 = contract_edge(k4(), 0)
    assert g2.n_live_nodes == 3
    assert g2.n_live_edges == 3


def test_contract_c4_gives_c3():
    g2 = contract_edge(cycle(4), 0)
    assert g2.n_live_nodes == 3
    assert g2.n_live_edges == 3


def test_contract_apex_back_to_k4():
    # K4 plus node 4 adjacent to 0, 1, 2; contracting (4, 0) merges the
    # doubled connections back into single edges.
    g = MultiGraph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1), (4, 2)])
    g2 = contract_edge(g, 6)
    assert g2.n_live_nodes == 4
    assert g2.n_live_edges == 6
    for u in g2.live_nodes():
        assert g2.degree(u) == 3


def test_contract_self_loop_rejected():
    g = MultiGraph.from_edges(2, [(0, 0), (0, 1)])
    with pytest.raises(ContractError):
        contract_edge(g, 0)


def test_components():
    assert connected_components(k4()) == [{0, 1, 2, 3}]
    two = MultiGraph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert connected_components(two) == [{0, 1, 2}, {3, 4, 5}]
    assert connected_components(MultiGraph()) == []


@st.composite
def multigraphs(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    m = draw(st.integers(min_value=0, max_value=16))
    edges = [
        (draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))) for _ in range(m)
    ]
    return MultiGraph.from_edges(n, edges)


@settings(max_examples=60)
@given(multigraphs())
def test_parse_serialize_roundtrip(g):
    text = serialize_graph(g)
    if not text:
        return
    g2 = parse_graph(text)
    assert serialize_graph(g2) == text


@settings(max_examples=60)
@given(multigraphs())
def test_simplify_idempotent(g):
    g1, _ = simplify(g)
    g2, rep = simplify(g1)
    assert rep == type(rep)()
    assert sorted(g1.live_edges()) == sorted(g2.live_edges())


@settings(max_examples=60)
@given(multigraphs())
def test_smooth_counts(g):
    for v in g.live_nodes():
        if g.degree(v) == 2 and len(g.neighbors(v)) == 2 and v not in g.neighbors(v):
            g2 = smooth(g, v)
            assert g2.n_live_nodes == g.n_live_nodes - 1
            assert g2.n_live_edges == g.n_live_edges - 1
            return


@settings(max_examples=60)
@given(multigraphs())
def test_contract_counts_and_simplicity(g):
    g, _ = simplify(g)
    for e in g.live_edges():
        g2 = contract_edge(g, e)
        assert g2.n_live_nodes == g.n_live_nodes - 1
        seen = set()
        for e2 in g2.live_edges():
            u, v = g2.ends(e2)
            assert u != v
            assert (min(u, v), max(u, v)) not in seen
            seen.add((min(u, v), max(u, v)))
        return
