import random

import pytest

from tricert import (
    GraphUsageError,
    InputError,
    MultiGraph,
    PathStep,
    Witness,
    build_subdivision,
    certify,
    find_next_path,
    is_3_connected_brute,
    simplify,
    verify_certificate,
    verify_witness,
)
from tricert.certformat import format_certificate

from helpers import FIG_IDS, counterexample_graph, figure_host, gnp, k4


def test_figure_search_finds_the_path():
    g, s0, _ = figure_host()
    sub = build_subdivision(g, s0)
    step = find_next_path(g, sub)
    assert isinstance(step, PathStep)
    assert step.nodes == (FIG_IDS["e"], FIG_IDS["h"], FIG_IDS["g"])


def test_apex_search_smallest_first():
    g = counterexample_graph()
    sub = build_subdivision(g, range(6))
    step = find_next_path(g, sub)
    assert step == PathStep((0, 4, 1))


def test_search_cut_vertex_branch():
    # K4 plus a pendant chain 0-4-5 that never reaches back: with the
    # degree gate bypassed, the search must name 0 as a cut vertex.
    g = MultiGraph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5)])
    sub = build_subdivision(g, range(6))
    w = find_next_path(g, sub)
    assert w == Witness("cut_vertex", (0,))
    assert verify_witness(g, w)


def test_search_separation_pair_branch():
    # Subdivide one K4 edge; the interior node's link endpoints separate
    # when nothing else is attachable.
    g = MultiGraph.from_edges(5, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 1)])
    g.add_node()
    g.add_edge(4, 5)
    g.add_edge(5, 4)
    sub = build_subdivision(g, range(7))
    w = find_next_path(g, sub)
    assert w == Witness("separation_pair", (0, 1))


def test_search_rejects_complete_cover():
    g = k4()
    sub = build_subdivision(g, range(6))
    with pytest.raises(GraphUsageError):
        find_next_path(g, sub)


def test_certify_k4_empty():
    result = certify(k4())
    assert result.certified
    assert result.certificate.steps == ()
    assert sorted(result.certificate.s0_edges) == list(range(6))


def test_certify_counterexample_prescribed():
    g = counterexample_graph()
    result = certify(g, prescribed_s0=range(6))
    assert result.certified
    assert [s.nodes for s in result.certificate.steps] == [(0, 4, 1), (4, 2)]
    assert verify_certificate(g, result.certificate).ok
    assert not verify_certificate(g, result.certificate, basic_mode=True).ok


def test_certify_k4_minus_edge_refuted():
    g = MultiGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    result = certify(g)
    assert not result.certified
    assert verify_witness(g, result.witness)


def test_certify_gates():
    assert certify(MultiGraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])).witness.kind == "too_few_nodes"
    two = MultiGraph.from_edges(8, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                                    (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)])
    assert certify(two).witness.kind == "disconnected"
    from helpers import cycle

    assert certify(cycle(6)).witness.kind == "low_degree"


def test_certify_prescribed_must_be_structural():
    g = counterexample_graph()
    with pytest.raises(InputError):
        certify(g, prescribed_s0=[0, 1, 3])


def test_certify_deterministic_bytes():
    g = gnp(9, 0.6, 11)
    r1 = certify(g)
    r2 = certify(g)
    assert r1.certified and r2.certified
    g_s, _ = simplify(g)
    assert format_certificate(g_s, r1.certificate) == format_certificate(g_s, r2.certificate)


def step_edge_count(step):
    if isinstance(step, PathStep):
        return len(step.nodes) - 1
    return sum(len(arm) - 1 for arm in step.arms)


@pytest.mark.parametrize("seed", range(120))
def test_certify_agrees_with_oracle(seed):
    rng = random.Random(seed)
    n = rng.randrange(4, 10)
    g = gnp(n, rng.choice([0.3, 0.5, 0.8]), seed * 1009 + 7)
    result = certify(g)
    truth = is_3_connected_brute(g)
    assert result.certified == truth
    if result.certified:
        cert = result.certificate
        assert verify_certificate(g, cert).ok
        g_s, _ = simplify(g)
        total = len(cert.s0_edges) + sum(step_edge_count(s) for s in cert.steps)
        assert total == g_s.n_live_edges
        assert len(cert.steps) <= g_s.n_live_edges
    else:
        assert verify_witness(g, result.witness)


@pytest.mark.parametrize("seed", range(30))
def test_certify_without_sparsifier_matches(seed):
    g = gnp(8, 0.5, seed * 13 + 5)
    assert certify(g).certified == certify(g, use_sparsify=False).certified
