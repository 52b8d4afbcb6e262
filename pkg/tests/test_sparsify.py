import random

import pytest

from tricert import MultiGraph, is_3_connected_brute, simplify, sparsify3

from helpers import complete, gnp, k4


def test_k4_unchanged():
    out, dec = sparsify3(k4())
    assert sorted(out.live_edges()) == list(range(6))
    assert len(dec.kept) == 6


def test_k8_bound_and_equivalence():
    g = complete(8)
    out, dec = sparsify3(g)
    assert out.n_live_edges <= 3 * 8 - 3
    assert out.n_live_nodes == 8
    assert is_3_connected_brute(out)


def test_two_k4s_sharing_a_pair():
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    edges += [(0, 1), (0, 4), (0, 5), (1, 4), (1, 5), (4, 5)]
    g, _ = simplify(MultiGraph.from_edges(6, edges))
    assert not is_3_connected_brute(g)
    out, _ = sparsify3(g)
    assert not is_3_connected_brute(out)
    # The same pair still separates.
    comp_ids = set()
    for v in (2, 4):
        comp_ids.add(v)
    banned = {0, 1}
    seen = {2}
    stack = [2]
    while stack:
        x = stack.pop()
        for e in out.incident(x):
            y = out.other_end(e, x)
            if y not in banned and y not in seen:
                seen.add(y)
                stack.append(y)
    assert 4 not in seen


def test_forests_are_acyclic_and_maximal():
    g = complete(7)
    _, dec = sparsify3(g)
    taken: set[int] = set()
    for forest in dec.forests:
        # Acyclic: union-find over the forest's edges never closes a cycle.
        parent = {}

        def find(x):
            while parent.get(x, x) != x:
                x = parent.get(x, x)
            return x

        for e in sorted(forest):
            u, v = g.ends(e)
            ru, rv = find(u), find(v)
            assert ru != rv, "forest contains a cycle"
            parent[ru] = rv
        # Maximal: every unused remaining edge closes a cycle inside it.
        for e in g.live_edges():
            if e in taken or e in forest:
                continue
            u, v = g.ends(e)
            assert find(u) == find(v), "forest is not maximal in its residue"
        taken |= forest


@pytest.mark.parametrize("seed", range(40))
def test_oracle_equivalence_random(seed):
    rng = random.Random(seed)
    n = rng.randrange(4, 11)
    g, _ = simplify(gnp(n, rng.choice([0.3, 0.5, 0.8]), seed * 31 + 1))
    out, dec = sparsify3(g)
    assert out.n_live_edges <= max(0, 3 * n - 3)
    assert is_3_connected_brute(g) == is_3_connected_brute(out)
